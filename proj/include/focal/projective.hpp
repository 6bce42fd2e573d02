#pragma once

#include <array>
#include <string>
#include <vector>

#include "focal/error.hpp"
#include "focal/linalg.hpp"
#include "focal/scalar.hpp"

namespace focal {

namespace detail {

/// Canonical representative of a homogeneous coordinate vector: clear
/// denominators, divide by the integer content, make the first nonzero
/// entry positive. Unique per projective class, so equality and printing
/// are exact.
inline RatVec proj_canonical(RatVec v) {
    Int l(1);
    for (const Rat& x : v)
        if (!focal::is_zero(x)) l = boost::multiprecision::lcm(l, den(x));
    Int g(0);
    for (Rat& x : v) {
        x *= Rat(l);
        if (!focal::is_zero(x)) g = boost::multiprecision::gcd(g, num(x));
    }
    if (g != 0) {
        bool flip = false;
        for (const Rat& x : v) {
            if (!focal::is_zero(x)) {
                flip = x < 0;
                break;
            }
        }
        Rat d(flip ? -g : g);
        for (Rat& x : v) x /= d;
    }
    return v;
}

}  // namespace detail

/// Point of P^4 in homogeneous coordinates, stored canonically.
struct ProjPoint {
    RatVec coords;  // size 5

    ProjPoint() : coords(5, Rat(0)) {}
    explicit ProjPoint(RatVec c) : coords(detail::proj_canonical(std::move(c))) {
        if (focal::is_zero(coords))
            throw Error(ErrorKind::NotAPoint, "zero vector is not a projective point");
    }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Hyperplane of P^4 in dual coordinates.
struct Hyperplane {
    RatVec coeffs;  // size 5

    explicit Hyperplane(RatVec c) : coeffs(detail::proj_canonical(std::move(c))) {
        if (focal::is_zero(coeffs))
            throw Error(ErrorKind::NotAPoint, "zero vector is not a hyperplane");
    }

    Rat eval(const ProjPoint& p) const { return dot(coeffs, p.coords); }
};

/// Line of P^4: two spanning points plus the canonical Pluecker vector
/// (the 10 exterior products p_ij, i<j) used for exact comparison.
struct ProjLine {
    ProjPoint a, b;
    RatVec pluecker;  // size 10, canonical

    ProjLine(ProjPoint pa, ProjPoint pb) : a(std::move(pa)), b(std::move(pb)) {
        RatVec w;
        w.reserve(10);
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                w.push_back(a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i]);
        pluecker = detail::proj_canonical(std::move(w));
        if (focal::is_zero(pluecker))
            throw Error(ErrorKind::NotALine, "spanning points are not independent");
    }

    friend bool operator==(const ProjLine& x, const ProjLine& y) {
        return x.pluecker == y.pluecker;
    }
};

/// Plane of P^4: three spanning points.
struct ProjPlane {
    std::array<ProjPoint, 3> span;

    ProjPlane(ProjPoint p, ProjPoint q, ProjPoint r) : span{std::move(p), std::move(q), std::move(r)} {}
};

inline std::size_t span_rank(const std::vector<RatVec>& points) {
    return mat_rank(RatMat(points.begin(), points.end()));
}

inline bool proj_equal(const ProjPoint& a, const ProjPoint& b) { return a == b; }
inline bool proj_equal(const ProjLine& a, const ProjLine& b) { return a == b; }

/// Equality up to scale for raw coordinate vectors.
inline bool proj_equal(const RatVec& a, const RatVec& b) {
    return !focal::is_zero(a) && !focal::is_zero(b) && proportional(a, b);
}

/// Local dimension of the image of a parametrized map at a generic point:
/// rank of [value; derivatives] minus one. Derivative vectors are supplied
/// explicitly so callers can mix jet-derived and analytic derivatives.
inline std::size_t image_dim(const RatVec& value, const std::vector<RatVec>& derivatives) {
    RatMat m;
    m.push_back(value);
    for (const auto& d : derivatives) m.push_back(d);
    return mat_rank(std::move(m)) - 1;
}

}  // namespace focal
