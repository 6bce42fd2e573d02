#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "focal/error.hpp"
#include "focal/scalar.hpp"

namespace focal {

/// Homogeneous binary form in (lambda, mu). coeffs[i] multiplies
/// lambda^(deg-i) mu^i. The zero form is represented explicitly as
/// degree 0 with coefficient 0.
struct BinaryForm {
    std::vector<Rat> coeffs;  // size = degree + 1

    BinaryForm() : coeffs{Rat(0)} {}
    explicit BinaryForm(std::vector<Rat> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) coeffs = {Rat(0)};
    }

    static BinaryForm zero() { return BinaryForm(); }
    static BinaryForm constant(Rat c) { return BinaryForm({std::move(c)}); }
    static BinaryForm linear(Rat a, Rat b) { return BinaryForm({std::move(a), std::move(b)}); }
    static BinaryForm quadratic(Rat a, Rat b, Rat c) {
        return BinaryForm({std::move(a), std::move(b), std::move(c)});
    }

    std::size_t degree() const { return coeffs.size() - 1; }
    bool is_zero() const {
        for (const Rat& c : coeffs)
            if (c != 0) return false;
        return true;
    }

    Rat eval(const Rat& lambda, const Rat& mu) const {
        std::vector<Rat> lpows(coeffs.size());
        Rat lpow(1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            lpows[coeffs.size() - 1 - i] = lpow;
            lpow *= lambda;
        }
        Rat out(0), mupow(1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            out += coeffs[i] * lpows[i] * mupow;
            mupow *= mu;
        }
        return out;
    }

    /// Leading coefficient scaled to 1 (zero form unchanged).
    BinaryForm monic() const {
        for (const Rat& c : coeffs) {
            if (c != 0) {
                std::vector<Rat> out(coeffs.size());
                for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = coeffs[i] / c;
                return BinaryForm(std::move(out));
            }
        }
        return *this;
    }

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

/// b^2 - 4ac; zero iff the quadratic has a double root, a rational square iff
/// the roots are rational.
inline Rat binform_disc(const BinaryForm& f) {
    if (f.degree() != 2)
        throw Error(ErrorKind::WrongDegree, "discriminant needs a degree-2 form");
    return f.coeffs[1] * f.coeffs[1] - 4 * f.coeffs[0] * f.coeffs[2];
}

/// Rational root (lambda:mu) of a degree-1 form, or of a degree-2 form with
/// a double root; nullopt otherwise.
inline std::optional<std::pair<Rat, Rat>> binform_rational_root(const BinaryForm& f) {
    if (f.is_zero()) return std::nullopt;
    if (f.degree() == 1) {
        // a*lambda + b*mu = 0  ->  (-b : a)
        return std::make_pair(-f.coeffs[1], f.coeffs[0]);
    }
    if (f.degree() == 2 && binform_disc(f) == 0) {
        const Rat& a = f.coeffs[0];
        const Rat& b = f.coeffs[1];
        if (a != 0) return std::make_pair(-b, 2 * a);
        // a = 0 and disc = 0 forces b = 0: form is c*mu^2, root (1:0).
        return std::make_pair(Rat(1), Rat(0));
    }
    return std::nullopt;
}

namespace detail {

// Dense univariate polynomials, ascending coefficients, no trailing zeros.
using UniPoly = std::vector<Rat>;

inline void trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b; b must be nonzero and trimmed.
inline UniPoly poly_rem(UniPoly a, const UniPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UniPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

/// F = mu^k * H(lambda, mu) with H(lambda,1) the returned univariate and
/// k the multiplicity of the root (1:0).
inline std::pair<UniPoly, std::size_t> dehomogenize(const BinaryForm& f) {
    std::size_t d = f.degree();
    std::size_t mu_mult = 0;
    while (mu_mult <= d && f.coeffs[mu_mult] == 0) ++mu_mult;
    UniPoly p;  // coefficient of t^j is coeffs[d - j]
    for (std::size_t j = 0; j + mu_mult <= d; ++j) p.push_back(f.coeffs[d - j]);
    trim(p);
    return {p, mu_mult};
}

inline BinaryForm homogenize(const UniPoly& p, std::size_t mu_power) {
    if (p.empty()) {
        // pure mu power
        std::vector<Rat> c(mu_power + 1, Rat(0));
        c[mu_power] = 1;
        return BinaryForm(std::move(c)).monic();
    }
    std::size_t e = p.size() - 1;
    std::vector<Rat> c(e + mu_power + 1, Rat(0));
    for (std::size_t j = 0; j <= e; ++j) c[mu_power + e - j] = p[j];
    return BinaryForm(std::move(c));
}

}  // namespace detail

/// AllOfP1: every input was the zero form.
struct AllOfP1 {};

using BinformGcd = std::variant<BinaryForm, AllOfP1>;

/// Monic gcd of the nonzero inputs; AllOfP1 iff all inputs are zero.
inline BinformGcd binform_gcd(const std::vector<BinaryForm>& forms) {
    bool seen = false;
    detail::UniPoly g;
    std::size_t mu_mult = 0;
    for (const BinaryForm& f : forms) {
        if (f.is_zero()) continue;
        auto [p, m] = detail::dehomogenize(f);
        if (!seen) {
            g = p;
            mu_mult = m;
            seen = true;
        } else {
            g = detail::poly_gcd(g, p);
            mu_mult = std::min(mu_mult, m);
        }
    }
    if (!seen) return AllOfP1{};
    return detail::homogenize(g, mu_mult).monic();
}

/// True iff g divides f with zero remainder (as binary forms).
inline bool binform_divides(const BinaryForm& g, const BinaryForm& f) {
    if (g.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    auto [gp, gm] = detail::dehomogenize(g);
    auto [fp, fm] = detail::dehomogenize(f);
    if (gm > fm) return false;
    if (gp.empty()) return true;  // g is a pure mu power already covered
    if (fp.size() < gp.size()) return false;
    auto r = detail::poly_rem(fp, gp);
    return r.empty();
}

inline BinaryForm binform_mul(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() || b.is_zero()) return BinaryForm::zero();
    std::vector<Rat> c(a.degree() + b.degree() + 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return BinaryForm(std::move(c));
}

}  // namespace focal
