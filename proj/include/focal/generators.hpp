#pragma once

#include <string>
#include <vector>

#include "focal/classifier.hpp"
#include "focal/rng.hpp"

namespace focal {

namespace gen_detail {

/// Random integer point of P^4 with small entries, not identically zero.
inline RatVec random_point(SeedStream& rng, std::int64_t bound = 4) {
    for (;;) {
        RatVec p(5);
        bool nz = false;
        for (int i = 0; i < 5; ++i) {
            p[i] = Rat(rng.next_int(-bound, bound));
            if (!focal::is_zero(p[i])) nz = true;
        }
        if (nz) return p;
    }
}

inline PointMap pm_zero() { return PointMap{}; }

inline void pm_add(PointMap& pm, const RatVec& pt, const BivarPoly& mono) {
    for (int i = 0; i < 5; ++i) pm[i] += BivarPoly(pt[i]) * mono;
}

inline PointMap pm_const(const RatVec& pt) {
    PointMap pm = pm_zero();
    pm_add(pm, pt, BivarPoly(Rat(1)));
    return pm;
}

inline PointMap pm_du(const PointMap& pm) {
    PointMap d;
    for (int i = 0; i < 5; ++i) d[i] = pm[i].du();
    return d;
}

inline PointMap pm_dv(const PointMap& pm) {
    PointMap d;
    for (int i = 0; i < 5; ++i) d[i] = pm[i].dv();
    return d;
}

inline PointMap pm_sum(const PointMap& a, const PointMap& b) {
    PointMap s;
    for (int i = 0; i < 5; ++i) s[i] = a[i] + b[i];
    return s;
}

/// Random polynomial curve u -> P^4 of the given degree.
inline PointMap random_curve_u(SeedStream& rng, int degree, std::int64_t bound = 3) {
    PointMap pm = pm_zero();
    for (int d = 0; d <= degree; ++d)
        pm_add(pm, random_point(rng, bound), BivarPoly::var_u().pow(d));
    return pm;
}

/// Random polynomial surface patch (u,v) -> P^4 of the given total degree.
inline PointMap random_surface(SeedStream& rng, int degree, std::int64_t bound = 3) {
    PointMap pm = pm_zero();
    for (int a = 0; a <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b)
            pm_add(pm, random_point(rng, bound),
                   BivarPoly::var_u().pow(a) * BivarPoly::var_v().pow(b));
    return pm;
}

inline PlaneChart candidate(ClassLabel target, SeedStream& rng) {
    PlaneChart c;
    BivarPoly u = BivarPoly::var_u(), v = BivarPoly::var_v();
    switch (target) {
        case ClassLabel::Delta: {
            // Planes through a fixed line <P1, P2>.
            c.maps[0] = pm_const(random_point(rng));
            c.maps[1] = pm_const(random_point(rng));
            PointMap m = pm_const(random_point(rng));
            pm_add(m, random_point(rng), u);
            pm_add(m, random_point(rng), v);
            c.maps[2] = m;
            break;
        }
        case ClassLabel::Beta1: {
            // Tangent planes to a translation surface x = f(u) + g(v).
            PointMap f = random_curve_u(rng, 3);
            PointMap g = pm_zero();
            for (int d = 0; d <= 3; ++d) pm_add(g, random_point(rng), v.pow(d));
            c.maps[0] = pm_sum(f, g);
            c.maps[1] = pm_du(f);
            c.maps[2] = pm_dv(g);
            break;
        }
        case ClassLabel::Gamma1: {
            // Tangent planes to a ruled surface x = a(u) + v d(u).
            PointMap a = random_curve_u(rng, 3);
            PointMap d = random_curve_u(rng, 2);
            PointMap x = a;
            for (int i = 0; i < 5; ++i) x[i] += v * d[i];
            c.maps[0] = x;
            c.maps[1] = pm_du(x);
            c.maps[2] = d;
            break;
        }
        case ClassLabel::Beta2: {
            // Planes through the tangent lines of a curve.
            PointMap a = random_curve_u(rng, 4);
            c.maps[0] = a;
            c.maps[1] = pm_du(a);
            PointMap m = pm_const(random_point(rng));
            pm_add(m, random_point(rng), u);
            pm_add(m, random_point(rng), v);
            c.maps[2] = m;
            break;
        }
        case ClassLabel::Gamma2: {
            // Pencils through the tangent lines containing the osculating
            // plane: <a, a', a'' + v w>.
            PointMap a = random_curve_u(rng, 4);
            c.maps[0] = a;
            c.maps[1] = pm_du(a);
            PointMap m = pm_du(pm_du(a));
            pm_add(m, random_point(rng), v);
            c.maps[2] = m;
            break;
        }
        case ClassLabel::Beta3: {
            // Cone over a hyperbolic line congruence: vertex joined to the
            // lines connecting two curves.
            c.maps[0] = pm_const(random_point(rng));
            c.maps[1] = random_curve_u(rng, 2);
            PointMap b = pm_zero();
            for (int d = 0; d <= 2; ++d) pm_add(b, random_point(rng), v.pow(d));
            c.maps[2] = b;
            break;
        }
        case ClassLabel::Gamma3: {
            // Cone over a parabolic line congruence: all lines pass through a
            // moving point of a curve, so the focus on each line is double.
            c.maps[0] = pm_const(random_point(rng));
            PointMap a = random_curve_u(rng, 2);
            c.maps[1] = a;
            PointMap m = random_curve_u(rng, 2);
            for (int i = 0; i < 5; ++i) m[i] += v * a[i].du();
            c.maps[2] = m;
            break;
        }
        case ClassLabel::Alpha1: {
            // Osculating planes of the u-curves of a generic surface.
            PointMap x = random_surface(rng, 3);
            c.maps[0] = x;
            c.maps[1] = pm_du(x);
            c.maps[2] = pm_du(pm_du(x));
            break;
        }
        case ClassLabel::Alpha2: {
            // Tangent planes to a family of cones with vertices on a curve.
            PointMap vert = random_curve_u(rng, 2);
            PointMap g = pm_zero();
            for (int d = 0; d <= 2; ++d) pm_add(g, random_point(rng), v.pow(d));
            pm_add(g, random_point(rng), u);
            c.maps[0] = vert;
            c.maps[1] = g;
            c.maps[2] = pm_dv(g);
            break;
        }
        case ClassLabel::Alpha3: {
            // Planes through the generators of a non-developable ruled surface.
            c.maps[0] = random_curve_u(rng, 2);
            c.maps[1] = random_curve_u(rng, 2);
            PointMap m = pm_const(random_point(rng));
            pm_add(m, random_point(rng), v);
            pm_add(m, random_point(rng), v.pow(2));
            c.maps[2] = m;
            break;
        }
        case ClassLabel::IrreducibleConic: {
            // Generic charts have an irreducible focal conic.
            for (int m = 0; m < 3; ++m) c.maps[m] = random_surface(rng, 1, 5);
            break;
        }
        default:
            throw Error(ErrorKind::GenerationFailed,
                        std::string("no generator for label ") + to_string(target));
    }
    return c;
}

}  // namespace gen_detail

/// Deterministic random chart with the requested classification, verified by
/// running the classifier on each candidate; rejection-samples until the
/// label matches.
inline PlaneChart generate(ClassLabel target, std::uint64_t seed, std::size_t attempts = 64) {
    SeedStream rng(seed ^ (0x67656eULL + static_cast<std::uint64_t>(target) * 0x100000001b3ULL));
    for (std::size_t k = 0; k < attempts; ++k) {
        PlaneChart c = gen_detail::candidate(target, rng);
        try {
            RunConfig cfg{seed + k, 3, 8};
            if (classify(c, cfg).label != target) continue;
        } catch (const Error&) {
            continue;
        }
        c.name = std::string(to_string(target)) + "-" + std::to_string(seed);
        c.expect = to_string(target);
        return c;
    }
    throw Error(ErrorKind::GenerationFailed,
                std::string("could not generate a ") + to_string(target) +
                    " chart within the attempt budget");
}

/// A projective change of coordinates of P^4, an affine reparametrization of
/// (u,v), and a change of the spanning basis of the moving plane.
struct ChartTransform {
    RatMat coords;                      // 5x5, invertible
    std::array<std::array<Rat, 3>, 2> reparam;  // u -> r[0][0] u + r[0][1] v + r[0][2], same for v
    RatMat respan;                      // 3x3, invertible
};

inline ChartTransform identity_transform() {
    ChartTransform t;
    t.coords = RatMat(5, RatVec(5, Rat(0)));
    for (int i = 0; i < 5; ++i) t.coords[i][i] = 1;
    t.reparam = {{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}}};
    t.respan = RatMat(3, RatVec(3, Rat(0)));
    for (int i = 0; i < 3; ++i) t.respan[i][i] = 1;
    return t;
}

inline ChartTransform random_transform(SeedStream& rng, std::int64_t bound = 3) {
    ChartTransform t = identity_transform();
    auto fill = [&](RatMat& m) {
        for (;;) {
            for (auto& row : m)
                for (auto& x : row) x = Rat(rng.next_int(-bound, bound));
            if (mat_rank(m) == m.size()) return;
        }
    };
    fill(t.coords);
    fill(t.respan);
    for (;;) {
        for (auto& row : t.reparam)
            for (auto& x : row) x = Rat(rng.next_int(-bound, bound));
        Rat det = t.reparam[0][0] * t.reparam[1][1] - t.reparam[0][1] * t.reparam[1][0];
        if (!focal::is_zero(det)) break;
    }
    return t;
}

/// Apply a transform; the classification of the result equals that of the
/// input (class labels are projective invariants and chart-independent).
inline PlaneChart transform_chart(const PlaneChart& chart, const ChartTransform& t) {
    if (mat_rank(t.coords) != 5 || mat_rank(t.respan) != 3)
        throw Error(ErrorKind::SingularTransform, "coordinate or respan matrix is singular");
    Rat det = t.reparam[0][0] * t.reparam[1][1] - t.reparam[0][1] * t.reparam[1][0];
    if (focal::is_zero(det))
        throw Error(ErrorKind::SingularTransform, "parameter change is singular");

    BivarPoly su = BivarPoly(t.reparam[0][2]) +
                   t.reparam[0][0] * BivarPoly::var_u() + t.reparam[0][1] * BivarPoly::var_v();
    BivarPoly sv = BivarPoly(t.reparam[1][2]) +
                   t.reparam[1][0] * BivarPoly::var_u() + t.reparam[1][1] * BivarPoly::var_v();

    std::array<PointMap, 3> reparamed;
    for (int m = 0; m < 3; ++m)
        for (int i = 0; i < 5; ++i) reparamed[m][i] = chart.maps[m][i].substitute(su, sv);

    std::array<PointMap, 3> recoord;
    for (int m = 0; m < 3; ++m)
        for (int i = 0; i < 5; ++i) {
            BivarPoly acc;
            for (int j = 0; j < 5; ++j) acc += t.coords[i][j] * reparamed[m][j];
            recoord[m][i] = acc;
        }

    PlaneChart out;
    out.name = chart.name;
    out.expect = chart.expect;
    for (int m = 0; m < 3; ++m)
        for (int i = 0; i < 5; ++i) {
            BivarPoly acc;
            for (int k = 0; k < 3; ++k) acc += t.respan[m][k] * recoord[k][i];
            out.maps[m][i] = acc;
        }
    return out;
}

}  // namespace focal
