#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "focal/binform.hpp"
#include "focal/chart.hpp"
#include "focal/error.hpp"
#include "focal/linalg.hpp"
#include "focal/projective.hpp"

namespace focal {

/// The four characteristic linear forms in plane coordinates (a,b,c):
/// L1u = N1.Q_u, L1v = N1.Q_v, L2u = N2.Q_u, L2v = N2.Q_v, each stored as
/// its length-3 coefficient vector. Coefficients are jets, exact to order 2,
/// so the forms carry their own (u,v)-derivatives.
struct CharForms {
    JetVec l1u, l1v, l2u, l2v;
};

inline CharForms characteristic_forms(const JetFrame& frame) {
    CharForms f;
    f.l1u.resize(3);
    f.l1v.resize(3);
    f.l2u.resize(3);
    f.l2v.resize(3);
    for (int m = 0; m < 3; ++m) {
        f.l1u[m] = dot(frame.duals[0], frame.dpu[m]);
        f.l1v[m] = dot(frame.duals[0], frame.dpv[m]);
        f.l2u[m] = dot(frame.duals[1], frame.dpu[m]);
        f.l2v[m] = dot(frame.duals[1], frame.dpv[m]);
    }
    return f;
}

/// The focal conic as a symmetric 3x3 matrix M with Q^T M Q equal to
/// L1u*L2v - L1v*L2u, plus its exact rank.
struct FocalConic {
    RatMat matrix;  // 3x3 symmetric
    std::size_t rank;

    Rat eval(const RatVec& w) const {
        Rat s(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += w[i] * matrix[i][j] * w[j];
        return s;
    }
};

inline FocalConic focal_conic(const CharForms& f) {
    RatVec p = constant_part(f.l1u), q = constant_part(f.l1v);
    RatVec r = constant_part(f.l2u), s = constant_part(f.l2v);
    RatMat m(3, RatVec(3, Rat(0)));
    Rat half(1, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = half * (p[i] * s[j] + p[j] * s[i] - q[i] * r[j] - q[j] * r[i]);
    std::size_t rank = mat_rank(m);
    return {std::move(m), rank};
}

/// The developable directions D on P^1: common zeros of the three 2x2 minors
/// of the 2x3 coefficient matrix of (lambda L1u + mu L1v, lambda L2u + mu L2v).
struct DirectionSet {
    enum class Kind { Empty, Finite, All };
    Kind kind = Kind::Empty;
    BinaryForm gcd;                            // Finite only, degree 1 or 2
    int distinct_roots = 0;                    // Finite only
    bool double_root = false;                  // Finite, degree 2
    std::optional<std::pair<Rat, Rat>> root;   // rational root when degree 1 or double

    bool contains(const Rat& lambda, const Rat& mu) const {
        if (kind == Kind::All) return true;
        if (kind == Kind::Empty) return false;
        return focal::is_zero(gcd.eval(lambda, mu));
    }
};

namespace engine_detail {

/// The three minors as degree-2 binary forms in (lambda,mu), with T
/// coefficients (Rat for point classification, Jet2 for lifting).
template <typename Vec>
inline std::array<std::array<typename Vec::value_type, 3>, 3>
direction_minors(const Vec& p, const Vec& q, const Vec& r, const Vec& s) {
    std::array<std::array<typename Vec::value_type, 3>, 3> out;
    int idx = 0;
    for (int j = 0; j < 3; ++j) {
        for (int k = j + 1; k < 3; ++k) {
            out[idx][0] = p[j] * r[k] - p[k] * r[j];
            out[idx][1] = p[j] * s[k] + q[j] * r[k] - p[k] * s[j] - q[k] * r[j];
            out[idx][2] = q[j] * s[k] - q[k] * s[j];
            ++idx;
        }
    }
    return out;
}

inline DirectionSet directions_from_forms(const std::vector<BinaryForm>& minors) {
    DirectionSet d;
    auto g = binform_gcd(minors);
    if (std::holds_alternative<AllOfP1>(g)) {
        d.kind = DirectionSet::Kind::All;
        return d;
    }
    BinaryForm gb = std::get<BinaryForm>(g);
    if (gb.degree() == 0) {
        d.kind = DirectionSet::Kind::Empty;
        return d;
    }
    d.kind = DirectionSet::Kind::Finite;
    d.gcd = gb;
    if (gb.degree() == 1) {
        d.distinct_roots = 1;
        d.root = binform_rational_root(gb);
    } else {
        d.double_root = focal::is_zero(binform_disc(gb));
        d.distinct_roots = d.double_root ? 1 : 2;
        if (d.double_root) d.root = binform_rational_root(gb);
    }
    return d;
}

}  // namespace engine_detail

inline DirectionSet developable_directions(const CharForms& f) {
    auto m = engine_detail::direction_minors(constant_part(f.l1u), constant_part(f.l1v),
                                             constant_part(f.l2u), constant_part(f.l2v));
    std::vector<BinaryForm> forms;
    for (auto& coeffs : m)
        forms.push_back(BinaryForm::quadratic(coeffs[0], coeffs[1], coeffs[2]));
    return engine_detail::directions_from_forms(forms);
}

/// Focal locus on the plane for one direction.
struct FocalLocus {
    enum class Kind { EmptyLocus, Point, Line, WholePlane };
    Kind kind;
    RatVec point;  // plane coords (a:b:c) when Point
    RatVec line;   // coefficient vector of the linear form cutting the line
};

inline FocalLocus focal_locus_for_direction(const CharForms& f, const Rat& lambda, const Rat& mu) {
    RatVec p = constant_part(f.l1u), q = constant_part(f.l1v);
    RatVec r = constant_part(f.l2u), s = constant_part(f.l2v);
    RatVec f1(3), f2(3);
    for (int i = 0; i < 3; ++i) {
        f1[i] = lambda * p[i] + mu * q[i];
        f2[i] = lambda * r[i] + mu * s[i];
    }
    bool z1 = focal::is_zero(f1), z2 = focal::is_zero(f2);
    if (z1 && z2) return {FocalLocus::Kind::WholePlane, {}, {}};
    if (z1) return {FocalLocus::Kind::Line, {}, f2};
    if (z2) return {FocalLocus::Kind::Line, {}, f1};
    RatVec x = cross3(f1, f2);
    if (focal::is_zero(x)) return {FocalLocus::Kind::Line, {}, f1};
    return {FocalLocus::Kind::Point, x, {}};
}

/// The point focal for every direction (beta/gamma congruences), as plane
/// coordinates with jet entries: solved at a generic rational direction via
/// the jet cross product, so the result carries exact derivatives to order 2
/// (up to a unit scalar function, which every downstream use quotients out).
inline JetVec universal_focal_point(const CharForms& f) {
    DirectionSet d = developable_directions(f);
    if (d.kind == DirectionSet::Kind::All)
        throw Error(ErrorKind::NotAPoint, "every direction is developable");
    static const std::pair<int, int> candidates[] = {
        {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}, {1, 5}, {5, 1}};
    for (auto [l, m] : candidates) {
        Rat lambda(l), mu(m);
        if (d.contains(lambda, mu)) continue;
        JetVec f1(3), f2(3);
        for (int i = 0; i < 3; ++i) {
            f1[i] = lambda * f.l1u[i] + mu * f.l1v[i];
            f2[i] = lambda * f.l2u[i] + mu * f.l2v[i];
        }
        JetVec x = cross3(f1, f2);
        if (!focal::is_zero(constant_part(x))) return x;
        throw Error(ErrorKind::NotAPoint,
                    "generic-direction focal locus is not a point");
    }
    throw Error(ErrorKind::NotAPoint, "no generic direction available");
}

/// Pencil structure of Section-1.2 style analysis of the two pencils
/// (f11,f21) = (L1u,L1v) and (f12,f22) = (L2u,L2v).
struct PencilConfig {
    enum class Kind {
        OneDegenerate,
        BothDegenerateDistinct,
        BothDegenerateCoincident,
        DistinctBasePoints,
        SameBasePoint,
    };
    enum class Eigen { TwoDistinct, Double, All };

    Kind kind;
    // SameBasePoint payload:
    std::array<std::array<Rat, 2>, 2> a_matrix{};  // [[l1,l2],[m1,m2]]
    Rat disc;                                      // (m2-l1)^2 + 4*m1*l2
    Eigen eigen = Eigen::TwoDistinct;
};

inline PencilConfig pencil_configuration(const CharForms& cf) {
    RatVec f11 = constant_part(cf.l1u), f21 = constant_part(cf.l1v);
    RatVec f12 = constant_part(cf.l2u), f22 = constant_part(cf.l2v);
    bool z1 = focal::is_zero(f11) && focal::is_zero(f21);
    bool z2 = focal::is_zero(f12) && focal::is_zero(f22);
    if (z1 || z2)
        throw Error(ErrorKind::ZeroPencil, "a pencil has both forms zero");

    bool deg1 = proportional(f11, f21);
    bool deg2 = proportional(f12, f22);
    if (deg1 && deg2) {
        const RatVec& line1 = focal::is_zero(f11) ? f21 : f11;
        const RatVec& line2 = focal::is_zero(f12) ? f22 : f12;
        return {proportional(line1, line2) ? PencilConfig::Kind::BothDegenerateCoincident
                                           : PencilConfig::Kind::BothDegenerateDistinct};
    }

    // Put a nondegenerate pencil first so (f11,f21) is a basis when the base
    // points coincide.
    if (deg1) {
        std::swap(f11, f12);
        std::swap(f21, f22);
        std::swap(deg1, deg2);
    }

    // Is the second pencil contained in the span of the first?
    bool in_span = mat_rank({f11, f21, f12}) == 2 && mat_rank({f11, f21, f22}) == 2;
    if (in_span) {
        // Solve f12 = l1 f11 + m1 f21, f22 = l2 f11 + m2 f21.
        auto solve2 = [&](const RatVec& rhs) -> std::array<Rat, 2> {
            // 3 equations, 2 unknowns; consistent by in_span. Use two
            // independent coordinates of the basis.
            for (int i = 0; i < 3; ++i) {
                for (int j = i + 1; j < 3; ++j) {
                    Rat det = f11[i] * f21[j] - f11[j] * f21[i];
                    if (det != 0) {
                        Rat x = (rhs[i] * f21[j] - rhs[j] * f21[i]) / det;
                        Rat y = (f11[i] * rhs[j] - f11[j] * rhs[i]) / det;
                        return {x, y};
                    }
                }
            }
            throw Error(ErrorKind::ZeroPencil, "degenerate basis in pencil solve");
        };
        auto [l1, m1] = solve2(f12);
        auto [l2, m2] = solve2(f22);
        PencilConfig out;
        out.kind = PencilConfig::Kind::SameBasePoint;
        out.a_matrix = {{{l1, l2}, {m1, m2}}};
        out.disc = (m2 - l1) * (m2 - l1) + 4 * m1 * l2;
        if (m1 == 0 && l2 == 0 && l1 == m2)
            out.eigen = PencilConfig::Eigen::All;
        else if (focal::is_zero(out.disc))
            out.eigen = PencilConfig::Eigen::Double;
        else
            out.eigen = PencilConfig::Eigen::TwoDistinct;
        return out;
    }

    if (deg2) return {PencilConfig::Kind::OneDegenerate};
    return {PencilConfig::Kind::DistinctBasePoints};
}

namespace engine_detail {

/// Hensel/Newton lift of a simple rational root of one of the direction
/// minors to a jet root (lambda(u,v) : mu(u,v)). Requires the root to be
/// simple in at least one nonzero minor; verifies the lift kills the other
/// minors as jets (non-generic samples fail this and must be redrawn).
inline std::pair<Jet2, Jet2> lift_direction(const CharForms& f, const Rat& lambda0,
                                            const Rat& mu0) {
    auto minors = direction_minors(f.l1u, f.l1v, f.l2u, f.l2v);
    bool dehom_mu = mu0 != 0;  // parametrize as (t:1), else (1:t)
    Rat t0 = dehom_mu ? lambda0 / mu0 : mu0 / lambda0;

    auto coeff = [&](const std::array<Jet2, 3>& m, int i) -> const Jet2& {
        // For (t:1): q(t) = m0 t^2 + m1 t + m2. For (1:t): q(t) = m2 t^2 + m1 t + m0.
        return dehom_mu ? m[i] : m[2 - i];
    };

    std::optional<Jet2> lifted;
    for (const auto& m : minors) {
        if (m[0].is_zero() && m[1].is_zero() && m[2].is_zero()) continue;
        const Jet2 &A = coeff(m, 0), &B = coeff(m, 1), &C = coeff(m, 2);
        Rat deriv = 2 * A.c00 * t0 + B.c00;
        if (focal::is_zero(deriv)) continue;  // root not simple in this minor
        Jet2 t = jet_const(t0);
        for (int it = 0; it < 2; ++it) {
            Jet2 val = (A * t + B) * t + C;
            Jet2 dval = 2 * A * t + B;
            t = t - val / dval;
        }
        lifted = t;
        break;
    }
    if (!lifted)
        throw Error(ErrorKind::NonGenericSample, "direction root not simple in any minor");

    Jet2 lam = dehom_mu ? *lifted : jet_const(Rat(1));
    Jet2 mu = dehom_mu ? jet_const(Rat(1)) : *lifted;
    // The lift must be a common root of all three minors as jets.
    for (const auto& m : minors) {
        Jet2 val = m[0] * lam * lam + m[1] * lam * mu + m[2] * mu * mu;
        if (!val.is_zero())
            throw Error(ErrorKind::NonGenericSample,
                        "developable direction field inconsistent across minors");
    }
    return {lam, mu};
}

/// Kernel of a single nonzero linear form with jet coefficients: two plane
/// coordinate vectors, division-free.
inline std::array<JetVec, 2> form_kernel(const JetVec& form) {
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
        if (form[i].is_unit()) pivot = i;
    if (pivot < 0) throw Error(ErrorKind::NotALine, "focal line form has no unit coefficient");
    std::array<JetVec, 2> out;
    int slot = 0;
    for (int j = 0; j < 3; ++j) {
        if (j == pivot) continue;
        JetVec v(3, Jet2());
        v[j] = form[pivot];
        v[pivot] = -form[j];
        out[slot++] = std::move(v);
    }
    return out;
}

inline JetVec combine(const JetFrame& frame, const JetVec& coords) {
    JetVec out(5, Jet2());
    for (int m = 0; m < 3; ++m)
        for (int i = 0; i < 5; ++i) out[i] += coords[m] * frame.pts[m][i];
    return out;
}

}  // namespace engine_detail

/// Two P^4 points spanning the focal line r(sigma) for a rational developable
/// direction, as jets in (u,v): the direction field is Hensel-lifted and the
/// rank-1 form's kernel is solved over the jet ring.
inline std::pair<JetVec, JetVec> focal_line_jets(const CharForms& f, const JetFrame& frame,
                                                 const Rat& lambda0, const Rat& mu0) {
    FocalLocus locus = focal_locus_for_direction(f, lambda0, mu0);
    if (locus.kind == FocalLocus::Kind::Point || locus.kind == FocalLocus::Kind::EmptyLocus)
        throw Error(ErrorKind::NotALine, "focal locus for this direction is not a line");

    DirectionSet d = developable_directions(f);
    Jet2 lam, mu;
    if (d.kind == DirectionSet::Kind::All) {
        // Every direction is developable; the form field is the same for
        // constant directions, no lifting needed.
        lam = jet_const(lambda0);
        mu = jet_const(mu0);
    } else {
        std::tie(lam, mu) = engine_detail::lift_direction(f, lambda0, mu0);
    }
    JetVec f1(3), f2(3);
    for (int i = 0; i < 3; ++i) {
        f1[i] = lam * f.l1u[i] + mu * f.l1v[i];
        f2[i] = lam * f.l2u[i] + mu * f.l2v[i];
    }
    const JetVec& form = focal::is_zero(constant_part(f1)) ? f2 : f1;
    auto kernel = engine_detail::form_kernel(form);
    return {engine_detail::combine(frame, kernel[0]), engine_detail::combine(frame, kernel[1])};
}

/// One focus of a 2-parameter line family.
struct LineFocus {
    Rat a, b;              // coordinates (a:b) on the line q = a A + b B
    int multiplicity;      // multiplicity in the minor gcd
    std::optional<JetVec> point;  // P^4 jets of the focus branch (simple roots)
};

struct LineFamilyFoci {
    BinaryForm gcd;             // gcd of the three minors in (a,b)
    int count_with_conjugates;  // number of foci over the algebraic closure
    bool double_focus;          // gcd is a perfect square
    std::vector<LineFocus> rational_foci;
};

/// Foci of the 2-parameter line family (u,v) -> <A(u,v), B(u,v)>: q = aA+bB
/// is focal for some direction iff the 3x2 matrix [N_i.q_u, N_i.q_v] over the
/// line's dual basis has rank <= 1; foci are the common roots in (a:b) of its
/// three 2x2 minors.
inline LineFamilyFoci line_family_foci(const JetVec& A, const JetVec& B) {
    JetMat span{A, B};
    auto duals = jet_nullspace(span);  // 3 dual hyperplanes of the line
    JetVec Au(5), Bu(5), Av(5), Bv(5);
    for (int i = 0; i < 5; ++i) {
        Au[i] = A[i].du();
        Bu[i] = B[i].du();
        Av[i] = A[i].dv();
        Bv[i] = B[i].dv();
    }
    std::array<Jet2, 3> g, h, p, q;
    for (int i = 0; i < 3; ++i) {
        g[i] = dot(duals[i], Au);
        h[i] = dot(duals[i], Bu);
        p[i] = dot(duals[i], Av);
        q[i] = dot(duals[i], Bv);
    }
    // Minor (i,j) as a quadratic a^2, ab, b^2 with jet coefficients.
    std::vector<std::array<Jet2, 3>> minors;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            minors.push_back({g[i] * p[j] - g[j] * p[i],
                              g[i] * q[j] + h[i] * p[j] - g[j] * q[i] - h[j] * p[i],
                              h[i] * q[j] - h[j] * q[i]});

    std::vector<BinaryForm> const_minors;
    for (auto& m : minors)
        const_minors.push_back(BinaryForm::quadratic(m[0].c00, m[1].c00, m[2].c00));
    auto gv = binform_gcd(const_minors);
    if (std::holds_alternative<AllOfP1>(gv))
        throw Error(ErrorKind::WholeLineFocal, "every point of the line is focal");
    BinaryForm gcd = std::get<BinaryForm>(gv);

    LineFamilyFoci out;
    out.gcd = gcd;
    out.double_focus = gcd.degree() == 2 && focal::is_zero(binform_disc(gcd));
    out.count_with_conjugates =
        gcd.degree() == 0 ? 0 : (out.double_focus ? 1 : static_cast<int>(gcd.degree()));

    // Collect rational roots with multiplicity.
    std::vector<std::pair<std::pair<Rat, Rat>, int>> roots;
    if (gcd.degree() == 1) {
        roots.push_back({*binform_rational_root(gcd), 1});
    } else if (gcd.degree() == 2) {
        if (out.double_focus) {
            roots.push_back({*binform_rational_root(gcd), 2});
        } else {
            Rat disc = binform_disc(gcd);
            if (is_square(disc)) {
                // a t^2 + b t + c in t = a/b coords; handle a == 0 separately.
                const Rat &qa = gcd.coeffs[0], &qb = gcd.coeffs[1], &qc = gcd.coeffs[2];
                if (qa == 0) {
                    roots.push_back({{Rat(1), Rat(0)}, 1});
                    roots.push_back({{-qc, qb}, 1});
                } else {
                    Rat sd(Int(boost::multiprecision::sqrt(num(disc))), Int(boost::multiprecision::sqrt(den(disc))));
                    roots.push_back({{(-qb + sd), 2 * qa}, 1});
                    roots.push_back({{(-qb - sd), 2 * qa}, 1});
                }
            }
        }
    }

    for (auto& [root, mult] : roots) {
        LineFocus focus;
        focus.a = root.first;
        focus.b = root.second;
        focus.multiplicity = mult;
        if (mult == 1) {
            // Newton-lift the simple root on a minor where it stays simple.
            bool dehom_b = root.second != 0;
            Rat t0 = dehom_b ? root.first / root.second : root.second / root.first;
            for (auto& m : minors) {
                const Jet2 &A2 = dehom_b ? m[0] : m[2];
                const Jet2 &B2 = m[1];
                const Jet2 &C2 = dehom_b ? m[2] : m[0];
                if (A2.is_zero() && B2.is_zero() && C2.is_zero()) continue;
                Rat deriv = 2 * A2.c00 * t0 + B2.c00;
                if (focal::is_zero(deriv)) continue;
                Jet2 t = jet_const(t0);
                for (int it = 0; it < 2; ++it) {
                    Jet2 val = A2 * t * t + B2 * t + C2;
                    Jet2 dval = 2 * A2 * t + B2;
                    t = t - val / dval;
                }
                Jet2 aj = dehom_b ? t : jet_const(Rat(1));
                Jet2 bj = dehom_b ? jet_const(Rat(1)) : t;
                JetVec pt(5, Jet2());
                for (int i = 0; i < 5; ++i) pt[i] = aj * A[i] + bj * B[i];
                focus.point = std::move(pt);
                break;
            }
        }
        out.rational_foci.push_back(std::move(focus));
    }
    return out;
}

/// Independent minor-based focal test: Q (plane coords) is focal at `base`
/// for direction (lambda:mu) iff rank(x, y, z, lambda Q_u + mu Q_v) <= 3.
/// Works straight from the chart polynomials, on a separate code path from
/// characteristic_forms.
inline bool oracle_is_focal(const PlaneChart& chart, const Rat& u0, const Rat& v0,
                            const PlaneCoords& Q, const Rat& lambda, const Rat& mu) {
    RatVec x(5), y(5), z(5), dir(5);
    for (int i = 0; i < 5; ++i) {
        x[i] = chart.X()[i].eval(u0, v0);
        y[i] = chart.Y()[i].eval(u0, v0);
        z[i] = chart.Z()[i].eval(u0, v0);
        Rat qu = Q.a * chart.X()[i].du().eval(u0, v0) + Q.b * chart.Y()[i].du().eval(u0, v0) +
                 Q.c * chart.Z()[i].du().eval(u0, v0);
        Rat qv = Q.a * chart.X()[i].dv().eval(u0, v0) + Q.b * chart.Y()[i].dv().eval(u0, v0) +
                 Q.c * chart.Z()[i].dv().eval(u0, v0);
        dir[i] = lambda * qu + mu * qv;
    }
    return mat_rank({x, y, z, dir}) <= 3;
}

}  // namespace focal
