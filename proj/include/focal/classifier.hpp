#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "focal/engine.hpp"
#include "focal/onedim.hpp"
#include "focal/rng.hpp"

namespace focal {

enum class ClassLabel {
    Alpha1,
    Alpha2,
    Alpha3,
    Beta1,
    Beta2,
    Beta3,
    Gamma1,
    Gamma2,
    Gamma3,
    Delta,
    IrreducibleConic,
    OutOfScopeFocalPlane,
    DegenerateCongruence,
};

inline const char* to_string(ClassLabel l) {
    switch (l) {
        case ClassLabel::Alpha1: return "Alpha1";
        case ClassLabel::Alpha2: return "Alpha2";
        case ClassLabel::Alpha3: return "Alpha3";
        case ClassLabel::Beta1: return "Beta1";
        case ClassLabel::Beta2: return "Beta2";
        case ClassLabel::Beta3: return "Beta3";
        case ClassLabel::Gamma1: return "Gamma1";
        case ClassLabel::Gamma2: return "Gamma2";
        case ClassLabel::Gamma3: return "Gamma3";
        case ClassLabel::Delta: return "Delta";
        case ClassLabel::IrreducibleConic: return "IrreducibleConic";
        case ClassLabel::OutOfScopeFocalPlane: return "OutOfScopeFocalPlane";
        case ClassLabel::DegenerateCongruence: return "DegenerateCongruence";
    }
    return "?";
}

inline std::optional<ClassLabel> label_from_string(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "alpha1") return ClassLabel::Alpha1;
    if (s == "alpha2") return ClassLabel::Alpha2;
    if (s == "alpha3") return ClassLabel::Alpha3;
    if (s == "beta1") return ClassLabel::Beta1;
    if (s == "beta2") return ClassLabel::Beta2;
    if (s == "beta3") return ClassLabel::Beta3;
    if (s == "gamma1") return ClassLabel::Gamma1;
    if (s == "gamma2") return ClassLabel::Gamma2;
    if (s == "gamma3") return ClassLabel::Gamma3;
    if (s == "delta") return ClassLabel::Delta;
    if (s == "irreducibleconic") return ClassLabel::IrreducibleConic;
    if (s == "outofscopefocalplane") return ClassLabel::OutOfScopeFocalPlane;
    if (s == "degeneratecongruence") return ClassLabel::DegenerateCongruence;
    return std::nullopt;
}

inline bool is_degenerate_class(ClassLabel l) {
    return l != ClassLabel::IrreducibleConic && l != ClassLabel::OutOfScopeFocalPlane &&
           l != ClassLabel::DegenerateCongruence;
}

/// Per-class geometric witness; every field is re-checkable from the chart.
struct Certificate {
    std::optional<ProjLine> fixed_line;           // Delta
    std::optional<ProjPoint> surface_point;       // Beta1/Gamma1
    std::optional<bool> tangent_ok;               // Beta1/Gamma1
    std::optional<std::string> asymptotic_count;  // "0" | "1" | "2-or-conjugate"
    std::optional<ProjPoint> curve_point;         // Beta2/Gamma2
    std::optional<ProjLine> tangent_line;         // Beta2/Gamma2
    std::optional<bool> osculating_contained;     // Beta2/Gamma2
    std::optional<ProjPoint> vertex;              // Beta3/Gamma3
    std::optional<int> per_line_focus_count;      // Beta3/Gamma3
    std::optional<ProjPoint> focus_point;         // Alpha1/Alpha2 witness
    std::optional<ProjLine> generator_line;       // Alpha3 witness
};

struct Dims {
    std::optional<std::size_t> sigma_prime;  // beta/gamma
    std::optional<std::size_t> p_R;          // alpha
    std::optional<std::size_t> p_F1R;        // alpha, when p_R = 3
};

struct ClassReport {
    ClassLabel label;
    std::size_t conic_rank = 0;
    DirectionSet directions;
    Dims dims;
    Certificate certificate;
    std::vector<std::pair<Rat, Rat>> samples;
    std::uint64_t seed = 0;
    std::size_t resamples = 0;
};

namespace classifier_detail {

struct Sample {
    Rat u0, v0;
    JetFrame frame;
    CharForms forms;
    FocalConic conic;
    DirectionSet dirs;
};

/// Draw one sample with generic frame data; counts failed draws.
inline std::optional<Sample> draw_sample(const PlaneChart& chart, SeedStream& rng,
                                         std::size_t budget, std::size_t& resamples) {
    for (std::size_t k = 0; k <= budget; ++k) {
        auto [u0, v0] = rng.next_base();
        try {
            Sample s;
            s.u0 = u0;
            s.v0 = v0;
            s.frame = eval_frame(chart, u0, v0);
            s.forms = characteristic_forms(s.frame);
            s.conic = focal_conic(s.forms);
            s.dirs = developable_directions(s.forms);
            return s;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateSpanAtBase && e.kind() != ErrorKind::PivotNotUnit)
                throw;
            ++resamples;
        }
    }
    return std::nullopt;
}

/// P^4 jets of a plane-coordinate jet vector in a frame, plus the extracted
/// value/derivative columns used all over the certificate code.
struct SurfaceJets {
    JetVec pt;                 // 5 jets
    RatVec x, xu, xv, xuu, xuv, xvv;  // values of the map and its partials
};

inline SurfaceJets surface_jets(const JetFrame& frame, const JetVec& coords) {
    SurfaceJets s;
    s.pt = engine_detail::combine(frame, coords);
    s.x.resize(5);
    s.xu.resize(5);
    s.xv.resize(5);
    s.xuu.resize(5);
    s.xuv.resize(5);
    s.xvv.resize(5);
    for (int i = 0; i < 5; ++i) {
        const Jet2& j = s.pt[i];
        s.x[i] = j.c00;
        s.xu[i] = j.c10;
        s.xv[i] = j.c01;
        s.xuu[i] = 2 * j.c20;
        s.xuv[i] = j.c11;
        s.xvv[i] = 2 * j.c02;
    }
    return s;
}

inline RatMat plane_consts(const JetFrame& frame) {
    return {constant_part(frame.pts[0]), constant_part(frame.pts[1]),
            constant_part(frame.pts[2])};
}

/// True iff every vector lies in the chart plane at this frame.
inline bool contained_in_plane(const JetFrame& frame, const std::vector<RatVec>& vecs) {
    RatMat m = plane_consts(frame);
    for (const auto& v : vecs) m.push_back(v);
    return mat_rank(std::move(m)) == 3;
}

/// Conjugate-pair quadratic of the second fundamental pair: the binary form
/// in (du,dv) whose roots are the pointwise conjugate double system of the
/// surface. A double root means the direction is self-conjugate, i.e. the
/// single asymptotic family of the gamma_1 case.
struct SecondOrderAnalysis {
    BinaryForm ii1, ii2;       // the two normal components of the second
                               // fundamental form, as forms in (du,dv)
    BinaryForm conjugate;      // conjugate-pair quadratic
    BinaryForm asym_gcd;       // gcd(ii1, ii2): asymptotic directions
};

inline SecondOrderAnalysis second_order(const SurfaceJets& s) {
    auto duals = mat_nullspace({s.x, s.xu, s.xv});
    if (duals.size() != 2)
        throw Error(ErrorKind::NonGenericSample, "surface tangent plane not 2-codimensional");
    SecondOrderAnalysis out;
    RatVec e(2), f(2), g(2);
    for (int i = 0; i < 2; ++i) {
        e[i] = dot(duals[i], s.xuu);
        f[i] = dot(duals[i], s.xuv);
        g[i] = dot(duals[i], s.xvv);
    }
    out.ii1 = BinaryForm::quadratic(e[0], 2 * f[0], g[0]);
    out.ii2 = BinaryForm::quadratic(e[1], 2 * f[1], g[1]);
    RatVec w = cross3({g[0], -f[0], e[0]}, {g[1], -f[1], e[1]});
    out.conjugate = BinaryForm::quadratic(w[0], w[1], w[2]);
    auto gv = binform_gcd({out.ii1, out.ii2});
    out.asym_gcd = std::holds_alternative<AllOfP1>(gv) ? BinaryForm::zero()
                                                       : std::get<BinaryForm>(gv);
    return out;
}

/// Focal line of the single developable direction, with jet span.
inline std::pair<JetVec, JetVec> alpha_focal_line(const Sample& s) {
    if (!s.dirs.root)
        throw Error(ErrorKind::NonGenericSample, "alpha branch without rational direction");
    return focal_line_jets(s.forms, s.frame, s.dirs.root->first, s.dirs.root->second);
}

}  // namespace classifier_detail

struct RunConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 5;
    std::size_t resample_budget = 12;
};

/// The classification decision tree: generic conic rank and direction-set
/// structure select among alpha/beta/gamma/delta; image dimensions of the
/// universal focal point (beta/gamma) or of the focal-line family (alpha)
/// pick the subtype; a per-class certificate is attached.
inline ClassReport classify(const PlaneChart& chart, const RunConfig& config = {}) {
    using namespace classifier_detail;

    SamplingConfig scfg{config.seed, config.samples, config.resample_budget};
    ChartValidation val = validate_chart(chart, scfg);
    if (val.verdict == ChartVerdict::DegenerateChart)
        throw Error(ErrorKind::DegenerateChart, "chart does not span a plane at any sample");

    ClassReport report;
    report.seed = config.seed;
    if (val.verdict == ChartVerdict::DegenerateCongruence) {
        report.label = ClassLabel::DegenerateCongruence;
        return report;
    }

    SeedStream rng(config.seed ^ 0x636c617373ULL);
    std::vector<Sample> samples;
    std::size_t budget = config.resample_budget;
    for (std::size_t i = 0; i < config.samples; ++i) {
        auto s = draw_sample(chart, rng, budget, report.resamples);
        if (!s) throw Error(ErrorKind::NonGenericChart, "resample budget exhausted");
        samples.push_back(std::move(*s));
    }

    // The conic rank is lower-semicontinuous in (u,v) and the direction set
    // only gains roots or multiplicity on closed subsets, so the generic
    // structure is the least special one observed: evict more-special
    // outliers and redraw.
    auto specialness = [](const DirectionSet& d) -> int {
        switch (d.kind) {
            case DirectionSet::Kind::Empty: return 0;
            case DirectionSet::Kind::Finite:
                return d.gcd.degree() == 1 ? 1 : (d.double_root ? 3 : 2);
            case DirectionSet::Kind::All: return 4;
        }
        return 4;
    };
    for (std::size_t round = 0;; ++round) {
        std::size_t max_rank = 0;
        for (const auto& s : samples) max_rank = std::max(max_rank, s.conic.rank);
        int best = 5;
        for (const auto& s : samples)
            if (s.conic.rank == max_rank) best = std::min(best, specialness(s.dirs));
        std::vector<Sample> keep;
        for (auto& s : samples)
            if (s.conic.rank != max_rank || specialness(s.dirs) == best)
                keep.push_back(std::move(s));
        bool evicted = keep.size() != samples.size();
        samples = std::move(keep);
        if (!evicted) {
            report.conic_rank = max_rank;
            for (const auto& s : samples)
                if (s.conic.rank == max_rank) {
                    report.directions = s.dirs;
                    break;
                }
            break;
        }
        if (round >= budget)
            throw Error(ErrorKind::InconsistentSample,
                        "direction structure disagrees across generic samples");
        while (samples.size() < config.samples) {
            auto s = draw_sample(chart, rng, budget, report.resamples);
            if (!s) throw Error(ErrorKind::NonGenericChart, "resample budget exhausted");
            ++report.resamples;
            samples.push_back(std::move(*s));
        }
    }

    // Keep only the generic (max conic rank) samples for the branch work.
    std::vector<Sample> generic;
    for (auto& s : samples)
        if (s.conic.rank == report.conic_rank) generic.push_back(std::move(s));
    for (const auto& s : generic) report.samples.push_back({s.u0, s.v0});

    const DirectionSet& dirs = report.directions;

    // Top-level split.
    if (report.conic_rank == 0) {
        report.label = ClassLabel::OutOfScopeFocalPlane;
        return report;
    }
    if (report.conic_rank == 3) {
        if (dirs.kind != DirectionSet::Kind::Empty)
            throw Error(ErrorKind::InconsistentSample,
                        "irreducible conic with developable directions");
        report.label = ClassLabel::IrreducibleConic;
        return report;
    }
    if (dirs.kind == DirectionSet::Kind::Empty)
        throw Error(ErrorKind::InconsistentSample,
                    "degenerate conic without developable directions");

    if (dirs.kind == DirectionSet::Kind::All) {
        if (report.conic_rank != 1)
            throw Error(ErrorKind::InconsistentSample, "All directions with conic rank != 1");
        report.label = ClassLabel::Delta;
        // Certificate: the focal line, constant in (u,v) and across samples.
        std::optional<ProjLine> line;
        for (const auto& s : generic) {
            std::pair<JetVec, JetVec> ab;
            bool got = false;
            for (auto [l, m] : {std::pair{1, 0}, {0, 1}, {1, 1}}) {
                try {
                    ab = focal_line_jets(s.forms, s.frame, Rat(l), Rat(m));
                    got = true;
                    break;
                } catch (const Error&) {
                }
            }
            if (!got) throw Error(ErrorKind::NonGenericSample, "no focal line in delta branch");
            ProjLine here(ProjPoint(constant_part(ab.first)), ProjPoint(constant_part(ab.second)));
            if (!line) line = here;
            else if (!(here == *line))
                throw Error(ErrorKind::CertificateFailed, "delta focal line varies across samples");
            // Jet-level constancy: all Pluecker coordinates proportional to a
            // unit one with constant ratio.
            std::vector<Jet2> pl;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    pl.push_back(ab.first[i] * ab.second[j] - ab.first[j] * ab.second[i]);
            const Jet2* unit = nullptr;
            for (const auto& c : pl)
                if (c.is_unit()) { unit = &c; break; }
            if (!unit) throw Error(ErrorKind::NonGenericSample, "zero Pluecker vector");
            for (const auto& c : pl)
                if (!(c / *unit).is_constant())
                    throw Error(ErrorKind::CertificateFailed, "delta focal line not constant");
        }
        report.certificate.fixed_line = line;
        return report;
    }

    // Finite direction set: alpha (one simple direction, rank 2),
    // beta (two directions, rank 2), gamma (double direction, rank 1).
    bool is_alpha = dirs.gcd.degree() == 1;
    bool is_beta = dirs.gcd.degree() == 2 && !dirs.double_root;
    bool is_gamma = dirs.gcd.degree() == 2 && dirs.double_root;
    if ((is_alpha && report.conic_rank != 2) || (is_beta && report.conic_rank != 2) ||
        (is_gamma && report.conic_rank != 1))
        throw Error(ErrorKind::InconsistentSample,
                    "conic rank / direction multiplicity pattern outside the classification");

    if (is_alpha) {
        std::size_t p_R = 0;
        std::optional<std::size_t> p_F1R;
        std::optional<ProjPoint> focus_witness;
        std::optional<ProjLine> generator;
        SeedStream trng = rng.fork(0xa1fa);
        for (const auto& s : generic) {
            auto [A, B] = alpha_focal_line(s);
            if (!generator)
                generator = ProjLine(ProjPoint(constant_part(A)), ProjPoint(constant_part(B)));
            Rat t0 = trng.next_rat_nonzero(8, 3);
            RatVec value(5), du(5), dv(5), along(5);
            for (int i = 0; i < 5; ++i) {
                Jet2 pt = A[i] + t0 * B[i];
                value[i] = pt.c00;
                du[i] = pt.c10;
                dv[i] = pt.c01;
                along[i] = B[i].c00;
            }
            p_R = std::max(p_R, image_dim(value, {du, dv, along}));
        }
        report.dims.p_R = p_R;
        if (p_R == 2) {
            report.label = ClassLabel::Alpha3;
            report.certificate.generator_line = generator;
            return report;
        }
        if (p_R != 3)
            throw Error(ErrorKind::InconsistentSample, "alpha focal family with dim p(R) < 2");
        std::size_t fdim = 0;
        for (const auto& s : generic) {
            auto [A, B] = alpha_focal_line(s);
            LineFamilyFoci foci = line_family_foci(A, B);
            for (const auto& fc : foci.rational_foci) {
                if (!fc.point) continue;
                RatVec fv(5), fu(5), fvv(5);
                for (int i = 0; i < 5; ++i) {
                    fv[i] = (*fc.point)[i].c00;
                    fu[i] = (*fc.point)[i].c10;
                    fvv[i] = (*fc.point)[i].c01;
                }
                if (focal::is_zero(fv)) continue;
                std::size_t d = image_dim(fv, {fu, fvv});
                if (d > fdim) {
                    fdim = d;
                    focus_witness = ProjPoint(fv);
                }
            }
        }
        if (fdim == 0)
            throw Error(ErrorKind::UnexpectedFocusDim,
                        "alpha line family focus has image dimension 0");
        report.dims.p_F1R = fdim;
        report.certificate.focus_point = focus_witness;
        report.label = fdim == 2 ? ClassLabel::Alpha1 : ClassLabel::Alpha2;
        return report;
    }

    // beta / gamma: universal focal point P(sigma).
    std::size_t sdim = 0;
    std::vector<SurfaceJets> pjets;
    for (const auto& s : generic) {
        JetVec coords = universal_focal_point(s.forms);
        // Singular-point identity: conic matrix annihilates P.
        RatVec pc = constant_part(coords);
        for (int i = 0; i < 3; ++i)
            if (!focal::is_zero(dot(s.conic.matrix[i], pc)))
                throw Error(ErrorKind::CertificateFailed,
                            "universal focal point off the conic's singular locus");
        SurfaceJets sj = surface_jets(s.frame, coords);
        sdim = std::max(sdim, image_dim(sj.x, {sj.xu, sj.xv}));
        pjets.push_back(std::move(sj));
    }
    report.dims.sigma_prime = sdim;

    if (sdim == 2) {
        report.label = is_beta ? ClassLabel::Beta1 : ClassLabel::Gamma1;
        const SurfaceJets& sj = pjets.front();
        report.certificate.surface_point = ProjPoint(sj.x);
        report.certificate.tangent_ok =
            contained_in_plane(generic.front().frame, {sj.x, sj.xu, sj.xv}) &&
            mat_rank({sj.x, sj.xu, sj.xv}) == 3;
        SecondOrderAnalysis so = second_order(sj);
        std::size_t asym = so.asym_gcd.is_zero() ? 2 : so.asym_gcd.degree();
        report.certificate.asymptotic_count =
            asym == 0 ? "0" : (asym == 1 ? "1" : "2-or-conjugate");
        // Cross-check with the conjugate-pair quadratic.
        bool conj_double = so.conjugate.degree() == 2 && focal::is_zero(binform_disc(so.conjugate));
        if (is_beta && (conj_double || asym != 0))
            throw Error(ErrorKind::CertificateFailed, "beta1 surface has asymptotic structure");
        if (is_gamma && (!conj_double || asym != 1))
            throw Error(ErrorKind::CertificateFailed,
                        "gamma1 surface lacks a single asymptotic family");
        return report;
    }

    if (sdim == 1) {
        report.label = is_beta ? ClassLabel::Beta2 : ClassLabel::Gamma2;
        const SurfaceJets& sj = pjets.front();
        const JetFrame& frame = generic.front().frame;
        report.certificate.curve_point = ProjPoint(sj.x);
        // A direction along which P actually moves.
        RatVec d1(5), d2(5);
        std::optional<std::pair<Rat, Rat>> move;
        for (auto [a, b] : {std::pair{1, 0}, {0, 1}, {1, 1}, {1, -1}}) {
            RatVec t(5);
            for (int i = 0; i < 5; ++i) t[i] = Rat(a) * sj.xu[i] + Rat(b) * sj.xv[i];
            if (mat_rank({sj.x, t}) == 2) {
                move = {Rat(a), Rat(b)};
                d1 = t;
                break;
            }
        }
        if (!move) throw Error(ErrorKind::NonGenericSample, "curve point does not move");
        for (int i = 0; i < 5; ++i)
            d2[i] = move->first * move->first * sj.xuu[i] +
                    2 * move->first * move->second * sj.xuv[i] +
                    move->second * move->second * sj.xvv[i];
        report.certificate.tangent_line = ProjLine(ProjPoint(sj.x), ProjPoint(d1));
        bool tangent_in = contained_in_plane(frame, {sj.x, d1});
        if (!tangent_in)
            throw Error(ErrorKind::CertificateFailed, "plane misses the curve tangent line");
        // Fiber direction e: the (a:b) with a P_u + b P_v in <P>, i.e. the
        // direction along which the focal point stands still while the plane
        // sweeps the pencil through the tangent line.
        RatMat fib_t(5, RatVec(3));
        for (int i = 0; i < 5; ++i) fib_t[i] = {sj.xu[i], sj.xv[i], sj.x[i]};
        auto fib = mat_nullspace(fib_t);
        if (fib.size() != 1 || (focal::is_zero(fib[0][0]) && focal::is_zero(fib[0][1])))
            throw Error(ErrorKind::NonGenericSample, "no fiber direction at the curve point");
        const Rat& ea = fib[0][0];
        const Rat& eb = fib[0][1];
        // Span of the pencil to first order: the plane plus its e-derivative.
        RatMat W = plane_consts(frame);
        for (int m = 0; m < 3; ++m) {
            RatVec row(5);
            for (int i = 0; i < 5; ++i)
                row[i] = ea * frame.dpu[m][i].c00 + eb * frame.dpv[m][i].c00;
            W.push_back(row);
        }
        std::size_t wrank = mat_rank(W);
        if (wrank < 4)
            throw Error(ErrorKind::NonGenericSample, "plane stationary along the fiber");
        // The pencil contains the osculating plane <P, P', P''> iff P'' (the
        // only spanning vector not already known to lie in the pencil span)
        // falls inside that first-order span.
        RatMat Wd2 = W;
        Wd2.push_back(d2);
        report.certificate.osculating_contained = mat_rank(std::move(Wd2)) == wrank;
        if (is_gamma && !*report.certificate.osculating_contained)
            throw Error(ErrorKind::CertificateFailed,
                        "gamma2 pencil misses the osculating plane");
        return report;
    }

    // sdim == 0: cone over a line congruence in a hyperplane.
    report.label = is_beta ? ClassLabel::Beta3 : ClassLabel::Gamma3;
    const SurfaceJets& sj = pjets.front();
    report.certificate.vertex = ProjPoint(sj.x);
    int k = -1;
    for (int i = 0; i < 5; ++i)
        if (sj.x[i] != 0) k = i;
    const JetFrame& frame = generic.front().frame;
    JetVec hform(3);
    for (int m = 0; m < 3; ++m) hform[m] = frame.pts[m][k];
    auto kernel = engine_detail::form_kernel(hform);
    JetVec A = engine_detail::combine(frame, kernel[0]);
    JetVec B = engine_detail::combine(frame, kernel[1]);
    LineFamilyFoci foci = line_family_foci(A, B);
    report.certificate.per_line_focus_count = foci.count_with_conjugates;
    if (is_beta && (foci.count_with_conjugates != 2 || foci.double_focus))
        throw Error(ErrorKind::CertificateFailed, "beta3 line congruence is not hyperbolic");
    if (is_gamma && !foci.double_focus)
        throw Error(ErrorKind::CertificateFailed, "gamma3 line congruence is not parabolic");
    return report;
}

/// dim of the universal-focal-point image (beta/gamma subtyping), exposed for
/// direct use; classify() computes it inline.
inline std::size_t dim_sigma_prime(const PlaneChart& chart, const RunConfig& config = {}) {
    ClassReport r = classify(chart, config);
    if (!r.dims.sigma_prime)
        throw Error(ErrorKind::NotAPoint, "chart is not in the beta/gamma branch");
    return *r.dims.sigma_prime;
}

struct AlphaDims {
    std::size_t p_R;
    std::optional<std::size_t> p_F1R;
};

inline AlphaDims alpha_dims(const PlaneChart& chart, const RunConfig& config = {}) {
    ClassReport r = classify(chart, config);
    if (!r.dims.p_R)
        throw Error(ErrorKind::NotALine, "chart is not in the alpha branch");
    return {*r.dims.p_R, r.dims.p_F1R};
}

/// Named boolean re-checks of a report's certificate, computed from the chart
/// at fresh samples (seed+1). A false entry means classification and
/// certificate disagree; callers surface it, never drop it.
inline std::vector<std::pair<std::string, bool>> certificate_check(const PlaneChart& chart,
                                                                   const ClassReport& report) {
    std::vector<std::pair<std::string, bool>> checks;
    RunConfig cfg{report.seed + 1, std::max<std::size_t>(report.samples.size(), 3), 12};
    ClassReport redo;
    try {
        redo = classify(chart, cfg);
    } catch (const Error& e) {
        checks.push_back({std::string("reclassify(") + to_string(e.kind()) + ")", false});
        return checks;
    }
    checks.push_back({"label_stable", redo.label == report.label});
    switch (report.label) {
        case ClassLabel::Delta:
            checks.push_back({"fixed_line_constant",
                              redo.certificate.fixed_line && report.certificate.fixed_line &&
                                  *redo.certificate.fixed_line == *report.certificate.fixed_line});
            break;
        case ClassLabel::Beta1:
        case ClassLabel::Gamma1:
            checks.push_back({"tangent_ok", redo.certificate.tangent_ok.value_or(false)});
            checks.push_back({"asymptotic_count_matches",
                              redo.certificate.asymptotic_count == report.certificate.asymptotic_count});
            break;
        case ClassLabel::Beta2:
            checks.push_back({"tangent_line_contained", redo.certificate.tangent_line.has_value()});
            checks.push_back({"osculating_excluded",
                              !redo.certificate.osculating_contained.value_or(true)});
            break;
        case ClassLabel::Gamma2:
            checks.push_back({"tangent_line_contained", redo.certificate.tangent_line.has_value()});
            checks.push_back({"osculating_contained",
                              redo.certificate.osculating_contained.value_or(false)});
            break;
        case ClassLabel::Beta3:
            checks.push_back({"per_line_focus_count",
                              redo.certificate.per_line_focus_count.value_or(0) == 2});
            break;
        case ClassLabel::Gamma3:
            checks.push_back({"per_line_focus_count",
                              redo.certificate.per_line_focus_count.value_or(0) == 1});
            break;
        case ClassLabel::Alpha1:
            checks.push_back({"dims", redo.dims.p_R == 3 && redo.dims.p_F1R == 2});
            break;
        case ClassLabel::Alpha2:
            checks.push_back({"dims", redo.dims.p_R == 3 && redo.dims.p_F1R == 1});
            break;
        case ClassLabel::Alpha3:
            checks.push_back({"dims", redo.dims.p_R == 2});
            break;
        default:
            break;
    }
    return checks;
}

}  // namespace focal
