#pragma once

#include <optional>

#include "focal/engine.hpp"
#include "focal/rng.hpp"

namespace focal {

/// Result of classifying a 1-parameter plane family.
struct OneDimClass {
    enum class Kind { NotDevelopable, ThroughLine, ConeTangent, CurveOsculating };
    Kind kind;
    std::optional<ProjLine> line;    // ThroughLine
    std::optional<ProjPoint> vertex; // ConeTangent
};

/// Classify a 1-parameter family of planes in P^4, given as three point maps
/// in the single parameter t (encoded as polynomials in u; v must not occur).
/// Developable families are exactly those whose generic focal locus is a
/// line; they are the planes through a fixed line, the tangent planes to a
/// cone, or the osculating planes to a curve, told apart by the image
/// dimensions of the focal line family and of its second-order focus.
inline OneDimClass classify_1dim_developable(const PlaneChart& family,
                                             const SamplingConfig& cfg = {}) {
    SeedStream rng(cfg.seed ^ 0x31646576ULL);
    std::size_t attempts = cfg.samples + cfg.resample_budget;
    for (std::size_t s = 0; s < attempts; ++s) {
        Rat t0 = rng.next_rat();
        JetFrame frame;
        try {
            frame = eval_frame(family, t0, Rat(0));
        } catch (const Error&) {
            continue;  // non-generic t, redraw
        }
        CharForms cf = characteristic_forms(frame);
        // One parameter: only the u-forms matter (the maps do not involve v).
        RatVec r1 = constant_part(cf.l1u), r2 = constant_part(cf.l2u);
        std::size_t rank = mat_rank({r1, r2});
        if (rank == 2) return {OneDimClass::Kind::NotDevelopable};
        if (rank == 0) continue;  // stationary sample, redraw

        // Focal line = kernel of the rank-1 form, over the jet ring.
        const JetVec& form = focal::is_zero(r1) ? cf.l2u : cf.l1u;
        std::array<JetVec, 2> kernel;
        try {
            kernel = engine_detail::form_kernel(form);
        } catch (const Error&) {
            continue;
        }
        JetVec A = engine_detail::combine(frame, kernel[0]);
        JetVec B = engine_detail::combine(frame, kernel[1]);

        // dim p(F1): the union of the focal lines.
        Rat s0 = rng.next_rat_nonzero(8, 3);
        RatVec value(5), dt(5), along(5);
        for (int i = 0; i < 5; ++i) {
            Jet2 pt = A[i] + s0 * B[i];
            value[i] = pt.c00;
            dt[i] = pt.c10;
            along[i] = B[i].c00;
        }
        std::size_t dim_f1 = image_dim(value, {dt, along});
        if (dim_f1 == 0) continue;  // degenerate sample
        if (dim_f1 == 1) {
            ProjLine line(ProjPoint(constant_part(A)), ProjPoint(constant_part(B)));
            return {OneDimClass::Kind::ThroughLine, line};
        }

        // Second-order focus on the line: a N_i.A' + b N_i.B' = 0 for the
        // three dual hyperplanes N_i of the line.
        auto duals = jet_nullspace(JetMat{A, B});
        JetVec At(5), Bt(5);
        for (int i = 0; i < 5; ++i) {
            At[i] = A[i].du();
            Bt[i] = B[i].du();
        }
        std::optional<std::pair<Jet2, Jet2>> root;
        RatMat cm;
        for (int i = 0; i < 3; ++i) {
            Jet2 ga = dot(duals[i], At), gb = dot(duals[i], Bt);
            cm.push_back({ga.c00, gb.c00});
            if (!root && (ga.c00 != 0 || gb.c00 != 0)) root = std::make_pair(-gb, ga);
        }
        std::size_t frank = mat_rank(cm);
        if (frank != 1 || !root) continue;  // inconsistent with a developable family
        JetVec focus(5, Jet2());
        for (int i = 0; i < 5; ++i) focus[i] = root->first * A[i] + root->second * B[i];
        RatVec fval(5), fdt(5);
        for (int i = 0; i < 5; ++i) {
            fval[i] = focus[i].c00;
            fdt[i] = focus[i].c10;
        }
        if (focal::is_zero(fval)) continue;
        std::size_t fdim = image_dim(fval, {fdt});
        if (fdim == 0) return {OneDimClass::Kind::ConeTangent, std::nullopt, ProjPoint(fval)};
        return {OneDimClass::Kind::CurveOsculating};
    }
    throw Error(ErrorKind::NonGenericSample,
                "no generic parameter value found for the 1-dim family");
}

}  // namespace focal
