#include <doctest.h>

#include "focal/engine.hpp"
#include "focal/rng.hpp"

using namespace focal;

namespace {

const char* kTranslation = R"(vars: u v
point: [1, u, u^2, v, v^2]
point: [0, 1, 2*u, 0, 0]
point: [0, 0, 0, 1, 2*v]
)";

const char* kFixedLine = R"(vars: u v
point: [1, 0, 0, 0, 0]
point: [0, 1, 0, 0, 0]
point: [0, 0, 1, u, v]
)";

const char* kHyperbolicCone = R"(vars: u v
point: [0, 0, 0, 0, 1]
point: [1, u, 0, 0, 0]
point: [0, 0, 1, v, 0]
)";

const char* kParabolicCone = R"(vars: u v
point: [0, 0, 0, 0, 1]
point: [1, u, 0, 0, 0]
point: [0, v, 1, u, 0]
)";

CharForms forms_at(const char* text, const Rat& u0, const Rat& v0) {
    PlaneChart c = parse_chart(text);
    return characteristic_forms(eval_frame(c, u0, v0));
}

}  // namespace

TEST_CASE("characteristic forms of the translation-surface chart") {
    CharForms f = forms_at(kTranslation, Rat(1), Rat(1));
    // L1u = 2b, L1v = 0, L2u = 0, L2v = 2c in plane coordinates (a,b,c).
    CHECK(constant_part(f.l1u) == RatVec{Rat(0), Rat(2), Rat(0)});
    CHECK(constant_part(f.l1v) == RatVec{Rat(0), Rat(0), Rat(0)});
    CHECK(constant_part(f.l2u) == RatVec{Rat(0), Rat(0), Rat(0)});
    CHECK(constant_part(f.l2v) == RatVec{Rat(0), Rat(0), Rat(2)});
}

TEST_CASE("focal conic of the worked examples") {
    FocalConic c1 = focal_conic(forms_at(kTranslation, Rat(1), Rat(1)));
    CHECK(c1.rank == 2);
    // Q^T M Q = 4bc: singular point (1:0:0).
    CHECK(c1.eval({Rat(0), Rat(1), Rat(1)}) == 4);
    CHECK(c1.eval({Rat(1), Rat(0), Rat(0)}) == 0);
    CHECK(focal::is_zero(dot(c1.matrix[0], RatVec{Rat(1), Rat(0), Rat(0)})));

    FocalConic c2 = focal_conic(forms_at(kFixedLine, Rat(1), Rat(1)));
    CHECK(c2.rank == 1);  // the double line c^2 = 0
    CHECK(c2.eval({Rat(0), Rat(0), Rat(1)}) != 0);
    CHECK(c2.eval({Rat(1), Rat(1), Rat(0)}) == 0);
}

TEST_CASE("developable directions of the worked examples") {
    DirectionSet d1 = developable_directions(forms_at(kTranslation, Rat(1), Rat(1)));
    CHECK(d1.kind == DirectionSet::Kind::Finite);
    CHECK(d1.gcd.degree() == 2);
    CHECK(!d1.double_root);
    CHECK(d1.contains(Rat(1), Rat(0)));
    CHECK(d1.contains(Rat(0), Rat(1)));
    CHECK(!d1.contains(Rat(1), Rat(1)));

    DirectionSet d2 = developable_directions(forms_at(kFixedLine, Rat(1), Rat(1)));
    CHECK(d2.kind == DirectionSet::Kind::All);
}

TEST_CASE("focal locus per direction") {
    CharForms f = forms_at(kTranslation, Rat(1), Rat(1));
    FocalLocus lu = focal_locus_for_direction(f, Rat(1), Rat(0));
    CHECK(lu.kind == FocalLocus::Kind::Line);  // direction du: the line b = 0
    CHECK(proportional(lu.line, RatVec{Rat(0), Rat(1), Rat(0)}));
    FocalLocus lgen = focal_locus_for_direction(f, Rat(1), Rat(1));
    CHECK(lgen.kind == FocalLocus::Kind::Point);
    CHECK(proportional(lgen.point, RatVec{Rat(1), Rat(0), Rat(0)}));
}

TEST_CASE("universal focal point recovers the surface") {
    PlaneChart c = parse_chart(kTranslation);
    SeedStream rng(2);
    for (int trial = 0; trial < 5; ++trial) {
        auto [u0, v0] = rng.next_base(9, 4);
        JetFrame fr = eval_frame(c, u0, v0);
        JetVec coords = universal_focal_point(characteristic_forms(fr));
        JetVec pt = engine_detail::combine(fr, coords);
        RatVec x{Rat(1), u0, u0 * u0, v0, v0 * v0};
        CHECK(proj_equal(constant_part(pt), x));
    }
}

TEST_CASE("pencil configuration cases") {
    // Same base point, defective action: forms f12 = l1 f11 + m1 f21 etc.
    SeedStream rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        RatVec f11(3), f21(3);
        do {
            for (int i = 0; i < 3; ++i) {
                f11[i] = Rat(rng.next_int(-4, 4));
                f21[i] = Rat(rng.next_int(-4, 4));
            }
        } while (mat_rank({f11, f21}) < 2);
        Rat lam = rng.next_rat_nonzero(5, 2), m1 = rng.next_rat_nonzero(5, 2);
        auto jordan = [&](const Rat& l1, const Rat& mm1, const Rat& l2, const Rat& m2) {
            CharForms cf;
            cf.l1u = lift(f11);
            cf.l1v = lift(f21);
            RatVec f12(3), f22(3);
            for (int i = 0; i < 3; ++i) {
                f12[i] = l1 * f11[i] + mm1 * f21[i];
                f22[i] = l2 * f11[i] + m2 * f21[i];
            }
            cf.l2u = lift(f12);
            cf.l2v = lift(f22);
            return cf;
        };
        CharForms defective = jordan(lam, m1, Rat(0), lam);
        PencilConfig pc = pencil_configuration(defective);
        CHECK(pc.kind == PencilConfig::Kind::SameBasePoint);
        CHECK(pc.disc == 0);
        CHECK(pc.eigen == PencilConfig::Eigen::Double);
        CHECK(focal_conic(defective).rank == 1);

        Rat mu = lam + Rat(1);
        CharForms split = jordan(lam, Rat(0), Rat(0), mu);
        PencilConfig ps = pencil_configuration(split);
        CHECK(ps.kind == PencilConfig::Kind::SameBasePoint);
        CHECK(ps.disc == (mu - lam) * (mu - lam));
        CHECK(ps.eigen == PencilConfig::Eigen::TwoDistinct);
        CHECK(focal_conic(split).rank == 2);
    }
}

TEST_CASE("focal line jets on the fixed-line chart are constant") {
    PlaneChart c = parse_chart(kFixedLine);
    JetFrame fr = eval_frame(c, Rat(2), Rat(3));
    CharForms f = characteristic_forms(fr);
    auto [A, B] = focal_line_jets(f, fr, Rat(1), Rat(1));
    ProjLine line(ProjPoint(constant_part(A)), ProjPoint(constant_part(B)));
    RatVec e0{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)};
    RatVec e1{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)};
    CHECK(line == ProjLine(ProjPoint(e0), ProjPoint(e1)));
}

TEST_CASE("line family foci: hyperbolic vs parabolic") {
    // Lines joining (1,u,0,0,0) and (0,0,1,v,0): two simple foci.
    PlaneChart h = parse_chart(kHyperbolicCone);
    JetFrame fh = eval_frame(h, Rat(1), Rat(2));
    JetVec A = fh.pts[1], B = fh.pts[2];
    LineFamilyFoci foci = line_family_foci(A, B);
    CHECK(foci.count_with_conjugates == 2);
    CHECK(!foci.double_focus);
    CHECK(foci.rational_foci.size() == 2);

    // Lines through the moving point (1,u,0,0,0): one double focus.
    PlaneChart p = parse_chart(kParabolicCone);
    JetFrame fp = eval_frame(p, Rat(1), Rat(2));
    LineFamilyFoci pfoci = line_family_foci(fp.pts[1], fp.pts[2]);
    CHECK(pfoci.count_with_conjugates == 1);
    CHECK(pfoci.double_focus);
}

TEST_CASE("characteristic forms agree with the direct rank oracle") {
    PlaneChart charts[] = {parse_chart(kTranslation), parse_chart(kFixedLine),
                           parse_chart(kHyperbolicCone)};
    SeedStream rng(21);
    int checked = 0;
    for (const PlaneChart& c : charts) {
        for (int trial = 0; trial < 25; ++trial) {
            auto [u0, v0] = rng.next_base(9, 4);
            JetFrame fr;
            try {
                fr = eval_frame(c, u0, v0);
            } catch (const Error&) {
                continue;
            }
            CharForms f = characteristic_forms(fr);
            PlaneCoords Q{rng.next_rat(5, 2), rng.next_rat(5, 2), rng.next_rat(5, 2)};
            Rat lam = rng.next_rat(5, 2), mu = rng.next_rat(5, 2);
            if (focal::is_zero(lam) && focal::is_zero(mu)) continue;
            RatVec q{Q.a, Q.b, Q.c};
            if (focal::is_zero(q)) continue;
            RatVec f1(3), f2(3);
            for (int i = 0; i < 3; ++i) {
                f1[i] = lam * constant_part(f.l1u)[i] + mu * constant_part(f.l1v)[i];
                f2[i] = lam * constant_part(f.l2u)[i] + mu * constant_part(f.l2v)[i];
            }
            bool by_forms = focal::is_zero(dot(f1, q)) && focal::is_zero(dot(f2, q));
            CHECK(by_forms == oracle_is_focal(c, u0, v0, Q, lam, mu));
            ++checked;
        }
    }
    CHECK(checked >= 60);
}
