#include <doctest.h>

#include "focal/generators.hpp"
#include "focal/onedim.hpp"

using namespace focal;
using gen_detail::pm_const;
using gen_detail::pm_du;
using gen_detail::random_curve_u;
using gen_detail::random_point;

TEST_CASE("one-parameter families: planes through a line") {
    SeedStream rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        PlaneChart fam;
        fam.maps[0] = pm_const(random_point(rng));
        fam.maps[1] = pm_const(random_point(rng));
        fam.maps[2] = random_curve_u(rng, 2);
        OneDimClass r;
        try {
            r = classify_1dim_developable(fam, {static_cast<std::uint64_t>(trial), 5, 12});
        } catch (const Error&) {
            continue;  // degenerate random draw
        }
        CHECK(r.kind == OneDimClass::Kind::ThroughLine);
        REQUIRE(r.line.has_value());
        RatVec p0(5), p1(5);
        for (int i = 0; i < 5; ++i) {
            p0[i] = fam.maps[0][i].eval(Rat(0), Rat(0));
            p1[i] = fam.maps[1][i].eval(Rat(0), Rat(0));
        }
        if (mat_rank({p0, p1}) == 2)
            CHECK(*r.line == ProjLine(ProjPoint(p0), ProjPoint(p1)));
    }
}

TEST_CASE("one-parameter families: tangent planes to a cone") {
    SeedStream rng(43);
    int verified = 0;
    for (int trial = 0; trial < 14 && verified < 10; ++trial) {
        RatVec vertex = random_point(rng);
        PointMap c = random_curve_u(rng, 3);
        PlaneChart fam;
        fam.maps[0] = pm_const(vertex);
        fam.maps[1] = c;
        fam.maps[2] = pm_du(c);
        OneDimClass r;
        try {
            r = classify_1dim_developable(fam, {static_cast<std::uint64_t>(trial), 5, 12});
        } catch (const Error&) {
            continue;
        }
        CHECK(r.kind == OneDimClass::Kind::ConeTangent);
        REQUIRE(r.vertex.has_value());
        CHECK(*r.vertex == ProjPoint(vertex));
        ++verified;
    }
    CHECK(verified >= 10);
}

TEST_CASE("one-parameter families: osculating planes to a curve") {
    SeedStream rng(47);
    int verified = 0;
    for (int trial = 0; trial < 14 && verified < 10; ++trial) {
        PointMap c = random_curve_u(rng, 4);
        PlaneChart fam;
        fam.maps[0] = c;
        fam.maps[1] = pm_du(c);
        fam.maps[2] = pm_du(pm_du(c));
        OneDimClass r;
        try {
            r = classify_1dim_developable(fam, {static_cast<std::uint64_t>(trial), 5, 12});
        } catch (const Error&) {
            continue;
        }
        CHECK(r.kind == OneDimClass::Kind::CurveOsculating);
        ++verified;
    }
    CHECK(verified >= 10);
}

TEST_CASE("one-parameter families: generic families are not developable") {
    SeedStream rng(53);
    int verified = 0;
    for (int trial = 0; trial < 14 && verified < 10; ++trial) {
        PlaneChart fam;
        fam.maps[0] = random_curve_u(rng, 2);
        fam.maps[1] = random_curve_u(rng, 2);
        fam.maps[2] = random_curve_u(rng, 2);
        OneDimClass r;
        try {
            r = classify_1dim_developable(fam, {static_cast<std::uint64_t>(trial), 5, 12});
        } catch (const Error&) {
            continue;
        }
        CHECK(r.kind == OneDimClass::Kind::NotDevelopable);
        ++verified;
    }
    CHECK(verified >= 10);
}
