#include <doctest.h>

#include "focal/jet.hpp"
#include "focal/poly.hpp"
#include "focal/rng.hpp"

using namespace focal;

namespace {

BivarPoly random_poly(SeedStream& rng, int degree) {
    BivarPoly p;
    for (int a = 0; a <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b)
            p += BivarPoly::monomial(Rat(rng.next_int(-5, 5)), a, b);
    return p;
}

}  // namespace

TEST_CASE("jet arithmetic basics") {
    Jet2 x(Rat(2), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0));  // 2 + du
    Jet2 y(Rat(3), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0));  // 3 + dv
    Jet2 p = x * y;
    CHECK(p.c00 == 6);
    CHECK(p.c10 == 3);
    CHECK(p.c01 == 2);
    CHECK(p.c11 == 1);
    CHECK(p.c20 == 0);
    CHECK((x + y).c00 == 5);
    CHECK((x - y).c10 == 1);
}

TEST_CASE("jet division matches the geometric series") {
    // (1 + du) / (1 - du) = 1 + 2 du + 2 du^2 + O(3)
    Jet2 a(Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0));
    Jet2 b(Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(0));
    Jet2 q = a / b;
    CHECK(q.c00 == 1);
    CHECK(q.c10 == 2);
    CHECK(q.c20 == 2);
    CHECK(q.c01 == 0);
    CHECK((q * b - a).is_zero());
}

TEST_CASE("division by a non-unit throws") {
    Jet2 a = jet_const(Rat(1));
    Jet2 m(Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0));
    CHECK_THROWS_AS((void)(a / m), Error);
    try {
        (void)(a / m);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByNonUnit);
    }
}

TEST_CASE("ring operations agree with the symbolic oracle") {
    SeedStream rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        BivarPoly p = random_poly(rng, 3), q = random_poly(rng, 3);
        Rat u0 = rng.next_rat(5, 3), v0 = rng.next_rat(5, 3);
        Jet2 jp = poly_to_jet(p, u0, v0), jq = poly_to_jet(q, u0, v0);
        CHECK(jp * jq == poly_to_jet(p * q, u0, v0));
        CHECK(jp + jq == poly_to_jet(p + q, u0, v0));
        CHECK(jp - jq == poly_to_jet(p - q, u0, v0));
        if (jq.is_unit()) {
            Jet2 r = jp / jq;
            CHECK(r * jq == jp);
        }
    }
}

TEST_CASE("jet differentiation truncates one order down") {
    BivarPoly p = BivarPoly::monomial(Rat(1), 2, 1);  // u^2 v
    Jet2 j = poly_to_jet(p, Rat(3), Rat(2));
    Jet2 ju = j.du();
    // d/du (u^2 v) = 2uv -> value 12, u-derivative 4, v-derivative 6
    CHECK(ju.c00 == 12);
    CHECK(ju.c10 == 4);
    CHECK(ju.c01 == 6);
    // order-2 data is gone after differentiating
    CHECK(ju.c20 == 0);
    CHECK(ju.c11 == 0);
    CHECK(ju.c02 == 0);
}

TEST_CASE("taylor coefficients carry the factorials") {
    BivarPoly p = BivarPoly::monomial(Rat(1), 2, 0);  // u^2, p_uu = 2
    Jet2 j = poly_to_jet(p, Rat(0), Rat(0));
    CHECK(j.c20 == 1);  // coefficient of du^2 is p_uu / 2
}
