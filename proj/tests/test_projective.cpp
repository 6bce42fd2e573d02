#include <doctest.h>

#include "focal/projective.hpp"
#include "focal/rng.hpp"

using namespace focal;

namespace {

RatVec random_vec5(SeedStream& rng) {
    for (;;) {
        RatVec v(5);
        bool nz = false;
        for (auto& x : v) {
            x = rng.next_rat(8, 5);
            if (!focal::is_zero(x)) nz = true;
        }
        if (nz) return v;
    }
}

}  // namespace

TEST_CASE("canonical representatives are scale independent") {
    SeedStream rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        RatVec v = random_vec5(rng);
        Rat s = rng.next_rat_nonzero(9, 4);
        RatVec w(5);
        for (int i = 0; i < 5; ++i) w[i] = s * v[i];
        CHECK(ProjPoint(v) == ProjPoint(w));
        CHECK(proj_equal(v, w));
    }
}

TEST_CASE("zero vectors are rejected") {
    CHECK_THROWS_AS(ProjPoint(RatVec(5, Rat(0))), Error);
    RatVec p{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)};
    CHECK_THROWS_AS(ProjLine(ProjPoint(p), ProjPoint(p)), Error);
}

TEST_CASE("lines compare by span, not by spanning points") {
    SeedStream rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        RatVec a = random_vec5(rng), b = random_vec5(rng);
        if (mat_rank({a, b}) < 2) continue;
        // Re-span by a random invertible 2x2 change.
        Rat m00 = rng.next_rat_nonzero(5, 2), m01 = rng.next_rat(5, 2);
        Rat m10 = rng.next_rat(5, 2), m11 = rng.next_rat_nonzero(5, 2);
        if (focal::is_zero(m00 * m11 - m01 * m10)) continue;
        RatVec c(5), d(5);
        for (int i = 0; i < 5; ++i) {
            c[i] = m00 * a[i] + m01 * b[i];
            d[i] = m10 * a[i] + m11 * b[i];
        }
        CHECK(ProjLine(ProjPoint(a), ProjPoint(b)) == ProjLine(ProjPoint(c), ProjPoint(d)));
    }
}

TEST_CASE("pluecker coordinates satisfy the quadratic relations") {
    SeedStream rng(11);
    auto idx = [](int i, int j) {  // position of p_ij (i<j) in the flat vector
        int k = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) {
                if (a == i && b == j) return k;
                ++k;
            }
        return -1;
    };
    auto sgn_get = [&](const RatVec& p, int i, int j) -> Rat {
        if (i == j) return Rat(0);
        return i < j ? p[idx(i, j)] : -p[idx(j, i)];
    };
    for (int trial = 0; trial < 15; ++trial) {
        RatVec a = random_vec5(rng), b = random_vec5(rng);
        if (mat_rank({a, b}) < 2) continue;
        ProjLine l{ProjPoint(a), ProjPoint(b)};
        // p_ij p_kl - p_ik p_jl + p_il p_jk = 0 over all index choices.
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                for (int k = j + 1; k < 5; ++k)
                    for (int m = k + 1; m < 5; ++m) {
                        Rat rel = sgn_get(l.pluecker, i, j) * sgn_get(l.pluecker, k, m) -
                                  sgn_get(l.pluecker, i, k) * sgn_get(l.pluecker, j, m) +
                                  sgn_get(l.pluecker, i, m) * sgn_get(l.pluecker, j, k);
                        CHECK(focal::is_zero(rel));
                    }
    }
}

TEST_CASE("image dimension from value and derivatives") {
    RatVec x{Rat(1), Rat(2), Rat(3), Rat(0), Rat(0)};
    RatVec du{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)};
    RatVec dv{Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)};
    CHECK(image_dim(x, {du, dv}) == 2);
    CHECK(image_dim(x, {du}) == 1);
    CHECK(image_dim(x, {x}) == 0);
    RatVec prop{Rat(2), Rat(4), Rat(6), Rat(0), Rat(0)};
    CHECK(image_dim(x, {prop}) == 0);
}

TEST_CASE("hyperplane evaluation") {
    Hyperplane h(RatVec{Rat(1), Rat(0), Rat(0), Rat(0), Rat(-1)});
    CHECK(h.eval(ProjPoint(RatVec{Rat(1), Rat(2), Rat(3), Rat(4), Rat(1)})) == 0);
    CHECK(h.eval(ProjPoint(RatVec{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)})) != 0);
}
