#include <doctest.h>

#include "focal/generators.hpp"

using namespace focal;

namespace {

const ClassLabel kAllClasses[] = {ClassLabel::Alpha1, ClassLabel::Alpha2, ClassLabel::Alpha3,
                                  ClassLabel::Beta1,  ClassLabel::Beta2,  ClassLabel::Beta3,
                                  ClassLabel::Gamma1, ClassLabel::Gamma2, ClassLabel::Gamma3,
                                  ClassLabel::Delta};

}  // namespace

TEST_CASE("generated charts classify to their target label") {
    for (ClassLabel target : kAllClasses) {
        for (std::uint64_t seed : {10ull, 11ull}) {
            PlaneChart c = generate(target, seed);
            CHECK(c.expect == to_string(target));
            CHECK(validate_chart(c, {}).ok());
            CHECK(classify(c, {seed + 500, 4, 12}).label == target);
        }
    }
}

TEST_CASE("generation is deterministic in (class, seed)") {
    for (ClassLabel target : {ClassLabel::Beta1, ClassLabel::Gamma2, ClassLabel::Alpha3}) {
        PlaneChart a = generate(target, 21);
        PlaneChart b = generate(target, 21);
        CHECK(print_chart(a) == print_chart(b));
        PlaneChart c = generate(target, 22);
        CHECK(print_chart(a) != print_chart(c));
    }
}

TEST_CASE("cone generators produce the advertised line-family foci") {
    for (std::uint64_t seed : {30ull, 31ull, 32ull}) {
        PlaneChart h = generate(ClassLabel::Beta3, seed);
        ClassReport rh = classify(h, {seed, 4, 12});
        CHECK(rh.certificate.per_line_focus_count.value_or(0) == 2);

        PlaneChart p = generate(ClassLabel::Gamma3, seed);
        ClassReport rp = classify(p, {seed, 4, 12});
        CHECK(rp.certificate.per_line_focus_count.value_or(0) == 1);
    }
}

TEST_CASE("identity transform is a no-op") {
    PlaneChart c = generate(ClassLabel::Beta2, 7);
    PlaneChart t = transform_chart(c, identity_transform());
    CHECK(print_chart(t) == print_chart(c));
}

TEST_CASE("singular transforms are rejected") {
    PlaneChart c = generate(ClassLabel::Delta, 7);
    ChartTransform t = identity_transform();
    t.coords[0] = t.coords[1];
    CHECK_THROWS_AS(transform_chart(c, t), Error);
    ChartTransform t2 = identity_transform();
    t2.reparam[1] = t2.reparam[0];
    CHECK_THROWS_AS(transform_chart(c, t2), Error);
}

TEST_CASE("coordinate swap preserves the Delta label and maps its line") {
    PlaneChart c = generate(ClassLabel::Delta, 3);
    ChartTransform t = identity_transform();
    std::swap(t.coords[0], t.coords[4]);
    PlaneChart swapped = transform_chart(c, t);
    CHECK(classify(swapped, {9, 4, 12}).label == ClassLabel::Delta);
}

TEST_CASE("respanning keeps the conic rank") {
    PlaneChart c = parse_chart(R"(vars: u v
point: [1, u, u^2, v, v^2]
point: [0, 1, 2*u, 0, 0]
point: [0, 0, 0, 1, 2*v]
)");
    SeedStream rng(15);
    for (int trial = 0; trial < 5; ++trial) {
        ChartTransform t = identity_transform();
        ChartTransform r = random_transform(rng);
        t.respan = r.respan;
        PlaneChart rc = transform_chart(c, t);
        JetFrame fr = eval_frame(rc, Rat(1), Rat(1));
        CHECK(focal_conic(characteristic_forms(fr)).rank == 2);
    }
}

TEST_CASE("labels survive random full transforms") {
    SeedStream rng(99);
    for (ClassLabel target : {ClassLabel::Alpha1, ClassLabel::Gamma2, ClassLabel::Beta3}) {
        PlaneChart c = generate(target, 40);
        PlaneChart t = transform_chart(c, random_transform(rng));
        CHECK(classify(t, {41, 4, 12}).label == target);
    }
}
