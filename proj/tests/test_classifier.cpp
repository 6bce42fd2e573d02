#include <doctest.h>

#include "focal/classifier.hpp"
#include "focal/report_json.hpp"

using namespace focal;

namespace {

ClassReport classify_text(const char* text, std::uint64_t seed = 0) {
    return classify(parse_chart(text), {seed, 5, 12});
}

const char* kFixedLine = R"(vars: u v
point: [1, 0, 0, 0, 0]
point: [0, 1, 0, 0, 0]
point: [0, 0, 1, u, v]
)";

const char* kTranslation = R"(vars: u v
point: [1, u, u^2, v, v^2]
point: [0, 1, 2*u, 0, 0]
point: [0, 0, 0, 1, 2*v]
)";

const char* kTangentLines = R"(vars: u v
point: [1, u, u^2, u^3, u^4]
point: [0, 1, 2*u, 3*u^2, 4*u^3]
point: [v, 0, 0, 1, u + v]
)";

const char* kOsculatingPencil = R"(vars: u v
point: [1, u, u^2, u^3, u^4]
point: [0, 1, 2*u, 3*u^2, 4*u^3]
point: [0, 0, 2, 6*u + v, 12*u^2]
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

const char* kRuledTangent = R"(vars: u v
point: [1 + v*u^2, u, u^2 + v*(1 + 2*u^3), u^3 + v*u^4, v]
point: [v*2*u, 1, 2*u + v*6*u^2, 3*u^2 + v*4*u^3, 0]
point: [u^2, 0, 1 + 2*u^3, u^4, 1]
)";

}  // namespace

TEST_CASE("fixed-line chart is Delta with the planted line") {
    ClassReport r = classify_text(kFixedLine);
    CHECK(r.label == ClassLabel::Delta);
    CHECK(r.conic_rank == 1);
    REQUIRE(r.certificate.fixed_line.has_value());
    RatVec e0{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)};
    RatVec e1{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)};
    CHECK(*r.certificate.fixed_line == ProjLine(ProjPoint(e0), ProjPoint(e1)));
}

TEST_CASE("translation-surface chart is Beta1") {
    ClassReport r = classify_text(kTranslation);
    CHECK(r.label == ClassLabel::Beta1);
    CHECK(r.conic_rank == 2);
    REQUIRE(r.dims.sigma_prime.has_value());
    CHECK(*r.dims.sigma_prime == 2);
    CHECK(r.certificate.tangent_ok.value_or(false));
    CHECK(r.certificate.asymptotic_count.value_or("") == "0");
}

TEST_CASE("ruled-surface tangent chart is Gamma1") {
    ClassReport r = classify_text(kRuledTangent);
    CHECK(r.label == ClassLabel::Gamma1);
    CHECK(r.conic_rank == 1);
    CHECK(r.dims.sigma_prime.value_or(0) == 2);
    CHECK(r.certificate.asymptotic_count.value_or("") == "1");
}

TEST_CASE("tangent-line charts split into Beta2 and Gamma2") {
    ClassReport b = classify_text(kTangentLines);
    CHECK(b.label == ClassLabel::Beta2);
    CHECK(b.dims.sigma_prime.value_or(9) == 1);
    CHECK(!b.certificate.osculating_contained.value_or(true));

    ClassReport g = classify_text(kOsculatingPencil);
    CHECK(g.label == ClassLabel::Gamma2);
    CHECK(g.dims.sigma_prime.value_or(9) == 1);
    CHECK(g.certificate.osculating_contained.value_or(false));
}

TEST_CASE("cone charts split into Beta3 and Gamma3") {
    ClassReport b = classify_text(kHyperbolicCone);
    CHECK(b.label == ClassLabel::Beta3);
    CHECK(b.dims.sigma_prime.value_or(9) == 0);
    RatVec e4{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};
    CHECK(b.certificate.vertex.value_or(ProjPoint(RatVec{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)})) ==
          ProjPoint(e4));
    CHECK(b.certificate.per_line_focus_count.value_or(0) == 2);

    ClassReport g = classify_text(kParabolicCone);
    CHECK(g.label == ClassLabel::Gamma3);
    CHECK(g.certificate.per_line_focus_count.value_or(0) == 1);
}

TEST_CASE("singular point of the conic is the universal focal point") {
    for (const char* text : {kTranslation, kTangentLines, kHyperbolicCone}) {
        PlaneChart c = parse_chart(text);
        SeedStream rng(77);
        for (int trial = 0; trial < 4; ++trial) {
            auto [u0, v0] = rng.next_base(9, 4);
            JetFrame fr;
            try {
                fr = eval_frame(c, u0, v0);
            } catch (const Error&) {
                continue;
            }
            CharForms f = characteristic_forms(fr);
            FocalConic conic = focal_conic(f);
            JetVec coords = universal_focal_point(f);
            RatVec pc = constant_part(coords);
            for (int i = 0; i < 3; ++i) CHECK(focal::is_zero(dot(conic.matrix[i], pc)));
        }
    }
}

TEST_CASE("certificate re-checks pass for every handwritten chart") {
    for (const char* text : {kFixedLine, kTranslation, kTangentLines, kOsculatingPencil,
                             kHyperbolicCone, kParabolicCone, kRuledTangent}) {
        PlaneChart c = parse_chart(text);
        ClassReport r = classify(c, {0, 5, 12});
        for (const auto& [name, ok] : certificate_check(c, r)) {
            INFO(name);
            CHECK(ok);
        }
    }
}

TEST_CASE("reports serialize deterministically with exact rationals") {
    PlaneChart c = parse_chart(kTranslation);
    std::string a = report_to_json(classify(c, {3, 5, 12})).dump();
    std::string b = report_to_json(classify(c, {3, 5, 12})).dump();
    CHECK(a == b);
    CHECK(a.find("\"label\":\"Beta1\"") != std::string::npos);
    CHECK(a.find("conic_rank") != std::string::npos);
    CHECK(a.find("0.") == std::string::npos);  // no floating-point leakage
}

TEST_CASE("dim helpers route by branch") {
    CHECK(dim_sigma_prime(parse_chart(kTranslation)) == 2);
    CHECK_THROWS_AS(alpha_dims(parse_chart(kTranslation)), Error);
    CHECK_THROWS_AS(dim_sigma_prime(parse_chart(kFixedLine)), Error);
}

TEST_CASE("degenerate congruences get the explicit label") {
    PlaneChart c = parse_chart(R"(vars: u v
point: [1, u, 0, 0, 0]
point: [0, 1, u+v, 0, 0]
point: [0, 0, 1, u*v, 0]
)");
    ClassReport r = classify(c);
    CHECK(r.label == ClassLabel::DegenerateCongruence);
}

TEST_CASE("label strings round-trip") {
    for (ClassLabel l : {ClassLabel::Alpha1, ClassLabel::Beta2, ClassLabel::Gamma3,
                         ClassLabel::Delta, ClassLabel::IrreducibleConic}) {
        auto back = label_from_string(to_string(l));
        REQUIRE(back.has_value());
        CHECK(*back == l);
    }
    CHECK(!label_from_string("epsilon"));
}
