#pragma once

#include <json.hpp>

#include "focal/classifier.hpp"

namespace focal {

namespace json_detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json rat_array(const RatVec& v) {
    ordered_json a = ordered_json::array();
    for (const Rat& x : v) a.push_back(rat_to_string(x));
    return a;
}

inline ordered_json point_json(const ProjPoint& p) { return rat_array(p.coords); }

inline ordered_json line_json(const ProjLine& l) {
    ordered_json o;
    o["points"] = ordered_json::array({point_json(l.a), point_json(l.b)});
    o["pluecker"] = rat_array(l.pluecker);
    return o;
}

}  // namespace json_detail

/// Deterministic JSON form of a classification report. All rationals are
/// exact "p/q" strings; key order is fixed.
inline nlohmann::ordered_json report_to_json(const ClassReport& r) {
    using json_detail::ordered_json;
    ordered_json o;
    o["label"] = to_string(r.label);
    o["conic_rank"] = r.conic_rank;

    ordered_json dir;
    switch (r.directions.kind) {
        case DirectionSet::Kind::Empty: dir["kind"] = "empty"; break;
        case DirectionSet::Kind::Finite: dir["kind"] = "finite"; break;
        case DirectionSet::Kind::All: dir["kind"] = "all"; break;
    }
    dir["gcd_degree"] =
        r.directions.kind == DirectionSet::Kind::Finite ? r.directions.gcd.degree() : 0;
    dir["double"] = r.directions.double_root;
    if (r.directions.root)
        dir["root"] = ordered_json::array(
            {rat_to_string(r.directions.root->first), rat_to_string(r.directions.root->second)});
    else
        dir["root"] = nullptr;
    o["directions"] = dir;

    ordered_json dims;
    dims["sigma_prime"] = r.dims.sigma_prime ? ordered_json(*r.dims.sigma_prime) : nullptr;
    dims["p_R"] = r.dims.p_R ? ordered_json(*r.dims.p_R) : nullptr;
    dims["p_F1R"] = r.dims.p_F1R ? ordered_json(*r.dims.p_F1R) : nullptr;
    o["dims"] = dims;

    ordered_json cert = ordered_json::object();
    const Certificate& c = r.certificate;
    if (c.fixed_line) cert["fixed_line"] = json_detail::line_json(*c.fixed_line);
    if (c.surface_point) cert["surface_point"] = json_detail::point_json(*c.surface_point);
    if (c.tangent_ok) cert["tangent_ok"] = *c.tangent_ok;
    if (c.asymptotic_count) cert["asymptotic_count"] = *c.asymptotic_count;
    if (c.curve_point) cert["curve_point"] = json_detail::point_json(*c.curve_point);
    if (c.tangent_line) cert["tangent_line"] = json_detail::line_json(*c.tangent_line);
    if (c.osculating_contained) cert["osculating_contained"] = *c.osculating_contained;
    if (c.vertex) cert["vertex"] = json_detail::point_json(*c.vertex);
    if (c.per_line_focus_count) cert["per_line_focus_count"] = *c.per_line_focus_count;
    if (c.focus_point) cert["focus_point"] = json_detail::point_json(*c.focus_point);
    if (c.generator_line) cert["generator_line"] = json_detail::line_json(*c.generator_line);
    o["certificate"] = cert;

    ordered_json samples = ordered_json::array();
    for (const auto& [u, v] : r.samples)
        samples.push_back(ordered_json::array({rat_to_string(u), rat_to_string(v)}));
    o["samples"] = samples;
    o["seed"] = r.seed;
    o["resamples"] = r.resamples;
    return o;
}

}  // namespace focal
