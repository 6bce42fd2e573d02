// focal: classify plane congruences in P^4 by their focal-locus geometry.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "focal/focal.hpp"

namespace fs = std::filesystem;
using namespace focal;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitOutOfScope = 2;
constexpr int kExitMismatch = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string rats(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

void print_text_report(const ClassReport& r, std::ostream& os) {
    os << "label: " << to_string(r.label) << "\n";
    os << "conic rank: " << r.conic_rank << "\n";
    switch (r.directions.kind) {
        case DirectionSet::Kind::Empty: os << "developable directions: none\n"; break;
        case DirectionSet::Kind::All: os << "developable directions: all of P^1\n"; break;
        case DirectionSet::Kind::Finite:
            os << "developable directions: gcd degree " << r.directions.gcd.degree()
               << (r.directions.double_root ? " (double)" : "") << "\n";
            if (r.directions.root)
                os << "rational direction: (" << rat_to_string(r.directions.root->first) << " : "
                   << rat_to_string(r.directions.root->second) << ")\n";
            break;
    }
    if (r.dims.sigma_prime) os << "dim Sigma': " << *r.dims.sigma_prime << "\n";
    if (r.dims.p_R) os << "dim p(R): " << *r.dims.p_R << "\n";
    if (r.dims.p_F1R) os << "dim p(F1(R)): " << *r.dims.p_F1R << "\n";
    const Certificate& c = r.certificate;
    if (c.fixed_line)
        os << "fixed line through: " << rats(c.fixed_line->a.coords) << " and "
           << rats(c.fixed_line->b.coords) << "\n";
    if (c.surface_point) os << "focal surface point: " << rats(c.surface_point->coords) << "\n";
    if (c.asymptotic_count) os << "asymptotic families: " << *c.asymptotic_count << "\n";
    if (c.curve_point) os << "focal curve point: " << rats(c.curve_point->coords) << "\n";
    if (c.osculating_contained)
        os << "osculating plane in pencil: " << (*c.osculating_contained ? "yes" : "no") << "\n";
    if (c.vertex) os << "cone vertex: " << rats(c.vertex->coords) << "\n";
    if (c.per_line_focus_count) os << "foci per line: " << *c.per_line_focus_count << "\n";
    if (c.focus_point) os << "focus witness: " << rats(c.focus_point->coords) << "\n";
    if (c.generator_line)
        os << "generator line through: " << rats(c.generator_line->a.coords) << " and "
           << rats(c.generator_line->b.coords) << "\n";
    os << "samples used: " << r.samples.size() << ", resamples: " << r.resamples
       << ", seed: " << r.seed << "\n";
}

int cmd_classify(const std::string& path, const RunConfig& cfg, bool json) {
    PlaneChart chart = parse_chart(read_file(path));
    ClassReport r = classify(chart, cfg);
    if (json)
        std::cout << report_to_json(r).dump(2) << "\n";
    else
        print_text_report(r, std::cout);
    return is_degenerate_class(r.label) ? kExitOk : kExitOutOfScope;
}

int cmd_conic(const std::string& path, const std::string& at, bool json) {
    PlaneChart chart = parse_chart(read_file(path));
    auto comma = at.find(',');
    if (comma == std::string::npos)
        throw Error(ErrorKind::SyntaxError, "--at expects 'u0,v0' with exact rationals");
    Rat u0 = rat_from_string(at.substr(0, comma));
    Rat v0 = rat_from_string(at.substr(comma + 1));

    JetFrame frame;
    try {
        frame = eval_frame(chart, u0, v0);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DegenerateSpanAtBase) {
            std::cerr << "error: " << e.what() << "\nchoose another base point with --at\n";
            return kExitError;
        }
        throw;
    }
    CharForms forms = characteristic_forms(frame);
    FocalConic conic = focal_conic(forms);
    DirectionSet dirs = developable_directions(forms);
    PencilConfig pencils = pencil_configuration(forms);

    auto pencil_name = [&]() -> std::string {
        switch (pencils.kind) {
            case PencilConfig::Kind::OneDegenerate: return "one-degenerate";
            case PencilConfig::Kind::BothDegenerateDistinct: return "both-degenerate-distinct";
            case PencilConfig::Kind::BothDegenerateCoincident: return "both-degenerate-coincident";
            case PencilConfig::Kind::DistinctBasePoints: return "distinct-base-points";
            case PencilConfig::Kind::SameBasePoint: return "same-base-point";
        }
        return "?";
    };

    std::vector<std::pair<Rat, Rat>> dir_list;
    if (dirs.kind == DirectionSet::Kind::Finite) {
        if (dirs.root) dir_list.push_back(*dirs.root);
        if (dirs.gcd.degree() == 2 && !dirs.double_root) {
            Rat disc = binform_disc(dirs.gcd);
            if (is_square(disc) && !focal::is_zero(disc)) {
                const Rat &a = dirs.gcd.coeffs[0], &b = dirs.gcd.coeffs[1],
                          &c = dirs.gcd.coeffs[2];
                if (focal::is_zero(a)) {
                    dir_list.push_back({Rat(1), Rat(0)});
                    dir_list.push_back({-c, b});
                } else {
                    Rat sd(Int(boost::multiprecision::sqrt(num(disc))),
                           Int(boost::multiprecision::sqrt(den(disc))));
                    dir_list.push_back({-b + sd, 2 * a});
                    dir_list.push_back({-b - sd, 2 * a});
                }
            }
        }
    } else if (dirs.kind == DirectionSet::Kind::All) {
        dir_list.push_back({Rat(1), Rat(0)});
        dir_list.push_back({Rat(0), Rat(1)});
    }

    if (json) {
        ordered_json o;
        o["base"] = ordered_json::array({rat_to_string(u0), rat_to_string(v0)});
        ordered_json m = ordered_json::array();
        for (const auto& row : conic.matrix) m.push_back(json_detail::rat_array(row));
        o["conic_matrix"] = m;
        o["conic_rank"] = conic.rank;
        switch (dirs.kind) {
            case DirectionSet::Kind::Empty: o["directions"] = "empty"; break;
            case DirectionSet::Kind::Finite: o["directions"] = "finite"; break;
            case DirectionSet::Kind::All: o["directions"] = "all"; break;
        }
        o["gcd_degree"] = dirs.kind == DirectionSet::Kind::Finite ? dirs.gcd.degree() : 0;
        ordered_json loci = ordered_json::array();
        for (const auto& [l, m2] : dir_list) {
            FocalLocus locus = focal_locus_for_direction(forms, l, m2);
            ordered_json lo;
            lo["direction"] = ordered_json::array({rat_to_string(l), rat_to_string(m2)});
            switch (locus.kind) {
                case FocalLocus::Kind::EmptyLocus: lo["locus"] = "empty"; break;
                case FocalLocus::Kind::Point:
                    lo["locus"] = "point";
                    lo["plane_coords"] = json_detail::rat_array(locus.point);
                    break;
                case FocalLocus::Kind::Line:
                    lo["locus"] = "line";
                    lo["line_form"] = json_detail::rat_array(locus.line);
                    break;
                case FocalLocus::Kind::WholePlane: lo["locus"] = "whole-plane"; break;
            }
            loci.push_back(lo);
        }
        o["loci"] = loci;
        o["pencils"] = pencil_name();
        std::cout << o.dump(2) << "\n";
    } else {
        std::cout << "base: (" << rat_to_string(u0) << ", " << rat_to_string(v0) << ")\n";
        std::cout << "conic matrix:\n";
        for (const auto& row : conic.matrix) std::cout << "  " << rats(row) << "\n";
        std::cout << "conic rank: " << conic.rank << "\n";
        switch (dirs.kind) {
            case DirectionSet::Kind::Empty:
                std::cout << "developable directions: none\n";
                break;
            case DirectionSet::Kind::All:
                std::cout << "developable directions: all\n";
                break;
            case DirectionSet::Kind::Finite:
                std::cout << "developable directions: gcd degree " << dirs.gcd.degree()
                          << (dirs.double_root ? " (double)" : "") << "\n";
                break;
        }
        for (const auto& [l, m2] : dir_list) {
            FocalLocus locus = focal_locus_for_direction(forms, l, m2);
            std::cout << "direction (" << rat_to_string(l) << " : " << rat_to_string(m2)
                      << ") -> ";
            switch (locus.kind) {
                case FocalLocus::Kind::EmptyLocus: std::cout << "empty locus\n"; break;
                case FocalLocus::Kind::Point:
                    std::cout << "focal point at plane coords " << rats(locus.point) << "\n";
                    break;
                case FocalLocus::Kind::Line:
                    std::cout << "focal line cut by form " << rats(locus.line) << "\n";
                    break;
                case FocalLocus::Kind::WholePlane: std::cout << "whole plane focal\n"; break;
            }
        }
        std::cout << "pencil configuration: " << pencil_name() << "\n";
    }
    return kExitOk;
}

int cmd_corpus(const std::string& cls, std::size_t count, std::uint64_t seed,
               const std::string& outdir, std::size_t parallelism) {
    auto label = label_from_string(cls);
    if (!label || (!is_degenerate_class(*label) && *label != ClassLabel::IrreducibleConic))
        throw Error(ErrorKind::IoError, "unknown or ungeneratable class: " + cls);
    fs::create_directories(outdir);

    std::vector<std::string> results(count);
    std::vector<std::string> errors(count);
    auto work = [&](std::size_t i) {
        try {
            PlaneChart c = generate(*label, seed + i);
            results[i] = print_chart(c);
        } catch (const Error& e) {
            errors[i] = e.what();
        }
    };
    if (parallelism <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t next = 0;
        std::mutex mtx;
        for (std::size_t t = 0; t < parallelism; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i;
                    {
                        std::lock_guard<std::mutex> lk(mtx);
                        if (next >= count) return;
                        i = next++;
                    }
                    work(i);
                }
            });
        for (auto& th : pool) th.join();
    }

    bool failed = false;
    for (std::size_t i = 0; i < count; ++i) {
        if (!errors[i].empty()) {
            std::cerr << "generation failed for seed " << (seed + i) << ": " << errors[i] << "\n";
            failed = true;
            continue;
        }
        std::string name = to_string(*label) + std::string("-") + std::to_string(seed + i) +
                           ".chart";
        std::ofstream out(fs::path(outdir) / name);
        out << results[i];
    }
    std::cout << "wrote " << count << " chart(s) to " << outdir << "\n";
    return failed ? kExitError : kExitOk;
}

int cmd_verify(const std::string& dir, const RunConfig& cfg, std::size_t parallelism) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".chart") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "no .chart files in " << dir << "\n";
        return kExitError;
    }

    struct Row {
        std::string file, expect, got, error;
    };
    std::vector<Row> rows(files.size());
    auto work = [&](std::size_t i) {
        Row& row = rows[i];
        row.file = files[i].filename().string();
        try {
            PlaneChart c = parse_chart(read_file(files[i].string()));
            row.expect = c.expect;
            row.got = to_string(classify(c, cfg).label);
        } catch (const Error& e) {
            row.error = e.what();
        }
    };
    if (parallelism <= 1) {
        for (std::size_t i = 0; i < files.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t next = 0;
        std::mutex mtx;
        for (std::size_t t = 0; t < parallelism; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i;
                    {
                        std::lock_guard<std::mutex> lk(mtx);
                        if (next >= files.size()) return;
                        i = next++;
                    }
                    work(i);
                }
            });
        for (auto& th : pool) th.join();
    }

    std::size_t mismatches = 0;
    for (const Row& r : rows) {
        if (!r.error.empty()) {
            std::cout << r.file << ": ERROR " << r.error << "\n";
            ++mismatches;
        } else if (r.expect.empty()) {
            std::cout << r.file << ": no expect metadata, got " << r.got << "\n";
        } else if (r.expect != r.got) {
            std::cout << r.file << ": MISMATCH expect " << r.expect << ", got " << r.got << "\n";
            ++mismatches;
        } else {
            std::cout << r.file << ": " << r.got << " ok\n";
        }
    }
    std::cout << (rows.size() - mismatches) << "/" << rows.size() << " match\n";
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_validate(const std::string& path, const RunConfig& cfg) {
    PlaneChart chart = parse_chart(read_file(path));
    ChartValidation v = validate_chart(chart, {cfg.seed, cfg.samples, cfg.resample_budget});
    switch (v.verdict) {
        case ChartVerdict::Ok:
            std::cout << "ok: nondegenerate congruence (realization dimension 4)\n";
            return kExitOk;
        case ChartVerdict::DegenerateChart:
            std::cout << "degenerate chart: the three maps never span a plane\n";
            return kExitOutOfScope;
        case ChartVerdict::DegenerateCongruence:
            std::cout << "degenerate congruence: realization dimension " << v.realization_dim
                      << " < 4\n";
            return kExitOutOfScope;
    }
    return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"focal: classification of plane congruences in P^4 by focal loci"};
    app.require_subcommand(1);

    RunConfig cfg;
    bool json = false;
    std::string path, at, cls, outdir = ".", dir;
    std::size_t count = 1, parallelism = 1;

    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "random seed (default 0)");
        sub->add_option("--samples", cfg.samples, "base points per decision (default 5)");
        sub->add_option("--budget", cfg.resample_budget, "resample budget (default 12)");
    };

    CLI::App* c1 = app.add_subcommand("classify", "classify a chart file");
    c1->add_option("file", path, "chart file")->required();
    c1->add_flag("--json", json, "JSON output");
    add_sampling(c1);

    CLI::App* c2 = app.add_subcommand("conic", "focal conic snapshot at a base point");
    c2->add_option("file", path, "chart file")->required();
    c2->add_option("--at", at, "base point 'u0,v0' (exact rationals)")->required();
    c2->add_flag("--json", json, "JSON output");

    CLI::App* c3 = app.add_subcommand("corpus", "generate a seeded chart corpus");
    c3->add_option("--class", cls, "target class label")->required();
    c3->add_option("--count", count, "number of charts (default 1)");
    c3->add_option("--seed", cfg.seed, "first seed (default 0)");
    c3->add_option("--out", outdir, "output directory (default .)");
    c3->add_option("--parallel", parallelism, "worker threads (default 1)");

    CLI::App* c4 = app.add_subcommand("verify", "re-classify a corpus and check expect labels");
    c4->add_option("dir", dir, "directory of .chart files")->required();
    c4->add_option("--parallel", parallelism, "worker threads (default 1)");
    add_sampling(c4);

    CLI::App* c5 = app.add_subcommand("validate", "check chart nondegeneracy");
    c5->add_option("file", path, "chart file")->required();
    add_sampling(c5);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c1->parsed()) return cmd_classify(path, cfg, json);
        if (c2->parsed()) return cmd_conic(path, at, json);
        if (c3->parsed()) return cmd_corpus(cls, count, cfg.seed, outdir, parallelism);
        if (c4->parsed()) return cmd_verify(dir, cfg, parallelism);
        if (c5->parsed()) return cmd_validate(path, cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
