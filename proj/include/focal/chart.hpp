#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "focal/error.hpp"
#include "focal/linalg.hpp"
#include "focal/poly.hpp"
#include "focal/projective.hpp"
#include "focal/rng.hpp"

namespace focal {

/// One polynomial point-map (u,v) -> P^4.
using PointMap = std::array<BivarPoly, 5>;

/// A parametrized plane congruence: three point-maps spanning the moving
/// plane. Input model for everything downstream.
struct PlaneChart {
    std::array<PointMap, 3> maps;
    std::string name;                  // optional metadata
    std::string expect;                // optional expected class label

    const PointMap& X() const { return maps[0]; }
    const PointMap& Y() const { return maps[1]; }
    const PointMap& Z() const { return maps[2]; }
};

/// Homogeneous coordinates of a point Q = a x + b y + c z on the moving plane.
struct PlaneCoords {
    Rat a, b, c;
};

/// Chart evaluated at a base point: order-2 jets of the three spanning maps
/// and of their u/v-derivative maps, plus a jet dual basis of hyperplanes
/// through the plane. Derivative jets come from the derivative polynomials,
/// so they are exact to order 2.
struct JetFrame {
    Rat u0, v0;
    std::array<JetVec, 3> pts;  // jets of X, Y, Z (5 components each)
    std::array<JetVec, 3> dpu;  // jets of X_u, Y_u, Z_u
    std::array<JetVec, 3> dpv;
    std::array<JetVec, 2> duals;  // N1, N2 with Ni . {x,y,z} = 0 as jets
};

namespace chart_detail {

class Parser {
public:
    Parser(const std::string& text, int line) : s_(text), line_(line) {}

    BivarPoly parse_expr_all() {
        BivarPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        std::ostringstream os;
        os << "syntax error at line " << line_ << ", col " << (pos_ + 1) << ": " << what;
        throw Error(ErrorKind::SyntaxError, os.str());
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_++] : '\0';
    }

    BivarPoly expr() {
        bool neg = false;
        if (peek() == '-') {
            get();
            neg = true;
        } else if (peek() == '+') {
            get();
        }
        BivarPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+') {
                get();
                acc += term();
            } else if (c == '-') {
                get();
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    BivarPoly term() {
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (get() == '-') neg = !neg;
        }
        BivarPoly acc = factor();
        if (neg) acc = -acc;
        while (peek() == '*') {
            get();
            acc = acc * factor();
        }
        return acc;
    }

    BivarPoly factor() {
        BivarPoly b = base();
        if (peek() == '^') {
            get();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            int e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                e = e * 10 + (s_[pos_++] - '0');
            b = b.pow(e);
        }
        return b;
    }

    BivarPoly base() {
        char c = peek();
        if (c == '(') {
            get();
            BivarPoly p = expr();
            if (get() != ')') fail("expected ')'");
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            get();
            if (c == 'u') return BivarPoly::var_u();
            if (c == 'v') return BivarPoly::var_v();
            throw Error(ErrorKind::UnknownVariable,
                        std::string("unknown variable '") + c + "' at line " +
                            std::to_string(line_) + " (only u, v allowed)");
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            return BivarPoly(rational());
        }
        fail("expected rational, variable, or '('");
    }

    Rat rational() {
        skip_ws();
        std::string tok;
        if (pos_ < s_.size() && s_[pos_] == '-') tok += s_[pos_++];
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            tok += s_[pos_++];
        if (pos_ < s_.size() && s_[pos_] == '/') {
            tok += s_[pos_++];
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected positive denominator");
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                tok += s_[pos_++];
        }
        return rat_from_string(tok);
    }

    const std::string& s_;
    int line_;
    std::size_t pos_ = 0;
};

inline PointMap parse_point_line(const std::string& body, int line) {
    std::size_t open = body.find('[');
    std::size_t close = body.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close <= open)
        throw Error(ErrorKind::SyntaxError,
                    "expected point: [p0, p1, p2, p3, p4] at line " + std::to_string(line));
    std::string inner = body.substr(open + 1, close - open - 1);
    // split on top-level commas
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : inner) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 5)
        throw Error(ErrorKind::SyntaxError,
                    "point needs exactly 5 coordinates at line " + std::to_string(line));
    PointMap pm;
    bool all_zero = true;
    for (int i = 0; i < 5; ++i) {
        pm[i] = Parser(parts[i], line).parse_expr_all();
        if (!pm[i].is_zero()) all_zero = false;
    }
    if (all_zero)
        throw Error(ErrorKind::ZeroPointMap,
                    "point map is identically zero at line " + std::to_string(line));
    return pm;
}

}  // namespace chart_detail

/// Parse the chart text format: '#' comments, a 'vars: u v' line, exactly
/// three 'point: [...]' lines, optional 'name:' and 'expect:' metadata.
inline PlaneChart parse_chart(const std::string& text) {
    PlaneChart chart;
    std::vector<PointMap> points;
    bool saw_vars = false;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        // trim
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);

        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::SyntaxError,
                        "expected 'key: value' at line " + std::to_string(lineno));
        std::string key = line.substr(0, colon);
        std::string val = line.substr(colon + 1);
        auto vb = val.find_first_not_of(" \t");
        val = vb == std::string::npos ? "" : val.substr(vb);

        if (key == "vars") {
            if (val != "u v")
                throw Error(ErrorKind::SyntaxError,
                            "expected 'vars: u v' at line " + std::to_string(lineno));
            saw_vars = true;
        } else if (key == "point") {
            points.push_back(chart_detail::parse_point_line(val, lineno));
        } else if (key == "name") {
            chart.name = val;
        } else if (key == "expect") {
            chart.expect = val;
        } else {
            throw Error(ErrorKind::SyntaxError,
                        "unknown key '" + key + "' at line " + std::to_string(lineno));
        }
    }
    if (!saw_vars) throw Error(ErrorKind::SyntaxError, "missing 'vars: u v' line");
    if (points.size() != 3)
        throw Error(ErrorKind::SyntaxError,
                    "expected exactly 3 point lines, got " + std::to_string(points.size()));
    chart.maps = {points[0], points[1], points[2]};
    return chart;
}

/// Canonical printer; parse(print(parse(t))) == parse(t).
inline std::string print_chart(const PlaneChart& chart) {
    std::ostringstream os;
    if (!chart.name.empty()) os << "name: " << chart.name << "\n";
    os << "vars: u v\n";
    for (const PointMap& pm : chart.maps) {
        os << "point: [";
        for (int i = 0; i < 5; ++i) {
            if (i) os << ", ";
            os << pm[i].str();
        }
        os << "]\n";
    }
    if (!chart.expect.empty()) os << "expect: " << chart.expect << "\n";
    return os.str();
}

/// First-order data of the plane family at a base point.
inline JetFrame eval_frame(const PlaneChart& chart, const Rat& u0, const Rat& v0) {
    JetFrame f;
    f.u0 = u0;
    f.v0 = v0;
    for (int m = 0; m < 3; ++m) {
        f.pts[m].resize(5);
        f.dpu[m].resize(5);
        f.dpv[m].resize(5);
        for (int i = 0; i < 5; ++i) {
            const BivarPoly& p = chart.maps[m][i];
            f.pts[m][i] = poly_to_jet(p, u0, v0);
            f.dpu[m][i] = poly_to_jet(p.du(), u0, v0);
            f.dpv[m][i] = poly_to_jet(p.dv(), u0, v0);
        }
    }
    RatMat cm{constant_part(f.pts[0]), constant_part(f.pts[1]), constant_part(f.pts[2])};
    if (mat_rank(cm) < 3)
        throw Error(ErrorKind::DegenerateSpanAtBase,
                    "span rank < 3 at base (" + rat_to_string(u0) + "," + rat_to_string(v0) + ")");
    JetMat jm{f.pts[0], f.pts[1], f.pts[2]};
    auto ns = jet_nullspace(std::move(jm));  // may throw PivotNotUnit
    f.duals = {ns[0], ns[1]};
    return f;
}

enum class ChartVerdict { Ok, DegenerateChart, DegenerateCongruence };

struct ChartValidation {
    ChartVerdict verdict;
    std::size_t realization_dim = 0;
    bool ok() const { return verdict == ChartVerdict::Ok; }
};

struct SamplingConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 5;
    std::size_t resample_budget = 12;
};

/// Nondegeneracy test: the chart must span a plane at generic samples and the
/// planes must fill P^4 (projective realization of dimension 4, estimated as
/// the max over samples of rank[x,y,z,Q_u,Q_v] - 1 at random plane coords).
inline ChartValidation validate_chart(const PlaneChart& chart, const SamplingConfig& cfg) {
    SeedStream rng(cfg.seed ^ 0x76616c6964ULL);
    bool spanned = false;
    std::size_t best_dim = 0;
    std::size_t draws = cfg.samples + cfg.resample_budget;
    for (std::size_t s = 0; s < draws; ++s) {
        auto [u0, v0] = rng.next_base();
        RatVec x(5), y(5), z(5);
        for (int i = 0; i < 5; ++i) {
            x[i] = chart.X()[i].eval(u0, v0);
            y[i] = chart.Y()[i].eval(u0, v0);
            z[i] = chart.Z()[i].eval(u0, v0);
        }
        if (mat_rank({x, y, z}) < 3) continue;
        spanned = true;
        Rat a = rng.next_rat_nonzero(), b = rng.next_rat(), c = rng.next_rat();
        RatVec qu(5), qv(5);
        for (int i = 0; i < 5; ++i) {
            qu[i] = a * chart.X()[i].du().eval(u0, v0) + b * chart.Y()[i].du().eval(u0, v0) +
                    c * chart.Z()[i].du().eval(u0, v0);
            qv[i] = a * chart.X()[i].dv().eval(u0, v0) + b * chart.Y()[i].dv().eval(u0, v0) +
                    c * chart.Z()[i].dv().eval(u0, v0);
        }
        best_dim = std::max(best_dim, mat_rank({x, y, z, qu, qv}) - 1);
        if (best_dim == 4 && s + 1 >= cfg.samples) break;
    }
    if (!spanned) return {ChartVerdict::DegenerateChart, 0};
    if (best_dim < 4) return {ChartVerdict::DegenerateCongruence, best_dim};
    return {ChartVerdict::Ok, best_dim};
}

}  // namespace focal
