#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "focal/jet.hpp"
#include "focal/scalar.hpp"

namespace focal {

namespace detail {
/// degree-lex monomial order, u before v: sort by total degree, then by
/// u-exponent descending.
struct DegLex {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
        int da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da < db;
        return a.first > b.first;
    }
};
}  // namespace detail

/// Bivariate polynomial over Rat in parameters (u, v), kept in canonical
/// expanded form (no zero coefficients stored).
class BivarPoly {
public:
    using Terms = std::map<std::pair<int, int>, Rat, detail::DegLex>;

    BivarPoly() = default;
    explicit BivarPoly(Rat c) {
        if (!focal::is_zero(c)) terms_[{0, 0}] = std::move(c);
    }

    static BivarPoly monomial(Rat c, int du, int dv) {
        BivarPoly p;
        if (!focal::is_zero(c)) p.terms_[{du, dv}] = std::move(c);
        return p;
    }
    static BivarPoly var_u() { return monomial(Rat(1), 1, 0); }
    static BivarPoly var_v() { return monomial(Rat(1), 0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::pair{0, 0});
    }
    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
        return d;
    }

    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

    BivarPoly operator-() const {
        BivarPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m.first, m.second, c);
        return r;
    }
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m.first, m.second, -c);
        return r;
    }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
        return r;
    }
    friend BivarPoly operator*(const Rat& s, const BivarPoly& a) {
        BivarPoly r;
        for (const auto& [m, c] : a.terms_) r.add_term(m.first, m.second, s * c);
        return r;
    }
    BivarPoly& operator+=(const BivarPoly& o) { return *this = *this + o; }
    BivarPoly& operator-=(const BivarPoly& o) { return *this = *this - o; }

    BivarPoly pow(int e) const {
        BivarPoly r(Rat(1));
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    Rat eval(const Rat& u, const Rat& v) const {
        Rat s(0);
        for (const auto& [m, c] : terms_) s += c * pw(u, m.first) * pw(v, m.second);
        return s;
    }

    BivarPoly du() const {
        BivarPoly r;
        for (const auto& [m, c] : terms_)
            if (m.first > 0) r.add_term(m.first - 1, m.second, Rat(m.first) * c);
        return r;
    }
    BivarPoly dv() const {
        BivarPoly r;
        for (const auto& [m, c] : terms_)
            if (m.second > 0) r.add_term(m.first, m.second - 1, Rat(m.second) * c);
        return r;
    }

    /// Composition with polynomial substitutions u -> su, v -> sv.
    BivarPoly substitute(const BivarPoly& su, const BivarPoly& sv) const {
        BivarPoly r;
        for (const auto& [m, c] : terms_)
            r += BivarPoly(c) * su.pow(m.first) * sv.pow(m.second);
        return r;
    }

    /// Canonical printer: expanded monomials, degree-lex (highest last would
    /// be unusual; we emit lowest degree first, u before v inside a degree).
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rat a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_var = m.first > 0 || m.second > 0;
            if (!has_var || a != 1) {
                os << rat_to_string(a);
                if (has_var) os << "*";
            }
            if (m.first > 0) {
                os << "u";
                if (m.first > 1) os << "^" << m.first;
                if (m.second > 0) os << "*";
            }
            if (m.second > 0) {
                os << "v";
                if (m.second > 1) os << "^" << m.second;
            }
        }
        return os.str();
    }

private:
    static Rat pw(const Rat& x, int e) {
        Rat r(1);
        for (int i = 0; i < e; ++i) r *= x;
        return r;
    }

    void add_term(int a, int b, const Rat& c) {
        if (focal::is_zero(c)) return;
        auto it = terms_.find({a, b});
        if (it == terms_.end()) {
            terms_[{a, b}] = c;
        } else {
            it->second += c;
            if (focal::is_zero(it->second)) terms_.erase(it);
        }
    }

    Terms terms_;
};

/// Degree-2 Taylor jet of p at the base point; coefficients agree with the
/// symbolic partial derivatives (factorials absorbed).
inline Jet2 poly_to_jet(const BivarPoly& p, const Rat& u0, const Rat& v0) {
    BivarPoly pu = p.du(), pv = p.dv();
    return Jet2(p.eval(u0, v0),
                pu.eval(u0, v0),
                pv.eval(u0, v0),
                pu.du().eval(u0, v0) / 2,
                pu.dv().eval(u0, v0),
                pv.dv().eval(u0, v0) / 2);
}

}  // namespace focal
