#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "focal/error.hpp"

namespace focal {

/// Exact rational scalar. boost keeps the canonical reduced form
/// (gcd(num,den)=1, den>0) for us.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_zero(const Rat& r) { return r.is_zero(); }

/// "p/q" when q != 1, plain "p" otherwise.
inline std::string rat_to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

/// Parses "p" or "p/q" with optional leading sign. Throws SyntaxError.
inline Rat rat_from_string(const std::string& s) {
    auto bad = [&] { throw Error(ErrorKind::SyntaxError, "bad rational: '" + s + "'"); };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) bad();
        return Rat(p, q);
    } catch (const std::exception&) {
        bad();
    }
    return Rat();  // unreachable
}

/// True iff r is the square of a rational (r >= 0 and both numerator and
/// denominator are perfect squares).
inline bool is_square(const Rat& r) {
    if (r < 0) return false;
    if (r == 0) return true;
    Int p = num(r), q = den(r);
    Int sp = boost::multiprecision::sqrt(p);
    Int sq = boost::multiprecision::sqrt(q);
    return sp * sp == p && sq * sq == q;
}

}  // namespace focal
