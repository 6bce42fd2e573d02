#pragma once

#include <array>

#include "focal/error.hpp"
#include "focal/scalar.hpp"

namespace focal {

/// Degree-2 truncated Taylor expansion in two parameters,
///   c00 + c10 du + c01 dv + c20 du^2 + c11 du dv + c02 dv^2.
/// Coefficients are Taylor coefficients (factorials absorbed): the value of
/// d^2/du^2 is 2*c20, of d^2/du dv is c11.
struct Jet2 {
    Rat c00, c10, c01, c20, c11, c02;

    Jet2() = default;
    explicit Jet2(Rat constant) : c00(std::move(constant)) {}
    Jet2(Rat a00, Rat a10, Rat a01, Rat a20, Rat a11, Rat a02)
        : c00(std::move(a00)), c10(std::move(a10)), c01(std::move(a01)),
          c20(std::move(a20)), c11(std::move(a11)), c02(std::move(a02)) {}

    bool is_zero() const {
        return c00 == 0 && c10 == 0 && c01 == 0 && c20 == 0 && c11 == 0 && c02 == 0;
    }
    /// Invertible in the jet ring.
    bool is_unit() const { return c00 != 0; }

    friend bool operator==(const Jet2&, const Jet2&) = default;

    Jet2 operator-() const { return {-c00, -c10, -c01, -c20, -c11, -c02}; }

    friend Jet2 operator+(const Jet2& a, const Jet2& b) {
        return {a.c00 + b.c00, a.c10 + b.c10, a.c01 + b.c01,
                a.c20 + b.c20, a.c11 + b.c11, a.c02 + b.c02};
    }
    friend Jet2 operator-(const Jet2& a, const Jet2& b) {
        return {a.c00 - b.c00, a.c10 - b.c10, a.c01 - b.c01,
                a.c20 - b.c20, a.c11 - b.c11, a.c02 - b.c02};
    }
    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        return {a.c00 * b.c00,
                a.c00 * b.c10 + a.c10 * b.c00,
                a.c00 * b.c01 + a.c01 * b.c00,
                a.c00 * b.c20 + a.c10 * b.c10 + a.c20 * b.c00,
                a.c00 * b.c11 + a.c10 * b.c01 + a.c01 * b.c10 + a.c11 * b.c00,
                a.c00 * b.c02 + a.c01 * b.c01 + a.c02 * b.c00};
    }
    friend Jet2 operator*(const Rat& s, const Jet2& a) {
        return {s * a.c00, s * a.c10, s * a.c01, s * a.c20, s * a.c11, s * a.c02};
    }
    /// Taylor long division; defined iff b is a unit (b.c00 != 0).
    friend Jet2 operator/(const Jet2& a, const Jet2& b) {
        if (b.c00 == 0)
            throw Error(ErrorKind::DivisionByNonUnit, "jet division by non-unit");
        Jet2 r;
        r.c00 = a.c00 / b.c00;
        r.c10 = (a.c10 - r.c00 * b.c10) / b.c00;
        r.c01 = (a.c01 - r.c00 * b.c01) / b.c00;
        r.c20 = (a.c20 - r.c00 * b.c20 - r.c10 * b.c10) / b.c00;
        r.c11 = (a.c11 - r.c00 * b.c11 - r.c10 * b.c01 - r.c01 * b.c10) / b.c00;
        r.c02 = (a.c02 - r.c00 * b.c02 - r.c01 * b.c01) / b.c00;
        return r;
    }

    Jet2& operator+=(const Jet2& o) { return *this = *this + o; }
    Jet2& operator-=(const Jet2& o) { return *this = *this - o; }
    Jet2& operator*=(const Jet2& o) { return *this = *this * o; }

    /// d/du as a jet. Order drops: the result is only a degree-1 jet, so use
    /// it when the order-1 truncation suffices (value and first derivatives).
    Jet2 du() const { return {c10, 2 * c20, c11, Rat(0), Rat(0), Rat(0)}; }
    Jet2 dv() const { return {c01, c11, 2 * c02, Rat(0), Rat(0), Rat(0)}; }

    /// True iff all derivative coefficients vanish.
    bool is_constant() const {
        return c10 == 0 && c01 == 0 && c20 == 0 && c11 == 0 && c02 == 0;
    }
};

inline Jet2 jet_const(Rat c) { return Jet2(std::move(c)); }

}  // namespace focal
