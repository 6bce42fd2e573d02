#pragma once

#include <cstddef>
#include <vector>

#include "focal/error.hpp"
#include "focal/jet.hpp"
#include "focal/scalar.hpp"

namespace focal {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using JetVec = std::vector<Jet2>;
using JetMat = std::vector<JetVec>;

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Jet2 dot(const JetVec& a, const JetVec& b) {
    Jet2 s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec constant_part(const JetVec& v) {
    RatVec c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i].c00;
    return c;
}

inline JetVec lift(const RatVec& v) {
    JetVec j(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) j[i] = jet_const(v[i]);
    return j;
}

inline bool is_zero(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const JetVec& v) {
    for (const Jet2& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// Cross product of 3-vectors; the up-to-scale solution of two independent
/// linear forms in three unknowns.
inline RatVec cross3(const RatVec& a, const RatVec& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline JetVec cross3(const JetVec& a, const JetVec& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

/// True iff a and b are proportional (all 2x2 minors vanish).
inline bool proportional(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

namespace detail {

/// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

/// Exact rank via pivoted elimination.
inline std::size_t mat_rank(RatMat m) { return detail::rref(m).size(); }

/// Basis of {v : M v = 0}; count = ncols - rank.
inline std::vector<RatVec> mat_nullspace(RatMat m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    auto pivots = detail::rref(m);
    std::vector<RatVec> basis;
    std::size_t pi = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pi < pivots.size() && pivots[pi] == c) {
            ++pi;
            continue;
        }
        RatVec v(cols, Rat(0));
        v[c] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Nullspace over the jet ring. Pivots are taken on the pivot columns of the
/// constant-part matrix; those entries are units, so elimination stays exact.
/// If, after eliminating the constant-rank many pivots, a residual row is a
/// nonzero jet, the rank jumps at first order: the base point is not generic
/// and we signal PivotNotUnit so the caller can resample.
inline std::vector<JetVec> jet_nullspace(JetMat m) {
    if (m.empty()) return {};
    std::size_t rows = m.size(), cols = m[0].size();
    RatMat cm(rows, RatVec(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) cm[i][j] = m[i][j].c00;
    auto pivots = detail::rref(cm);
    std::size_t r = pivots.size();

    for (std::size_t k = 0; k < r; ++k) {
        std::size_t c = pivots[k];
        std::size_t sel = k;
        while (sel < rows && m[sel][c].c00 == 0) ++sel;
        if (sel == rows)
            throw Error(ErrorKind::PivotNotUnit, "no unit pivot in expected pivot column");
        std::swap(m[sel], m[k]);
        Jet2 inv = jet_const(Rat(1)) / m[k][c];
        for (std::size_t j = 0; j < cols; ++j) m[k][j] = inv * m[k][j];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == k) continue;
            Jet2 f = m[i][c];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[k][j];
        }
    }
    for (std::size_t i = r; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!m[i][j].is_zero())
                throw Error(ErrorKind::PivotNotUnit,
                            "rank of jet matrix exceeds rank of its constant part");

    std::vector<JetVec> basis;
    std::size_t pi = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pi < pivots.size() && pivots[pi] == c) {
            ++pi;
            continue;
        }
        JetVec v(cols, Jet2());
        v[c] = jet_const(Rat(1));
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace focal
