/*
   Copyright 2026 the mindex authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <vector>

#include "mindex/poly.hpp"

namespace mindex {

template <class T>
using Matrix = std::vector<std::vector<T>>;

using PolyMatrix = Matrix<PolyQ>;

namespace detail {

template <class T> struct ring_ops {
    static T zero() { return T(0); }
    static bool is_zero(const T& a) { return a.is_zero(); }
    // exact division; only called when divisibility is guaranteed (Bareiss)
    static T div(const T& a, const T& b) { return a / b; }
};

template <class S> struct ring_ops<Poly<S>> {
    static Poly<S> zero() { return Poly<S>(); }
    static bool is_zero(const Poly<S>& a) { return a.is_zero(); }
    static Poly<S> div(const Poly<S>& a, const Poly<S>& b) { return div_exact(a, b); }
};

template <> struct ring_ops<RationalFunction> {
    static RationalFunction zero() { return RationalFunction(); }
    static bool is_zero(const RationalFunction& a) { return a.is_zero(); }
    static RationalFunction div(const RationalFunction& a, const RationalFunction& b) {
        return a / b;
    }
};

} // namespace detail

/**
 * Exact determinant by fraction-free (Bareiss) elimination.
 *
 * Works over any integral domain with exact division (scalars, Poly);
 * all intermediate divisions are exact by the Sylvester identity, which
 * keeps coefficient swell polynomial instead of exponential.
 */
template <class T>
T det_fraction_free(Matrix<T> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw usage_error("det_fraction_free: matrix not square");
    if (n == 0) throw usage_error("det_fraction_free: empty matrix");
    using ops = detail::ring_ops<T>;

    bool neg = false;
    T prev = ops::zero();  // previous pivot; unset before first step
    for (size_t k = 0; k + 1 < n; ++k) {
        if (ops::is_zero(m[k][k])) {
            size_t p = k + 1;
            while (p < n && ops::is_zero(m[p][k])) ++p;
            if (p == n) return ops::zero();  // singular
            std::swap(m[k], m[p]);
            neg = !neg;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                T t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = (k == 0) ? std::move(t) : ops::div(t, prev);
            }
            m[i][k] = ops::zero();
        }
        prev = m[k][k];
    }
    return neg ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

enum class SolveKind { unique, inconsistent, underdetermined };

template <class S>
struct SolveResult {
    SolveKind kind = SolveKind::inconsistent;
    std::vector<S> solution;       // valid when kind != inconsistent (a particular solution)
    std::optional<size_t> witness; // inconsistent: index of an offending input row
};

/**
 * Exact classification/solve of A x = b over a field scalar (possibly
 * overdetermined). Plain Gaussian elimination; every entry stays exact,
 * so "consistent" means residual identically zero.
 */
template <class S>
SolveResult<S> solve_exact(const Matrix<S>& a, const std::vector<S>& b) {
    const size_t rows = a.size();
    if (rows == 0 || rows != b.size())
        throw usage_error("solve_exact: shape mismatch");
    const size_t cols = a[0].size();
    for (const auto& r : a)
        if (r.size() != cols) throw usage_error("solve_exact: ragged matrix");

    // augmented matrix + original row index (for witnesses)
    Matrix<S> m(rows);
    std::vector<size_t> orig(rows);
    for (size_t i = 0; i < rows; ++i) {
        m[i] = a[i];
        m[i].push_back(b[i]);
        orig[i] = i;
    }

    std::vector<long> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[rank], m[p]);
        std::swap(orig[rank], orig[p]);
        S inv = scalar_traits<S>::one() / m[rank][c];
        for (size_t j = c; j <= cols; ++j) m[rank][j] = m[rank][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c].is_zero()) continue;
            S f = m[i][c];
            for (size_t j = c; j <= cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        pivot_of_col[c] = static_cast<long>(rank);
        ++rank;
    }

    SolveResult<S> res;
    for (size_t i = rank; i < rows; ++i) {
        if (!m[i][cols].is_zero()) {
            res.kind = SolveKind::inconsistent;
            res.witness = orig[i];
            return res;
        }
    }
    res.solution.assign(cols, scalar_traits<S>::zero());
    for (size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] >= 0)
            res.solution[c] = m[static_cast<size_t>(pivot_of_col[c])][cols];
    res.kind = (rank == cols) ? SolveKind::unique : SolveKind::underdetermined;
    return res;
}

} // namespace mindex
