#pragma once

#include <optional>
#include <vector>

#include "clutterkit/errors.hpp"
#include "clutterkit/rational.hpp"

namespace clutterkit {

using RMatrix = std::vector<RVec>;

inline int matrix_rank(RMatrix m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

struct AffineSolve {
    RVec particular;          // one solution of A x = b
    RMatrix nullspace;        // basis of {x : A x = 0}
};

// Exact solve of A x = b; nullopt when inconsistent.
inline std::optional<AffineSolve> solve_affine(const RMatrix& a, const RVec& b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    if (rows == 0) {
        // unconstrained: particular 0, nullspace = standard basis (caller supplies cols via b? none) —
        // callers with zero equations pass cols through an explicit identity instead.
        return AffineSolve{RVec{}, RMatrix{}};
    }
    RMatrix m(rows, RVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot_col(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        Rational inv = m[r][c];
        for (std::size_t j = c; j <= cols; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        is_pivot_col[c] = true;
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;

    AffineSolve out;
    out.particular.assign(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
        out.particular[static_cast<std::size_t>(pivot_col_of_row[i])] = m[i][cols];
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot_col[c]) continue;
        RVec v(cols, Rational(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[static_cast<std::size_t>(pivot_col_of_row[i])] = -m[i][c];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

// Dimension of the affine hull of a nonempty point set; a single point has dimension 0.
inline int affine_dimension(const RMatrix& points) {
    if (points.empty()) throw EmptyInputError("affine_dimension of an empty point set");
    RMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RVec d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return diffs.empty() ? 0 : matrix_rank(std::move(diffs));
}

// Equality of affine hulls via mutual-membership rank tests.
inline bool affine_hulls_equal(const RMatrix& s1, const RMatrix& s2) {
    if (s1.empty() || s2.empty()) return s1.empty() == s2.empty();
    RMatrix both = s1;
    both.insert(both.end(), s2.begin(), s2.end());
    int d1 = affine_dimension(s1);
    int d2 = affine_dimension(s2);
    return d1 == d2 && affine_dimension(both) == d1;
}

inline Rational dot(const RVec& a, const RVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace clutterkit
