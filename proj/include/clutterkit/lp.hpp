#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "clutterkit/clutter.hpp"
#include "clutterkit/errors.hpp"
#include "clutterkit/linalg.hpp"
#include "clutterkit/rational.hpp"

namespace clutterkit {

enum class RowSense { LessEq, GreaterEq, Equal };

struct LPSolution {
    RVec primal;
    RVec dual;                       // one multiplier per input row
    Rational value;
    std::vector<int> optimal_basis;  // basic column ids; 0..n-1 are the original variables
};

namespace detail {

// Two-phase dense tableau simplex over exact rationals, Bland's rule throughout.
// Maximizes c·x subject to a_i·x (sense_i) b_i and x >= 0.
class Simplex {
public:
    Simplex(const RMatrix& a, const RVec& b, const RVec& c, const std::vector<RowSense>& senses)
        : m_(a.size()), n_(c.size()), obj_(c) {
        if (b.size() != m_ || senses.size() != m_)
            throw InvalidArgumentError("solve_lp: inconsistent dimensions");
        rows_ = a;
        rhs_ = b;
        senses_ = senses;
        flipped_.assign(m_, false);
        for (std::size_t i = 0; i < m_; ++i) {
            if (rows_[i].size() != n_) throw InvalidArgumentError("solve_lp: ragged constraint matrix");
            if (rhs_[i] < 0) {
                for (auto& v : rows_[i]) v = -v;
                rhs_[i] = -rhs_[i];
                senses_[i] = senses_[i] == RowSense::LessEq    ? RowSense::GreaterEq
                             : senses_[i] == RowSense::GreaterEq ? RowSense::LessEq
                                                                 : RowSense::Equal;
                flipped_[i] = true;
            }
        }
        build_tableau();
    }

    LPSolution solve() {
        phase_one();
        phase_two();
        return extract();
    }

private:
    std::size_t m_, n_;
    RVec obj_;
    RMatrix rows_;
    RVec rhs_;
    std::vector<RowSense> senses_;
    std::vector<bool> flipped_;

    std::size_t total_ = 0;
    RMatrix t_;                      // m x total working tableau
    RVec b_;                         // m, always >= 0
    std::vector<int> basis_;         // m
    std::vector<bool> artificial_;   // per column
    std::vector<int> row_identity_col_;  // per row: its initial identity column (slack or artificial)
    RVec cost_;                      // current objective per column
    bool phase_two_ = false;

    void build_tableau() {
        total_ = n_;
        std::vector<int> slack_col(m_, -1), art_col(m_, -1);
        for (std::size_t i = 0; i < m_; ++i) {
            if (senses_[i] == RowSense::LessEq) {
                slack_col[i] = static_cast<int>(total_++);
            } else if (senses_[i] == RowSense::GreaterEq) {
                slack_col[i] = static_cast<int>(total_++);  // surplus, coefficient -1
                art_col[i] = static_cast<int>(total_++);
            } else {
                art_col[i] = static_cast<int>(total_++);
            }
        }
        t_.assign(m_, RVec(total_, Rational(0)));
        b_ = rhs_;
        basis_.assign(m_, -1);
        artificial_.assign(total_, false);
        row_identity_col_.assign(m_, -1);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = rows_[i][j];
            if (senses_[i] == RowSense::LessEq) {
                t_[i][static_cast<std::size_t>(slack_col[i])] = 1;
                basis_[i] = slack_col[i];
                row_identity_col_[i] = slack_col[i];
            } else if (senses_[i] == RowSense::GreaterEq) {
                t_[i][static_cast<std::size_t>(slack_col[i])] = -1;
                t_[i][static_cast<std::size_t>(art_col[i])] = 1;
                basis_[i] = art_col[i];
                artificial_[static_cast<std::size_t>(art_col[i])] = true;
                row_identity_col_[i] = art_col[i];
            } else {
                t_[i][static_cast<std::size_t>(art_col[i])] = 1;
                basis_[i] = art_col[i];
                artificial_[static_cast<std::size_t>(art_col[i])] = true;
                row_identity_col_[i] = art_col[i];
            }
        }
    }

    Rational reduced_cost(std::size_t j) const {
        Rational v = cost_[j];
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational& cb = cost_[static_cast<std::size_t>(basis_[i])];
            if (cb != 0 && t_[i][j] != 0) v -= cb * t_[i][j];
        }
        return v;
    }

    void pivot(std::size_t row, std::size_t col) {
        Rational inv = t_[row][col];
        for (auto& v : t_[row]) v /= inv;
        b_[row] /= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || t_[i][col] == 0) continue;
            Rational f = t_[i][col];
            for (std::size_t j = 0; j < total_; ++j)
                if (t_[row][j] != 0) t_[i][j] -= f * t_[row][j];
            b_[i] -= f * b_[row];
        }
        basis_[row] = static_cast<int>(col);
    }

    // Bland: entering = lowest eligible column, leaving = lowest basic variable among ties.
    void run() {
        while (true) {
            std::size_t enter = total_;
            for (std::size_t j = 0; j < total_; ++j) {
                if (phase_two_ && artificial_[j]) continue;
                if (reduced_cost(j) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == total_) return;
            std::size_t leave = m_;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = b_[i] / t_[i][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave]))
                {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) {
                if (!phase_two_) throw Error("internal: phase-one objective unbounded");
                throw UnboundedError("objective unbounded above");
            }
            pivot(leave, enter);
        }
    }

    void phase_one() {
        bool any_artificial = false;
        for (std::size_t j = 0; j < total_; ++j) any_artificial = any_artificial || artificial_[j];
        if (!any_artificial) return;
        cost_.assign(total_, Rational(0));
        for (std::size_t j = 0; j < total_; ++j)
            if (artificial_[j]) cost_[j] = -1;
        phase_two_ = false;
        run();
        Rational obj = 0;
        for (std::size_t i = 0; i < m_; ++i) obj += cost_[static_cast<std::size_t>(basis_[i])] * b_[i];
        if (obj != 0) throw InfeasibleError("constraints are infeasible");
        // drive basic artificials (all at value 0) out where a pivot column exists
        for (std::size_t i = 0; i < m_; ++i) {
            if (!artificial_[static_cast<std::size_t>(basis_[i])]) continue;
            for (std::size_t j = 0; j < total_; ++j) {
                if (artificial_[j] || t_[i][j] == 0) continue;
                pivot(i, j);
                break;
            }
            // no pivot column: the row is redundant, the artificial stays basic at 0
        }
    }

    void phase_two() {
        cost_.assign(total_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) cost_[j] = obj_[j];
        phase_two_ = true;
        run();
    }

    LPSolution extract() const {
        LPSolution s;
        s.primal.assign(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= 0 && static_cast<std::size_t>(basis_[i]) < n_)
                s.primal[static_cast<std::size_t>(basis_[i])] = b_[i];
        s.value = dot(s.primal, obj_);
        s.dual.assign(m_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            Rational y = 0;
            std::size_t idc = static_cast<std::size_t>(row_identity_col_[i]);
            for (std::size_t k = 0; k < m_; ++k) {
                const Rational& cb = cost_[static_cast<std::size_t>(basis_[k])];
                if (cb != 0 && t_[k][idc] != 0) y += cb * t_[k][idc];
            }
            s.dual[i] = flipped_[i] ? -y : y;
        }
        s.optimal_basis.assign(basis_.begin(), basis_.end());
        std::sort(s.optimal_basis.begin(), s.optimal_basis.end());
        // exact strong duality is an internal invariant of every solve
        Rational dual_value = 0;
        for (std::size_t i = 0; i < m_; ++i) dual_value += s.dual[i] * (flipped_[i] ? -rhs_[i] : rhs_[i]);
        if (dual_value != s.value) throw Error("internal: exact strong duality violated");
        return s;
    }
};

}  // namespace detail

// max c·x s.t. a_i·x (sense_i) b_i, x >= 0; exact optimal basic solution with duals.
inline LPSolution solve_lp(const RMatrix& a, const RVec& b, const RVec& c,
                           const std::vector<RowSense>& senses) {
    return detail::Simplex(a, b, c, senses).solve();
}

// Nonnegative hyperedge weights with unit element loads; value = total weight.
struct FractionalPacking {
    RVec weights;  // canonical edge order of the clutter
    Rational value;
};

namespace detail {

// Element-load rows for the packing LP of c: one row per element, one column per edge.
inline void packing_rows(const Clutter& c, RMatrix& a, RVec& b, std::vector<RowSense>& senses) {
    std::size_t n_edges = c.edges().size();
    a.assign(static_cast<std::size_t>(c.ground_size()), RVec(n_edges, Rational(0)));
    for (std::size_t j = 0; j < n_edges; ++j)
        for_each_element(c.edges()[j], [&](int elem) { a[static_cast<std::size_t>(elem)][j] = 1; });
    b.assign(static_cast<std::size_t>(c.ground_size()), Rational(1));
    senses.assign(static_cast<std::size_t>(c.ground_size()), RowSense::LessEq);
}

}  // namespace detail

inline LPSolution packing_lp(const Clutter& c) {
    detail::check_nondegenerate(c);
    RMatrix a;
    RVec b;
    std::vector<RowSense> senses;
    detail::packing_rows(c, a, b, senses);
    return solve_lp(a, b, RVec(c.edges().size(), Rational(1)), senses);
}

inline FractionalPacking max_fractional_packing(const Clutter& c) {
    LPSolution s = packing_lp(c);
    return FractionalPacking{std::move(s.primal), std::move(s.value)};
}

inline Rational fpn(const Clutter& c) { return packing_lp(c).value; }

// max y(h) over the optimal face F(C); strictly positive iff h is in the support
// of some maximum fractional packing.
inline Rational max_weight_over_optimal_face(const Clutter& c, Mask h, bool maximize = true) {
    detail::check_nondegenerate(c);
    auto it = std::find(c.edges().begin(), c.edges().end(), h);
    if (it == c.edges().end()) throw InvalidArgumentError("edge is not a member of the clutter");
    std::size_t idx = static_cast<std::size_t>(it - c.edges().begin());
    Rational value = fpn(c);
    RMatrix a;
    RVec b;
    std::vector<RowSense> senses;
    detail::packing_rows(c, a, b, senses);
    a.emplace_back(c.edges().size(), Rational(1));
    b.push_back(value);
    senses.push_back(RowSense::Equal);
    RVec obj(c.edges().size(), Rational(0));
    obj[idx] = maximize ? 1 : -1;
    Rational r = solve_lp(a, b, obj, senses).value;
    return maximize ? r : -r;
}

inline bool edge_in_some_max_packing(const Clutter& c, Mask h) {
    return max_weight_over_optimal_face(c, h, true) > 0;
}

// F(C) is a single point iff every edge weight is constant over the optimal face.
inline bool is_unique_max_packing(const Clutter& c) {
    detail::check_nondegenerate(c);
    for (Mask h : c.edges()) {
        Rational hi = max_weight_over_optimal_face(c, h, true);
        Rational lo = max_weight_over_optimal_face(c, h, false);
        if (hi != lo) return false;
    }
    return true;
}

}  // namespace clutterkit
