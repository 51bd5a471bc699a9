#pragma once

// Exact rational linear feasibility.
//
// The system is homogenized with a variable t > 0 and every strict row is
// shifted by a shared slack eps; eps is then maximized (capped at 1) by a
// dictionary simplex with Bland's rule. The system is feasible iff the optimum
// eps is positive, and the witness x/t satisfies every row exactly. Because
// the homogenized system is a cone, the all-zero point is a feasible start and
// no phase-one artificials are needed.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/exact.hpp"

namespace toric {

enum class Relation { GreaterEq, Greater, Equal };

/// One row: normal·x (≥ | > | =) offset.
struct Constraint {
    RatVec normal;
    Rat offset;
    Relation relation = Relation::GreaterEq;
};

class LinearSystem {
public:
    explicit LinearSystem(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Constraint>& rows() const noexcept { return rows_; }

    void add(RatVec normal, Rat offset, Relation rel) {
        if (normal.size() != dim_) throw UsageError("constraint has wrong ambient dimension");
        rows_.push_back({std::move(normal), std::move(offset), rel});
    }
    void add_ge(RatVec normal, Rat offset = 0) { add(std::move(normal), std::move(offset), Relation::GreaterEq); }
    void add_gt(RatVec normal, Rat offset = 0) { add(std::move(normal), std::move(offset), Relation::Greater); }
    void add_eq(RatVec normal, Rat offset = 0) { add(std::move(normal), std::move(offset), Relation::Equal); }

    /// True iff x satisfies every row exactly.
    bool satisfied_by(const RatVec& x) const {
        if (x.size() != dim_) return false;
        for (const Constraint& c : rows_) {
            const Rat v = dot(c.normal, x);
            switch (c.relation) {
                case Relation::GreaterEq:
                    if (v < c.offset) return false;
                    break;
                case Relation::Greater:
                    if (v <= c.offset) return false;
                    break;
                case Relation::Equal:
                    if (v != c.offset) return false;
                    break;
            }
        }
        return true;
    }

private:
    std::size_t dim_;
    std::vector<Constraint> rows_;
};

struct LpResult {
    bool feasible = false;
    RatVec witness;   // empty when infeasible
};

namespace detail {

// Dictionary: basic(row) = rhs(row) + sum_j coef(row, j) * x_j over nonbasic j.
class Dictionary {
public:
    Dictionary(std::size_t rows, std::size_t vars)
        : coef_(rows, vars), rhs_(rows), basic_(rows), is_basic_(vars, false), fixed_(vars, false) {}

    RatMat coef_;
    RatVec rhs_;
    std::vector<std::size_t> basic_;
    std::vector<bool> is_basic_;
    std::vector<bool> fixed_;     // nonbasic variables pinned at zero (equality slacks)
    RatVec obj_;                  // objective = obj_rhs_ + sum obj_[j] x_j
    Rat obj_rhs_;

    void pivot(std::size_t r, std::size_t e) {
        const std::size_t vars = coef_.cols();
        const std::size_t leaving = basic_[r];
        const Rat c = coef_(r, e);
        // Solve row r for the entering variable.
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < vars; ++j) {
            if (j == e) continue;
            if (coef_(r, j) != 0) {
                coef_(r, j) = -coef_(r, j) / c;
                nz.push_back(j);
            }
        }
        coef_(r, e) = 0;
        coef_(r, leaving) = 1 / c;
        nz.push_back(leaving);
        rhs_[r] = -rhs_[r] / c;
        basic_[r] = e;
        is_basic_[e] = true;
        is_basic_[leaving] = false;

        auto substitute = [&](std::span<Rat> row, Rat& rhs) {
            const Rat a = row[e];
            if (a == 0) return;
            row[e] = 0;
            for (std::size_t j : nz) row[j] += a * coef_(r, j);
            rhs += a * rhs_[r];
        };
        for (std::size_t i = 0; i < coef_.rows(); ++i)
            if (i != r) substitute(coef_.row(i), rhs_[i]);
        if (!obj_.empty()) substitute(std::span<Rat>(obj_), obj_rhs_);
    }
};

}  // namespace detail

/// Decides feasibility of sys exactly. On success the witness satisfies
/// every row (strict rows strictly) and has been replayed before returning.
inline LpResult lp_feasible(const LinearSystem& sys) {
    const std::size_t d = sys.dim();
    const std::size_t t_var = d;        // homogenizing variable
    const std::size_t eps_var = d + 1;  // shared strictness slack
    const std::size_t nstruct = d + 2;

    // Rows: original rows, then "t - eps >= 0", then the cap "1 - eps >= 0".
    const std::size_t m = sys.rows().size() + 2;
    const std::size_t vars = nstruct + m;
    detail::Dictionary dict(m, vars);
    std::vector<bool> is_equality(m, false);
    std::vector<bool> free_row(m, false);   // basic variable is an unrestricted structural

    for (std::size_t i = 0; i < sys.rows().size(); ++i) {
        const Constraint& c = sys.rows()[i];
        for (std::size_t j = 0; j < d; ++j) dict.coef_(i, j) = c.normal[j];
        dict.coef_(i, t_var) = -c.offset;
        if (c.relation == Relation::Greater) dict.coef_(i, eps_var) = -1;
        is_equality[i] = c.relation == Relation::Equal;
    }
    const std::size_t t_row = m - 2;
    const std::size_t cap_row = m - 1;
    dict.coef_(t_row, t_var) = 1;
    dict.coef_(t_row, eps_var) = -1;
    dict.coef_(cap_row, eps_var) = -1;
    dict.rhs_[cap_row] = 1;
    for (std::size_t i = 0; i < m; ++i) {
        dict.basic_[i] = nstruct + i;
        dict.is_basic_[nstruct + i] = true;
    }

    auto structural_nonbasic_in_row = [&](std::size_t row) -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < nstruct; ++j)
            if (!dict.is_basic_[j] && dict.coef_(row, j) != 0) return j;
        return std::nullopt;
    };

    // Equalities: pivot a structural variable in, then pin the slack at zero.
    for (std::size_t i = 0; i < m; ++i) {
        if (!is_equality[i]) continue;
        const std::size_t slack = nstruct + i;
        if (auto j = structural_nonbasic_in_row(i)) {
            dict.pivot(i, *j);
            free_row[i] = true;
        } else {
            // Row reads slack = 0 identically; nothing is constrained.
            dict.is_basic_[slack] = false;
            dict.basic_[i] = vars;  // sentinel: dead row
            for (std::size_t k = 0; k < vars; ++k) dict.coef_(i, k) = 0;
            free_row[i] = true;
        }
        dict.fixed_[slack] = true;
        for (std::size_t k = 0; k < m; ++k) dict.coef_(k, slack) = 0;
    }

    // Remaining structural variables are unrestricted; make them basic on a
    // homogeneous row (right-hand side zero) so feasibility is untouched.
    for (std::size_t j = 0; j < nstruct; ++j) {
        if (dict.is_basic_[j]) continue;
        std::optional<std::size_t> row;
        for (std::size_t i = 0; i < m; ++i) {
            if (free_row[i] || dict.coef_(i, j) == 0) continue;
            if (!row || (dict.rhs_[*row] != 0 && dict.rhs_[i] == 0)) row = i;
        }
        if (!row) continue;   // column is identically zero: variable is irrelevant
        dict.pivot(*row, j);
        free_row[*row] = true;
    }

    // Objective: maximize eps.
    dict.obj_.assign(vars, Rat(0));
    dict.obj_rhs_ = 0;
    if (dict.is_basic_[eps_var]) {
        for (std::size_t i = 0; i < m; ++i)
            if (dict.basic_[i] == eps_var) {
                for (std::size_t k = 0; k < vars; ++k) dict.obj_[k] = dict.coef_(i, k);
                dict.obj_rhs_ = dict.rhs_[i];
            }
    } else {
        dict.obj_[eps_var] = 1;
    }

    // Bland's rule simplex over the nonnegative nonbasic slacks.
    for (;;) {
        std::optional<std::size_t> entering;
        for (std::size_t j = nstruct; j < vars; ++j)
            if (!dict.is_basic_[j] && !dict.fixed_[j] && dict.obj_[j] > 0) {
                entering = j;
                break;
            }
        if (!entering) break;
        std::optional<std::size_t> leave_row;
        Rat best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (free_row[i]) continue;
            const Rat& a = dict.coef_(i, *entering);
            if (a >= 0) continue;
            Rat ratio = dict.rhs_[i] / -a;
            if (!leave_row || ratio < best_ratio ||
                (ratio == best_ratio && dict.basic_[i] < dict.basic_[*leave_row])) {
                leave_row = i;
                best_ratio = ratio;
            }
        }
        if (!leave_row) break;   // the cap row bounds eps, so this is unreachable
        dict.pivot(*leave_row, *entering);
    }

    RatVec values(nstruct);
    for (std::size_t i = 0; i < m; ++i)
        if (dict.basic_[i] < nstruct) values[dict.basic_[i]] = dict.rhs_[i];

    if (values[eps_var] <= 0 || values[t_var] <= 0) return {false, {}};
    RatVec x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = values[j] / values[t_var];
    if (!sys.satisfied_by(x)) throw Error("lp_feasible: witness failed exact replay");
    return {true, std::move(x)};
}

}  // namespace toric
