#pragma once

// Cox presentations: a polynomial ring whose generators carry multidegrees in
// ℤʳ, and the Gale dual rays that form the 1-skeleton of the toric variety.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toric/exact.hpp"

namespace toric {

using Multidegree = IntVec;

/// Integer r×n grading matrix; column k is the multidegree of generator k.
class DegreeMatrix {
public:
    /// Validates: every column has length r, labels are distinct and the
    /// matrix has rank r over ℚ.
    DegreeMatrix(std::vector<Multidegree> columns, std::vector<std::string> labels,
                 std::optional<Multidegree> heft = std::nullopt)
        : labels_(std::move(labels)), heft_(std::move(heft)) {
        if (columns.empty()) throw InvalidInput("grading has no generators");
        const std::size_t r = columns.front().size();
        if (r == 0) throw InvalidInput("grading has rank zero");
        if (labels_.empty())
            for (std::size_t k = 0; k < columns.size(); ++k) labels_.push_back("x" + std::to_string(k + 1));
        if (labels_.size() != columns.size()) throw InvalidInput("label count differs from generator count");
        if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
            throw InvalidInput("generator labels are not distinct");
        q_ = IntMat(r, columns.size());
        for (std::size_t k = 0; k < columns.size(); ++k) {
            if (columns[k].size() != r) throw InvalidInput("multidegree " + labels_[k] + " has wrong length");
            for (std::size_t i = 0; i < r; ++i) q_(i, k) = columns[k][i];
        }
        if (heft_ && heft_->size() != r) throw InvalidInput("heft vector has wrong length");
        if (toric::rank(q_) != r) throw InvalidInput("grading not of full rank");
    }

    std::size_t pic_rank() const noexcept { return q_.rows(); }
    std::size_t num_gens() const noexcept { return q_.cols(); }
    const IntMat& matrix() const noexcept { return q_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::optional<Multidegree>& heft() const noexcept { return heft_; }
    Multidegree column(std::size_t k) const { return q_.col_vec(k); }
    std::vector<Multidegree> columns() const {
        std::vector<Multidegree> out;
        for (std::size_t k = 0; k < num_gens(); ++k) out.push_back(column(k));
        return out;
    }

    /// Copy restricted to the listed generator indices (0-based), in order.
    DegreeMatrix restrict_to(const std::vector<std::size_t>& keep) const {
        std::vector<Multidegree> cols;
        std::vector<std::string> labels;
        for (std::size_t k : keep) {
            cols.push_back(column(k));
            labels.push_back(labels_[k]);
        }
        return DegreeMatrix(std::move(cols), std::move(labels), heft_);
    }

    friend bool operator==(const DegreeMatrix& a, const DegreeMatrix& b) {
        return a.q_ == b.q_ && a.labels_ == b.labels_ && a.heft_ == b.heft_;
    }

private:
    IntMat q_;
    std::vector<std::string> labels_;
    std::optional<Multidegree> heft_;
};

/// The n rays of the toric variety, one per generator, in ℤ^(n−r).
struct GaleDual {
    IntMat rays;   // n × (n − r); row k is the ray of generator k

    std::size_t num_rays() const noexcept { return rays.rows(); }
    std::size_t dim() const noexcept { return rays.cols(); }
    IntVec ray(std::size_t k) const { return rays.row_vec(k); }
    std::vector<IntVec> all_rays() const {
        std::vector<IntVec> out;
        for (std::size_t k = 0; k < num_rays(); ++k) out.push_back(ray(k));
        return out;
    }
};

/// Gale dual from the saturated integer kernel of the grading. The exact
/// sequence 0 → M → ℤⁿ → ℤʳ → 0 is checked before returning: Q·A = 0,
/// rank(A) + rank(Q) = n and the kernel lattice is saturated.
inline GaleDual gale_dual(const DegreeMatrix& q) {
    const IntMat& m = q.matrix();
    if (rank(m) != q.pic_rank()) throw InvalidInput("grading not of full rank");
    const IntMat k = kernel_lattice(m);
    GaleDual g{k.transpose()};
    if (!(m * g.rays).is_zero()) throw Error("gale_dual: Q·A is not zero");
    if (rank(k) + rank(m) != q.num_gens()) throw Error("gale_dual: ranks do not add up");
    for (const Int& f : smith_invariants(k))
        if (f != 1) throw Error("gale_dual: kernel lattice is not saturated");
    return g;
}

// ---------------------------------------------------------------------------
// Built-in presentations

/// Blow-up of the plane in four general points, basis (h, l1, l2, l3, l4).
struct DelPezzo4 {
    DegreeMatrix degrees;
    Multidegree ample_class;      // 11h − 5l1 − 3l2 − 2l3 − l4
    Multidegree anticanonical;    // 3h − l1 − l2 − l3 − l4
    Multidegree heft;             // (3,1,1,1,1)
    std::vector<std::string> script_names;   // a b c d e f x y z w
};

inline DelPezzo4 delpezzo4() {
    std::vector<Multidegree> cols = {
        to_int_vec({1, -1, -1, 0, 0}),  // g1 = h - l1 - l2
        to_int_vec({1, -1, 0, -1, 0}),  // g2 = h - l1 - l3
        to_int_vec({1, -1, 0, 0, -1}),  // g3 = h - l1 - l4
        to_int_vec({1, 0, -1, -1, 0}),  // g4 = h - l2 - l3
        to_int_vec({1, 0, -1, 0, -1}),  // g5 = h - l2 - l4
        to_int_vec({1, 0, 0, -1, -1}),  // g6 = h - l3 - l4
        to_int_vec({0, 1, 0, 0, 0}),    // g7 = l1
        to_int_vec({0, 0, 1, 0, 0}),    // g8 = l2
        to_int_vec({0, 0, 0, 1, 0}),    // g9 = l3
        to_int_vec({0, 0, 0, 0, 1}),    // g10 = l4
    };
    std::vector<std::string> labels;
    for (int k = 1; k <= 10; ++k) labels.push_back("g" + std::to_string(k));
    Multidegree heft = to_int_vec({3, 1, 1, 1, 1});
    return {DegreeMatrix(std::move(cols), std::move(labels), heft),
            to_int_vec({11, -5, -3, -2, -1}),
            to_int_vec({3, -1, -1, -1, -1}),
            heft,
            {"a", "b", "c", "d", "e", "f", "x", "y", "z", "w"}};
}

/// The published 5×10 ray matrix; columns are the rays of g1…g10.
inline IntMat delpezzo4_reference_rays() {
    return IntMat{
        {1, 0, 0, 0, 0, -1, 1, 1, -1, -1},
        {0, 1, 0, 0, 0, -1, 1, 0, 0, -1},
        {0, 0, 1, 0, 0, -1, 1, 0, -1, 0},
        {0, 0, 0, 1, 0, -1, 0, 1, 0, -1},
        {0, 0, 0, 0, 1, -1, 0, 1, -1, 0},
    };
}

/// ℙⁿ: n+1 generators of degree 1.
inline DegreeMatrix projective_space(std::size_t n) {
    std::vector<Multidegree> cols(n + 1, to_int_vec({1}));
    return DegreeMatrix(std::move(cols), {}, to_int_vec({1}));
}

/// ℙ¹×ℙ¹ with bidegrees (1,0),(1,0),(0,1),(0,1).
inline DegreeMatrix p1xp1() {
    return DegreeMatrix({to_int_vec({1, 0}), to_int_vec({1, 0}), to_int_vec({0, 1}), to_int_vec({0, 1})}, {},
                        to_int_vec({1, 1}));
}

}  // namespace toric
