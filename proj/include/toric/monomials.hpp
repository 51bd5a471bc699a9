#pragma once

// Monomials of a fixed multidegree and squarefree (radical) monomial ideals.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "toric/exact.hpp"
#include "toric/graded_ring.hpp"
#include "toric/lp.hpp"

namespace toric {

/// Exponent vector of a monomial, one entry per generator.
using Exponent = std::vector<Int>;

/// Sorted set of 1-based generator indices.
class Support {
public:
    Support() = default;
    explicit Support(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
        std::sort(idx_.begin(), idx_.end());
        idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
        if (!idx_.empty() && idx_.front() == 0) throw UsageError("support indices are 1-based");
    }
    Support(std::initializer_list<std::size_t> indices) : Support(std::vector<std::size_t>(indices)) {}

    static Support of(const Exponent& e) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) idx.push_back(i + 1);
        return Support(std::move(idx));
    }

    const std::vector<std::size_t>& indices() const noexcept { return idx_; }
    std::size_t size() const noexcept { return idx_.size(); }
    bool contains(std::size_t i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }
    bool includes(const Support& other) const {
        return std::includes(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end());
    }

    /// {1..n} minus this support.
    Support complement(std::size_t n) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 1; i <= n; ++i)
            if (!contains(i)) out.push_back(i);
        return Support(std::move(out));
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < idx_.size(); ++i) s += (i ? "," : "") + std::to_string(idx_[i]);
        return s + "}";
    }

    friend bool operator==(const Support&, const Support&) = default;
    /// Canonical order: cardinality first, then lexicographic.
    friend bool operator<(const Support& a, const Support& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.idx_ < b.idx_;
    }

private:
    std::vector<std::size_t> idx_;
};

/// Minimal generators of a squarefree monomial ideal: an antichain of
/// supports kept in canonical order.
class SquarefreeIdeal {
public:
    SquarefreeIdeal() = default;
    /// Keeps only the inclusion-minimal supports.
    explicit SquarefreeIdeal(std::vector<Support> supports) {
        std::sort(supports.begin(), supports.end());
        supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
        for (const Support& s : supports) {
            bool minimal = std::none_of(gens_.begin(), gens_.end(), [&](const Support& g) { return s.includes(g); });
            if (minimal) gens_.push_back(s);
        }
    }

    const std::vector<Support>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool empty() const noexcept { return gens_.empty(); }

    /// True iff some generator divides the squarefree monomial with support s.
    bool contains(const Support& s) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](const Support& g) { return s.includes(g); });
    }

    bool is_antichain() const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            for (std::size_t j = 0; j < gens_.size(); ++j)
                if (i != j && gens_[i].includes(gens_[j])) return false;
        return true;
    }

    friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

private:
    std::vector<Support> gens_;
};

// ---------------------------------------------------------------------------

/// Integer vector h with h·q_k ≥ 1 for every column, by exact LP.
inline std::optional<Multidegree> derive_heft(const DegreeMatrix& q) {
    LinearSystem sys(q.pic_rank());
    for (std::size_t k = 0; k < q.num_gens(); ++k) sys.add_ge(to_rat(q.column(k)), 1);
    const LpResult res = lp_feasible(sys);
    if (!res.feasible) return std::nullopt;
    return primitive(std::span<const Rat>(res.witness));
}

/// Heft to use for q: the explicit argument, else the presentation's own,
/// else one derived by LP. Throws InvalidInput when none pairs positively.
inline Multidegree resolve_heft(const DegreeMatrix& q, const std::optional<Multidegree>& heft = std::nullopt) {
    std::optional<Multidegree> h = heft ? heft : q.heft();
    if (!h) h = derive_heft(q);
    if (!h || h->size() != q.pic_rank()) throw InvalidInput("grading not positive");
    for (std::size_t k = 0; k < q.num_gens(); ++k)
        if (dot_int(*h, q.column(k)) <= 0) throw InvalidInput("grading not positive");
    return *h;
}

namespace detail {

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long narrow(const Int& x) { return x.get_si(); }

// Depth-first search over the free variables; the r pivot variables are
// solved exactly at the leaves via the integer adjugate of the pivot block.
// T is Int, or long when every intermediate value provably fits.
template <class T>
class DegreeSearch {
public:
    DegreeSearch(const IntMat& q, const Multidegree& heft, const std::vector<std::size_t>& pivots,
                 const std::vector<std::size_t>& free, const IntMat& adjugate, const Int& det)
        : r_(q.rows()), n_(q.cols()), pivots_(pivots), free_(free) {
        auto conv = [](const Int& x) -> T {
            if constexpr (std::is_same_v<T, Int>) return x;
            else return narrow(x);
        };
        q_.assign(r_ * n_, T(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < n_; ++k) q_[i * n_ + k] = conv(q(i, k));
        for (const Int& h : heft) heft_.push_back(conv(h));
        for (std::size_t k = 0; k < n_; ++k) heft_pair_.push_back(conv(dot_int(heft, q.col_vec(k))));
        adj_.assign(r_ * r_, T(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < r_; ++j) adj_[i * r_ + j] = conv(adjugate(i, j));
        det_ = conv(det);
        remaining_.resize(free_.size() + 1);
        for (std::size_t t = 0; t <= free_.size(); ++t) {
            remaining_[t].assign(free_.begin() + static_cast<std::ptrdiff_t>(t), free_.end());
            remaining_[t].insert(remaining_[t].end(), pivots_.begin(), pivots_.end());
        }
    }

    /// Calls visit(e) for every exponent vector of degree d.
    template <class Visit>
    void run(const Multidegree& d, Visit&& visit) {
        std::vector<T> e(n_, T(0)), residual;
        for (const Int& x : d) {
            if constexpr (std::is_same_v<T, Int>) residual.push_back(x);
            else residual.push_back(narrow(x));
        }
        descend(0, e, residual, visit);
    }

private:
    T budget_of(const std::vector<T>& residual) const {
        T b(0);
        for (std::size_t i = 0; i < r_; ++i) b += heft_[i] * residual[i];
        return b;
    }

    // Each residual coordinate must be reachable by the open variables within
    // their heft-derived upper bounds.
    bool reachable(std::size_t t, const std::vector<T>& residual, const T& budget) const {
        for (std::size_t i = 0; i < r_; ++i) {
            T lo(0), hi(0);
            for (std::size_t k : remaining_[t]) {
                const T& c = q_[i * n_ + k];
                if (c == 0) continue;
                const T ub = floor_div(budget, heft_pair_[k]);
                if (c > 0)
                    hi += c * ub;
                else
                    lo += c * ub;
            }
            if (residual[i] < lo || residual[i] > hi) return false;
        }
        return true;
    }

    template <class Visit>
    void descend(std::size_t t, std::vector<T>& e, std::vector<T>& residual, Visit& visit) {
        const T budget = budget_of(residual);
        if (budget < 0 || !reachable(t, residual, budget)) return;
        if (t == free_.size()) {
            for (std::size_t i = 0; i < r_; ++i) {
                T v(0);
                for (std::size_t j = 0; j < r_; ++j) v += adj_[i * r_ + j] * residual[j];
                if (v % det_ != 0) return;
                v /= det_;
                if (v < 0) return;
                e[pivots_[i]] = v;
            }
            visit(static_cast<const std::vector<T>&>(e));
            for (std::size_t p : pivots_) e[p] = T(0);
            return;
        }
        const std::size_t k = free_[t];
        const T ub = floor_div(budget, heft_pair_[k]);
        const std::vector<T> saved = residual;
        for (T v(0); v <= ub; ++v) {
            e[k] = v;
            for (std::size_t i = 0; i < r_; ++i) residual[i] = saved[i] - v * q_[i * n_ + k];
            descend(t + 1, e, residual, visit);
        }
        e[k] = T(0);
        residual = saved;
    }

    std::size_t r_, n_;
    std::vector<T> q_, heft_, heft_pair_, adj_;
    T det_;
    std::vector<std::size_t> pivots_, free_;
    std::vector<std::vector<std::size_t>> remaining_;
};

class DegreeEnumerator {
public:
    DegreeEnumerator(const DegreeMatrix& q, const Multidegree& heft) : q_(q.matrix()), heft_(heft) {
        const std::size_t r = q.pic_rank(), n = q.num_gens();
        // r independent pivot columns, preferring the last ones.
        IntMat chosen(0, r);
        for (std::size_t k = n; k-- > 0 && pivots_.size() < r;) {
            IntMat trial = chosen;
            trial.append_row(q.column(k));
            if (rank(trial) > chosen.rows()) {
                chosen = std::move(trial);
                pivots_.push_back(k);
            }
        }
        std::sort(pivots_.begin(), pivots_.end());
        for (std::size_t k = 0; k < n; ++k)
            if (!std::binary_search(pivots_.begin(), pivots_.end(), k)) free_.push_back(k);
        const IntMat block = q_.select_cols(pivots_);
        det_ = determinant(block);
        const RatMat inv = *inverse(to_rat(block));
        adj_ = IntMat(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                const Rat a = inv(i, j) * det_;
                adj_(i, j) = a.get_num();
            }
    }

    template <class Visit>
    void run(const Multidegree& d, Visit&& visit) {
        if (fits_machine_words(d)) {
            DegreeSearch<long> s(q_, heft_, pivots_, free_, adj_, det_);
            s.run(d, visit);
        } else {
            DegreeSearch<Int> s(q_, heft_, pivots_, free_, adj_, det_);
            s.run(d, visit);
        }
    }

    std::vector<Exponent> all(const Multidegree& d) {
        std::vector<Exponent> out;
        run(d, [&](const auto& e) { out.emplace_back(e.begin(), e.end()); });
        std::sort(out.begin(), out.end());
        return out;
    }

    void supports(const Multidegree& d, std::set<Support>& out) {
        std::vector<std::size_t> idx;
        run(d, [&](const auto& e) {
            idx.clear();
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) idx.push_back(i + 1);
            out.insert(Support(idx));
        });
    }

private:
    // Bounds every intermediate of the search by |d| + n·B·max|q|, with B the
    // starting heft budget, and requires a wide safety margin below 2^63.
    bool fits_machine_words(const Multidegree& d) const {
        Int qmax = 0, dmax = 0, adjmax = 0, hmax = 0;
        for (std::size_t i = 0; i < q_.rows(); ++i)
            for (std::size_t k = 0; k < q_.cols(); ++k) qmax = std::max<Int>(qmax, abs(q_(i, k)));
        for (const Int& x : d) dmax = std::max<Int>(dmax, abs(x));
        for (std::size_t i = 0; i < adj_.rows(); ++i)
            for (std::size_t j = 0; j < adj_.cols(); ++j) adjmax = std::max<Int>(adjmax, abs(adj_(i, j)));
        for (const Int& h : heft_) hmax = std::max<Int>(hmax, abs(h));
        const Int n = static_cast<unsigned long>(q_.cols());
        const Int r = static_cast<unsigned long>(q_.rows());
        const Int budget = r * hmax * dmax;
        const Int res = dmax + n * budget * qmax;
        const Int worst = r * std::max<Int>({adjmax * res, hmax * res, n * qmax * budget, abs(det_)});
        Int limit = 1;
        limit <<= 58;
        return worst < limit;
    }

    const IntMat& q_;
    Multidegree heft_;
    std::vector<std::size_t> pivots_, free_;
    IntMat adj_;
    Int det_;
};

}  // namespace detail

/// All e ∈ ℤ≥0ⁿ with Q·e = d, sorted lexicographically. The heft makes the
/// set finite; it is resolved as in resolve_heft.
inline std::vector<Exponent> monomials_of_degree(const DegreeMatrix& q, const Multidegree& d,
                                                 const std::optional<Multidegree>& heft = std::nullopt) {
    if (d.size() != q.pic_rank())
        throw UsageError("degree has length " + std::to_string(d.size()) + ", expected " +
                         std::to_string(q.pic_rank()));
    const Multidegree h = resolve_heft(q, heft);
    return detail::DegreeEnumerator(q, h).all(d);
}

/// Minimal supports of the given monomials: the minimal generators of the
/// radical of the ideal they generate.
inline SquarefreeIdeal radical_of_monomials(const std::vector<Exponent>& ms) {
    std::set<Support> supports;
    for (const Exponent& e : ms) supports.insert(Support::of(e));
    return SquarefreeIdeal(std::vector<Support>(supports.begin(), supports.end()));
}

struct IrrelevantOptions {
    std::size_t saturation_depth = 1;
    bool check_stability = false;
    std::optional<Multidegree> heft;
};

struct IrrelevantResult {
    SquarefreeIdeal ideal;
    std::optional<bool> stable;    // set when the depth k vs k+1 check ran
    std::vector<std::string> warnings;
};

inline Multidegree scaled(const Multidegree& d, long j) {
    Multidegree out = d;
    for (Int& x : out) x *= j;
    return out;
}

/// Radical of the ideal generated by all monomials of degree j·d, j = 1…k.
inline IrrelevantResult irrelevant_radical(const DegreeMatrix& q, const Multidegree& d,
                                           const IrrelevantOptions& opt = {}) {
    if (opt.saturation_depth < 1) throw UsageError("saturation depth must be at least 1");
    const Multidegree h = resolve_heft(q, opt.heft);
    if (d.size() != q.pic_rank()) throw UsageError("degree has wrong length");
    detail::DegreeEnumerator en(q, h);
    std::set<Support> supports;
    auto add_degree = [&](std::size_t j) { en.supports(scaled(d, static_cast<long>(j)), supports); };
    for (std::size_t j = 1; j <= opt.saturation_depth; ++j) add_degree(j);
    IrrelevantResult res{SquarefreeIdeal(std::vector<Support>(supports.begin(), supports.end())), std::nullopt, {}};
    if (opt.check_stability) {
        add_degree(opt.saturation_depth + 1);
        SquarefreeIdeal next(std::vector<Support>(supports.begin(), supports.end()));
        res.stable = next == res.ideal;
        if (!*res.stable)
            res.warnings.push_back("irrelevant radical at degree " + to_string(d) + " changes between depth " +
                                   std::to_string(opt.saturation_depth) + " and " +
                                   std::to_string(opt.saturation_depth + 1));
    }
    return res;
}

}  // namespace toric
