#pragma once

// Effective cone, extremal generator classes and GIT chambers of a grading.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toric/graded_ring.hpp"
#include "toric/lp.hpp"
#include "toric/monomials.hpp"
#include "toric/polyhedral.hpp"

namespace toric {

inline constexpr std::size_t kChamberGuard = 16;

/// A cone in the grading space ℝʳ with both descriptions attached.
struct PolyCone {
    std::vector<IntVec> generators;
    ConeHRep hrep;
};

/// cone(q_1, …, q_n) ⊂ ℝʳ.
inline PolyCone effective_cone(const DegreeMatrix& q) {
    PolyCone c{q.columns(), {}};
    c.hrep = facets_of(c.generators, q.pic_rank());
    return c;
}

/// True iff w lies in the interior of the effective cone: the cone is
/// full-dimensional and w is a positive combination of all columns.
inline bool in_effective_interior(const DegreeMatrix& q, const Multidegree& w) {
    const std::vector<IntVec> cols = q.columns();
    return rank_of_rows(cols, q.pic_rank()) == q.pic_rank() && cone_contains(cols, w, /*strict=*/true);
}

namespace detail {

// Column k spans the same ray as column i.
inline bool same_ray(const IntVec& a, const IntVec& b) {
    return primitive(a) == primitive(b);
}

}  // namespace detail

/// Column i spans an extremal ray: it is not a nonnegative combination of
/// the columns lying on other rays.
inline bool spans_extremal_ray(const DegreeMatrix& q, std::size_t i) {
    const IntVec ci = q.column(i);
    if (is_zero(ci)) throw UsageError("column " + std::to_string(i + 1) + " is zero");
    std::vector<IntVec> others;
    for (std::size_t k = 0; k < q.num_gens(); ++k) {
        IntVec ck = q.column(k);
        if (k != i && !detail::same_ray(ck, ci)) others.push_back(std::move(ck));
    }
    if (others.empty()) return true;
    return !cone_contains(others, ci);
}

struct Chamber {
    std::vector<IntVec> inequalities;   // irredundant facet normals
    std::vector<IntVec> equations;      // nonempty only for lower-dimensional chambers
    RatVec representative;
    bool full_dimensional = false;

    ConeHRep hrep(std::size_t dim) const { return {dim, inequalities, equations}; }
};

/// Intersection of cone(q_I) over all column subsets I with w ∈ cone(q_I).
inline Chamber chamber_of(const DegreeMatrix& q, const Multidegree& w) {
    const std::size_t n = q.num_gens();
    const std::size_t r = q.pic_rank();
    if (w.size() != r) throw UsageError("class has wrong length");
    if (n > kChamberGuard)
        throw GuardExceeded("subset enumeration too large: " + std::to_string(n) + " generators (limit " +
                            std::to_string(kChamberGuard) + ")");
    const std::vector<IntVec> cols = q.columns();
    if (!cone_contains(cols, w)) throw InvalidInput("class " + to_string(w) + " is outside the effective cone");

    std::vector<std::uint32_t> containing;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<IntVec> sub;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (1u << k)) sub.push_back(cols[k]);
        if (cone_contains(sub, w)) containing.push_back(mask);
    }
    // Supersets of a containing subset give larger cones; only minimal ones matter.
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t m : containing) {
        bool is_min = true;
        for (std::uint32_t o : containing)
            if (o != m && (o & m) == o) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(m);
    }
    ConeHRep joined{r, {}, {}};
    for (std::uint32_t m : minimal) {
        std::vector<IntVec> sub;
        for (std::size_t k = 0; k < n; ++k)
            if (m & (1u << k)) sub.push_back(cols[k]);
        const ConeHRep h = facets_of(sub, r);
        joined.inequalities.insert(joined.inequalities.end(), h.inequalities.begin(), h.inequalities.end());
        joined.equations.insert(joined.equations.end(), h.equations.begin(), h.equations.end());
    }
    const ConeHRep irr = facets_of(generators_of(extreme_rays(joined)), r);

    Chamber ch{irr.inequalities, irr.equations, to_rat(w), false};
    if (irr.equations.empty()) {
        LinearSystem sys(r);
        for (const IntVec& a : irr.inequalities) sys.add_gt(to_rat(a));
        ch.full_dimensional = lp_feasible(sys).feasible;
    }
    return ch;
}

struct ChamberComparison {
    bool same = false;
    SquarefreeIdeal first, second;
    std::vector<std::string> warnings;
    std::optional<bool> first_stable, second_stable;
};

/// GIT-chamber equality, decided by comparing irrelevant radicals.
inline ChamberComparison same_chamber(const DegreeMatrix& q, const Multidegree& w1, const Multidegree& w2,
                                      const IrrelevantOptions& opt = {}) {
    const std::vector<IntVec> cols = q.columns();
    for (const Multidegree* w : {&w1, &w2})
        if (!cone_contains(cols, *w)) throw InvalidInput("class " + to_string(*w) + " is outside the effective cone");
    IrrelevantResult a = irrelevant_radical(q, w1, opt);
    IrrelevantResult b = irrelevant_radical(q, w2, opt);
    ChamberComparison out;
    out.same = a.ideal == b.ideal;
    out.first = std::move(a.ideal);
    out.second = std::move(b.ideal);
    out.first_stable = a.stable;
    out.second_stable = b.stable;
    out.warnings = std::move(a.warnings);
    out.warnings.insert(out.warnings.end(), b.warnings.begin(), b.warnings.end());
    return out;
}

}  // namespace toric
