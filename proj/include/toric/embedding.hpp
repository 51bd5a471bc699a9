#pragma once

// Data-level checks that an embedding X ⊂ W of Mori dream spaces, given by
// Cox presentations, satisfies the two sufficient criteria for a Mori
// embedding: Pic(W)_ℚ → Pic(X)_ℚ is an isomorphism, and Cox(W) → Cox(X) is
// surjective (checked on generators: x_k ↦ g_k with matching degrees).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/chamber.hpp"
#include "toric/fan.hpp"
#include "toric/graded_ring.hpp"

namespace toric {

struct TargetGenerator {
    std::string label;
    Multidegree degree;
};

struct CoxPresentationPair {
    DegreeMatrix ambient;                   // grading of Cox(W)
    std::vector<TargetGenerator> target;    // generators of Cox(X)
    std::vector<std::string> correspondence;   // variable k ↦ target label
};

struct BijectionResult {
    bool ok = false;
    std::string reason;
    std::vector<std::size_t> matching;   // variable k ↦ index into target
};

/// Every variable's degree equals the degree of the generator it maps to, and
/// the correspondence is a bijection onto the target generators.
inline BijectionResult check_degree_bijection(const CoxPresentationPair& p) {
    BijectionResult res;
    const std::size_t n = p.ambient.num_gens();
    if (p.correspondence.size() != n)
        return {false, "correspondence covers " + std::to_string(p.correspondence.size()) + " of " +
                           std::to_string(n) + " variables", {}};
    if (p.target.size() != n)
        return {false, "ambient has " + std::to_string(n) + " variables but target has " +
                           std::to_string(p.target.size()) + " generators", {}};
    std::map<std::string, std::size_t> by_label;
    for (std::size_t t = 0; t < p.target.size(); ++t)
        if (!by_label.emplace(p.target[t].label, t).second)
            return {false, "duplicate target label " + p.target[t].label, {}};
    std::set<std::size_t> hit;
    for (std::size_t k = 0; k < n; ++k) {
        auto it = by_label.find(p.correspondence[k]);
        if (it == by_label.end())
            return {false, "variable " + p.ambient.labels()[k] + " maps to unknown generator " + p.correspondence[k], {}};
        if (!hit.insert(it->second).second)
            return {false, "generator " + it->first + " is hit twice", {}};
        const TargetGenerator& g = p.target[it->second];
        if (g.degree != p.ambient.column(k))
            return {false, "degree mismatch: " + p.ambient.labels()[k] + " has degree " +
                               to_string(p.ambient.column(k)) + " but " + g.label + " has degree " +
                               to_string(g.degree), {}};
        res.matching.push_back(it->second);
    }
    res.ok = true;
    return res;
}

/// The restriction matrix is invertible over ℚ and sends every ambient
/// variable's class to the class of its image generator.
inline Verdict check_pic_restriction(const CoxPresentationPair& p, const IntMat& restriction) {
    const std::size_t r = p.ambient.pic_rank();
    if (restriction.rows() != r || restriction.cols() != r)
        throw UsageError("restriction matrix must be " + std::to_string(r) + "x" + std::to_string(r));
    if (rank(restriction) != r) return Verdict::fail("restriction is not invertible over Q");
    std::map<std::string, const TargetGenerator*> by_label;
    for (const TargetGenerator& g : p.target) by_label[g.label] = &g;
    for (std::size_t k = 0; k < p.ambient.num_gens() && k < p.correspondence.size(); ++k) {
        auto it = by_label.find(p.correspondence[k]);
        if (it == by_label.end()) return Verdict::fail("variable " + p.ambient.labels()[k] + " has no image");
        IntMat col(r, 1);
        for (std::size_t i = 0; i < r; ++i) col(i, 0) = p.ambient.matrix()(i, k);
        const IntMat img = restriction * col;
        if (img.col_vec(0) != it->second->degree)
            return Verdict::fail("class of " + p.ambient.labels()[k] + " restricts to " + to_string(img.col_vec(0)) +
                                 ", expected " + to_string(it->second->degree));
    }
    return Verdict::pass();
}

struct RestrictionEntry {
    std::string label;     // e.g. "D0"
    std::string formula;   // e.g. "pi^*P0 - E1 - E4"
    Multidegree restricted;
};

using RestrictionTable = std::vector<RestrictionEntry>;

struct RestrictionCheck {
    bool ok = false;
    std::string reason;
    std::vector<std::pair<std::string, std::string>> matching;   // table label ↦ target label
};

/// Multiset equality between the table's restricted classes and the target
/// generator degrees, with the induced matching.
inline RestrictionCheck verify_restriction_table(const RestrictionTable& t, const CoxPresentationPair& p) {
    RestrictionCheck res;
    std::set<std::string> labels;
    for (const RestrictionEntry& e : t)
        if (!labels.insert(e.label).second) return {false, "duplicate table label " + e.label, {}};
    if (t.size() != p.target.size())
        return {false, "table has " + std::to_string(t.size()) + " entries, target has " +
                           std::to_string(p.target.size()) + " generators", {}};
    std::vector<bool> used(p.target.size(), false);
    for (const RestrictionEntry& e : t) {
        bool found = false;
        for (std::size_t g = 0; g < p.target.size(); ++g)
            if (!used[g] && p.target[g].degree == e.restricted) {
                used[g] = true;
                res.matching.emplace_back(e.label, p.target[g].label);
                found = true;
                break;
            }
        if (!found) {
            for (std::size_t g = 0; g < p.target.size(); ++g)
                if (!used[g])
                    return {false, "entry " + e.label + " with class " + to_string(e.restricted) +
                                       " has no partner; unmatched generator " + p.target[g].label + " of class " +
                                       to_string(p.target[g].degree), {}};
            return {false, "entry " + e.label + " has no partner", {}};
        }
    }
    res.ok = true;
    return res;
}

struct EmbeddingReport {
    BijectionResult degree_bijection;
    Verdict pic_restriction;
    RestrictionCheck restriction_table;
    std::vector<bool> extremality;   // per ambient column
    bool extremality_ok = false;
    bool overall = false;
    std::vector<std::string> notes;
};

inline EmbeddingReport mori_embedding_report(const CoxPresentationPair& p, const IntMat& restriction,
                                             const RestrictionTable& t) {
    EmbeddingReport rep;
    rep.degree_bijection = check_degree_bijection(p);
    rep.pic_restriction = check_pic_restriction(p, restriction);
    rep.restriction_table = verify_restriction_table(t, p);
    rep.extremality_ok = true;
    for (std::size_t k = 0; k < p.ambient.num_gens(); ++k) {
        const bool e = spans_extremal_ray(p.ambient, k);
        rep.extremality.push_back(e);
        rep.extremality_ok = rep.extremality_ok && e;
    }
    rep.overall = rep.degree_bijection.ok && rep.pic_restriction.ok && rep.restriction_table.ok && rep.extremality_ok;
    rep.notes = {
        "Cox(W) -> Cox(X) surjectivity is certified on generators only: every generator of Cox(X) is the image "
        "of a variable of equal degree; relations among the generators of Cox(X) are not modeled.",
        "The map of effective cones is restriction of classes in the shared basis.",
        "Chamber refinement (each Mori chamber of X is a finite union of chambers of W) and restriction of "
        "contractions follow from the Pic and Cox criteria; they are not computed independently.",
    };
    return rep;
}

// ---------------------------------------------------------------------------
// The del Pezzo example: X4 ⊂ W with Cox(W) = ℚ[x1..x10], x_k ↦ g_k.

/// Ambient grading taken from `ambient_source`, target generators from the
/// built-in X4 data.
inline CoxPresentationPair delpezzo4_pair(const DelPezzo4& ambient_source) {
    const DelPezzo4 dp = delpezzo4();
    std::vector<std::string> vars;
    for (std::size_t k = 1; k <= ambient_source.degrees.num_gens(); ++k) vars.push_back("x" + std::to_string(k));
    DegreeMatrix ambient(ambient_source.degrees.columns(), vars, ambient_source.heft);
    std::vector<TargetGenerator> target;
    for (std::size_t k = 0; k < 10; ++k) target.push_back({dp.degrees.labels()[k], dp.degrees.column(k)});
    std::vector<std::string> corr(dp.degrees.labels().begin(),
                                  dp.degrees.labels().begin() +
                                      static_cast<std::ptrdiff_t>(std::min<std::size_t>(10, vars.size())));
    return {std::move(ambient), std::move(target), std::move(corr)};
}

inline CoxPresentationPair delpezzo4_pair() { return delpezzo4_pair(delpezzo4()); }

/// Class of a·π*P + Σ b_j E_j after restriction to X4: π*P ↦ h, E_j ↦ l_j.
inline Multidegree restrict_to_x4(long pullback, const std::vector<long>& exceptional) {
    Multidegree d(5);
    d[0] = pullback;
    for (std::size_t j = 0; j < 4 && j < exceptional.size(); ++j) d[j + 1] = exceptional[j];
    return d;
}

/// D_i = π*P_i − E_j − E_k for the two planes Σ_j, Σ_k in the hyperplane
/// P_i = {x_i = 0} (pairs as listed with the example), then E_1…E_4.
inline RestrictionTable delpezzo4_restriction_table() {
    const std::pair<int, int> pairs[6] = {{1, 4}, {1, 2}, {1, 3}, {2, 4}, {2, 3}, {3, 4}};
    RestrictionTable t;
    for (int i = 0; i < 6; ++i) {
        auto [j, k] = pairs[i];
        std::vector<long> ex(4, 0);
        ex[static_cast<std::size_t>(j - 1)] = -1;
        ex[static_cast<std::size_t>(k - 1)] = -1;
        t.push_back({"D" + std::to_string(i),
                     "pi^*P" + std::to_string(i) + " - E" + std::to_string(j) + " - E" + std::to_string(k),
                     restrict_to_x4(1, ex)});
    }
    for (int j = 1; j <= 4; ++j) {
        std::vector<long> ex(4, 0);
        ex[static_cast<std::size_t>(j - 1)] = 1;
        t.push_back({"E" + std::to_string(j), "E" + std::to_string(j), restrict_to_x4(0, ex)});
    }
    return t;
}

}  // namespace toric
