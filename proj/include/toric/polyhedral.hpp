#pragma once

// Polyhedral cones over ℚ: conversion between inequality (H) and generator (V)
// descriptions by the double description method, plus LP-backed membership.
//
// A cone in H-form is {x : a·x ≥ 0 for every inequality a, e·x = 0 for every
// equation e}. In V-form it is cone(rays) + span(lineality). All vectors are
// stored as primitive integer vectors.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "toric/exact.hpp"
#include "toric/lp.hpp"

namespace toric {

struct ConeHRep {
    std::size_t dim = 0;
    std::vector<IntVec> inequalities;
    std::vector<IntVec> equations;

    bool contains(std::span<const Int> x) const {
        for (const IntVec& a : inequalities)
            if (dot_int(a, x) < 0) return false;
        for (const IntVec& e : equations)
            if (dot_int(e, x) != 0) return false;
        return true;
    }
    bool contains(const RatVec& x) const {
        for (const IntVec& a : inequalities)
            if (dot(a, x) < 0) return false;
        for (const IntVec& e : equations)
            if (dot(e, x) != 0) return false;
        return true;
    }
    /// Interior of the cone relative to the ambient space.
    bool strictly_contains(const RatVec& x) const {
        if (!equations.empty()) return false;
        for (const IntVec& a : inequalities)
            if (dot(a, x) <= 0) return false;
        return true;
    }
};

struct ConeVRep {
    std::size_t dim = 0;
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
};

namespace detail {

using ZeroSet = std::vector<bool>;

inline std::size_t popcount(const ZeroSet& z) {
    return static_cast<std::size_t>(std::count(z.begin(), z.end(), true));
}

inline bool includes(const ZeroSet& big, const ZeroSet& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
        if (small[i] && !big[i]) return false;
    return true;
}

inline ZeroSet meet(const ZeroSet& a, const ZeroSet& b) {
    ZeroSet z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) z[i] = a[i] && b[i];
    return z;
}

// Coordinates of a basis of a subspace: x = sum_j y_j * basis_j.
inline IntVec lift(const std::vector<IntVec>& basis, std::span<const Int> y, std::size_t dim) {
    IntVec x(dim);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) x[i] += y[j] * basis[j][i];
    return primitive(std::move(x));
}

}  // namespace detail

/// Double description: extreme rays and lineality of an H-described cone.
inline ConeVRep extreme_rays(const ConeHRep& h) {
    const std::size_t n = h.dim;
    ConeVRep out;
    out.dim = n;

    // Lineality space: kernel of all rows.
    IntMat all(0, n);
    for (const auto& a : h.inequalities) all.append_row(a);
    for (const auto& e : h.equations) all.append_row(e);
    out.lineality = integer_kernel_rows(to_rat(all));

    // Pointed part lives in S = ker(equations) ∩ lineality^⊥.
    IntMat s_rows(0, n);
    for (const auto& e : h.equations) s_rows.append_row(e);
    for (const auto& l : out.lineality) s_rows.append_row(l);
    const std::vector<IntVec> basis = integer_kernel_rows(to_rat(s_rows));
    const std::size_t k = basis.size();
    if (k == 0) return out;

    // Inequalities in S-coordinates.
    std::vector<IntVec> ineq;
    for (const auto& a : h.inequalities) {
        IntVec r(k);
        for (std::size_t j = 0; j < k; ++j) r[j] = dot_int(a, basis[j]);
        if (!is_zero(r)) ineq.push_back(primitive(std::move(r)));
    }

    // Initial simplicial cone from k independent inequalities.
    std::vector<std::size_t> order;
    {
        IntMat chosen(0, k);
        for (std::size_t i = 0; i < ineq.size() && order.size() < k; ++i) {
            IntMat trial = chosen;
            trial.append_row(ineq[i]);
            if (rank(trial) > chosen.rows()) {
                chosen = std::move(trial);
                order.push_back(i);
            }
        }
        if (order.size() < k) throw Error("extreme_rays: cone is not pointed modulo its lineality");
        for (std::size_t i = 0; i < ineq.size(); ++i)
            if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
    }

    struct Ray {
        IntVec y;
        detail::ZeroSet zeros;
    };
    std::vector<Ray> rays;
    {
        RatMat a0(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) a0(i, j) = ineq[order[i]][j];
        const RatMat inv = *inverse(a0);
        for (std::size_t j = 0; j < k; ++j) {
            IntVec y = primitive(inv.col_vec(j));
            detail::ZeroSet z(ineq.size(), false);
            for (std::size_t i = 0; i < k; ++i) z[order[i]] = (i != j);
            rays.push_back({std::move(y), std::move(z)});
        }
    }

    // Incremental insertion of the remaining inequalities.
    for (std::size_t step = k; step < order.size(); ++step) {
        const IntVec& a = ineq[order[step]];
        std::vector<Int> val(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) val[r] = dot_int(a, rays[r].y);

        std::vector<Ray> next;
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (val[r] > 0) pos.push_back(r);
            if (val[r] < 0) neg.push_back(r);
            if (val[r] >= 0) {
                Ray kept = rays[r];
                kept.zeros[order[step]] = (val[r] == 0);
                next.push_back(std::move(kept));
            }
        }
        for (std::size_t p : pos)
            for (std::size_t q : neg) {
                detail::ZeroSet common = detail::meet(rays[p].zeros, rays[q].zeros);
                if (k >= 2 && detail::popcount(common) + 2 < k) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && detail::includes(rays[r].zeros, common)) adjacent = false;
                if (!adjacent) continue;
                IntVec y(k);
                for (std::size_t j = 0; j < k; ++j) y[j] = val[p] * rays[q].y[j] - val[q] * rays[p].y[j];
                if (is_zero(y)) continue;
                common[order[step]] = true;
                next.push_back({primitive(std::move(y)), std::move(common)});
            }
        rays = std::move(next);
    }

    for (const Ray& r : rays) out.rays.push_back(detail::lift(basis, r.y, n));
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

/// Irredundant H-representation of cone(generators): facet normals from the
/// extreme rays of the dual cone, equations from its lineality.
inline ConeHRep facets_of(const std::vector<IntVec>& generators, std::size_t dim) {
    ConeHRep dual;
    dual.dim = dim;
    for (const IntVec& g : generators)
        if (!is_zero(g)) dual.inequalities.push_back(g);
    const ConeVRep v = extreme_rays(dual);
    ConeHRep out;
    out.dim = dim;
    out.inequalities = v.rays;
    out.equations = v.lineality;
    return out;
}

/// Generators of a V-representation as a flat list (lineality in both signs).
inline std::vector<IntVec> generators_of(const ConeVRep& v) {
    std::vector<IntVec> g = v.rays;
    for (const IntVec& l : v.lineality) {
        g.push_back(l);
        IntVec m = l;
        for (Int& x : m) x = -x;
        g.push_back(std::move(m));
    }
    return g;
}

/// H-representation of the intersection, made irredundant.
inline ConeHRep intersect(const ConeHRep& a, const ConeHRep& b) {
    ConeHRep joined = a;
    joined.inequalities.insert(joined.inequalities.end(), b.inequalities.begin(), b.inequalities.end());
    joined.equations.insert(joined.equations.end(), b.equations.begin(), b.equations.end());
    return facets_of(generators_of(extreme_rays(joined)), a.dim);
}

/// Linear dimension of an H-described cone.
inline std::size_t cone_dimension(const ConeHRep& h) {
    const ConeVRep v = extreme_rays(h);
    return rank_of_rows(generators_of(v), h.dim);
}

/// LP test: w ∈ cone(generators). With strict=true, asks for a representation
/// with every coefficient positive (relative interior).
inline bool cone_contains(const std::vector<IntVec>& generators, std::span<const Int> w, bool strict = false) {
    const std::size_t n = generators.size();
    LinearSystem sys(n);
    for (std::size_t i = 0; i < n; ++i) {
        RatVec e(n);
        e[i] = 1;
        if (strict)
            sys.add_gt(std::move(e));
        else
            sys.add_ge(std::move(e));
    }
    for (std::size_t c = 0; c < w.size(); ++c) {
        RatVec row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = generators[i][c];
        sys.add_eq(std::move(row), Rat(w[c]));
    }
    return lp_feasible(sys).feasible;
}

/// LP test: cone(rays) contains no line. Zero generators are ignored.
inline bool strongly_convex(const std::vector<IntVec>& rays, std::size_t dim) {
    LinearSystem sys(dim);
    for (const IntVec& r : rays)
        if (!is_zero(r)) sys.add_gt(to_rat(r));
    return lp_feasible(sys).feasible;
}

}  // namespace toric
