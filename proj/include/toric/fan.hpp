#pragma once

// Fans built from Gale dual rays and an irrelevant radical, with exact
// certification of fan-hood, simpliciality, completeness and projectivity.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "toric/exact.hpp"
#include "toric/graded_ring.hpp"
#include "toric/lp.hpp"
#include "toric/monomials.hpp"
#include "toric/polyhedral.hpp"

namespace toric {

/// Rays of a cone, as 1-based indices into the fan's ray list.
struct Cone {
    Support rays;
    std::size_t ambient_dim = 0;
};

struct Verdict {
    bool ok = false;
    std::string reason;   // first violation when !ok

    static Verdict pass() { return {true, {}}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const noexcept { return ok; }
};

class Fan {
public:
    Fan(std::vector<IntVec> rays, std::vector<Cone> maximal_cones, std::size_t dim)
        : rays_(std::move(rays)), cones_(std::move(maximal_cones)), dim_(dim),
          cache_(std::make_shared<FacetCache>(cones_.size())) {
        for (const IntVec& r : rays_) {
            if (r.size() != dim_) throw InvalidInput("ray has wrong dimension");
            if (is_zero(r)) throw InvalidInput("zero ray");
        }
        for (const Cone& c : cones_)
            for (std::size_t i : c.rays.indices())
                if (i > rays_.size()) throw InvalidInput("cone " + c.rays.to_string() + " uses an unknown ray");
    }

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<IntVec>& rays() const noexcept { return rays_; }
    const std::vector<Cone>& maximal_cones() const noexcept { return cones_; }
    std::size_t num_maximal_cones() const noexcept { return cones_.size(); }

    std::vector<IntVec> cone_rays(std::size_t c) const {
        std::vector<IntVec> out;
        for (std::size_t i : cones_[c].rays.indices()) out.push_back(rays_[i - 1]);
        return out;
    }

    /// Facet normals and equations of maximal cone c, computed once.
    const ConeHRep& cone_hrep(std::size_t c) const {
        std::call_once(cache_->once[c], [&] { cache_->hreps[c] = facets_of(cone_rays(c), dim_); });
        return cache_->hreps[c];
    }

    /// Rays of cone c lying on the hyperplane normal·x = 0.
    Support rays_on(std::size_t c, const IntVec& normal) const {
        std::vector<std::size_t> on;
        for (std::size_t i : cones_[c].rays.indices())
            if (dot_int(normal, rays_[i - 1]) == 0) on.push_back(i);
        return Support(std::move(on));
    }

    /// Same fan with the maximal cones listed in a different order.
    Fan permuted(const std::vector<std::size_t>& order) const {
        std::vector<Cone> cs;
        for (std::size_t i : order) cs.push_back(cones_.at(i));
        return Fan(rays_, std::move(cs), dim_);
    }

private:
    struct FacetCache {
        explicit FacetCache(std::size_t n) : once(n), hreps(n) {}
        std::vector<std::once_flag> once;
        std::vector<ConeHRep> hreps;
    };

    std::vector<IntVec> rays_;
    std::vector<Cone> cones_;
    std::size_t dim_;
    std::shared_ptr<FacetCache> cache_;
};

/// One maximal cone per minimal generator S of the radical, spanned by the
/// rays indexed by the complement of S.
inline Fan fan_from_irrelevant(const GaleDual& g, const SquarefreeIdeal& b) {
    if (b.empty()) throw InvalidInput("irrelevant radical is empty");
    const std::size_t n = g.num_rays();
    std::vector<Cone> cones;
    for (const Support& s : b.generators()) {
        if (!s.indices().empty() && s.indices().back() > n)
            throw InvalidInput("support " + s.to_string() + " refers to a missing generator");
        Cone c{s.complement(n), g.dim()};
        std::vector<IntVec> rs;
        for (std::size_t i : c.rays.indices()) rs.push_back(g.ray(i - 1));
        if (!strongly_convex(rs, g.dim()))
            throw InvalidInput("cone on the complement of support " + s.to_string() + " is not strongly convex");
        cones.push_back(std::move(c));
    }
    return Fan(g.all_rays(), std::move(cones), g.dim());
}

namespace detail {

inline Support common_rays(const Support& a, const Support& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.indices().begin(), a.indices().end(), b.indices().begin(), b.indices().end(),
                          std::back_inserter(out));
    return Support(std::move(out));
}

// cone(common) must be the face of cone c cut out by the facets containing it.
inline bool is_face_of(const Fan& f, std::size_t c, const Support& common, const ConeHRep& common_h) {
    const ConeHRep& h = f.cone_hrep(c);
    std::vector<const IntVec*> tight;
    for (const IntVec& a : h.inequalities) {
        bool vanishes = true;
        for (std::size_t i : common.indices())
            if (dot_int(a, f.rays()[i - 1]) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) tight.push_back(&a);
    }
    for (std::size_t i : f.maximal_cones()[c].rays.indices()) {
        const IntVec& v = f.rays()[i - 1];
        bool on_face = true;
        for (const IntVec* a : tight)
            if (dot_int(*a, v) != 0) {
                on_face = false;
                break;
            }
        if (on_face && !common_h.contains(v)) return false;
    }
    return true;
}

}  // namespace detail

/// Checks strong convexity of every maximal cone and that every pair meets in
/// the cone on their common rays, which must be a face of both.
inline Verdict validate_fan(const Fan& f) {
    const std::size_t m = f.num_maximal_cones();
    for (std::size_t c = 0; c < m; ++c)
        if (!strongly_convex(f.cone_rays(c), f.dim()))
            return Verdict::fail("cone " + f.maximal_cones()[c].rays.to_string() + " is not strongly convex");
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            const Support& sa = f.maximal_cones()[a].rays;
            const Support& sb = f.maximal_cones()[b].rays;
            const Support common = detail::common_rays(sa, sb);
            std::vector<IntVec> common_rays;
            for (std::size_t i : common.indices()) common_rays.push_back(f.rays()[i - 1]);
            const ConeHRep common_h = facets_of(common_rays, f.dim());
            ConeHRep meet = f.cone_hrep(a);
            const ConeHRep& hb = f.cone_hrep(b);
            meet.inequalities.insert(meet.inequalities.end(), hb.inequalities.begin(), hb.inequalities.end());
            meet.equations.insert(meet.equations.end(), hb.equations.begin(), hb.equations.end());
            for (const IntVec& g : generators_of(extreme_rays(meet)))
                if (!common_h.contains(g))
                    return Verdict::fail("cones " + sa.to_string() + " and " + sb.to_string() +
                                         " overlap beyond their common rays");
            if (!detail::is_face_of(f, a, common, common_h) || !detail::is_face_of(f, b, common, common_h))
                return Verdict::fail("common part of cones " + sa.to_string() + " and " + sb.to_string() +
                                     " is not a face of both");
        }
    return Verdict::pass();
}

/// Every maximal cone has linearly independent rays.
inline Verdict is_simplicial(const Fan& f) {
    for (std::size_t c = 0; c < f.num_maximal_cones(); ++c) {
        const auto rs = f.cone_rays(c);
        if (rank_of_rows(rs, f.dim()) != rs.size())
            return Verdict::fail("cone " + f.maximal_cones()[c].rays.to_string() + " has " +
                                 std::to_string(rs.size()) + " rays but dimension " +
                                 std::to_string(rank_of_rows(rs, f.dim())));
    }
    return Verdict::pass();
}

/// A facet shared between two maximal cones.
struct Adjacency {
    std::size_t first = 0;
    std::size_t second = 0;
    Support shared;   // rays on the common facet
};

struct FacetPairing {
    std::map<Support, std::vector<std::size_t>> owners;   // facet ray set → cones having it
};

inline FacetPairing facet_pairing(const Fan& f) {
    FacetPairing p;
    for (std::size_t c = 0; c < f.num_maximal_cones(); ++c)
        for (const IntVec& a : f.cone_hrep(c).inequalities) p.owners[f.rays_on(c, a)].push_back(c);
    return p;
}

/// Pure full-dimensional fan whose every facet is shared by exactly two
/// maximal cones and whose facet-adjacency graph is connected.
inline Verdict is_complete(const Fan& f) {
    const std::size_t m = f.num_maximal_cones();
    if (m == 0) return Verdict::fail("fan has no cones");
    for (std::size_t c = 0; c < m; ++c)
        if (rank_of_rows(f.cone_rays(c), f.dim()) != f.dim())
            return Verdict::fail("fan is not pure: cone " + f.maximal_cones()[c].rays.to_string() +
                                 " is not full-dimensional");
    const FacetPairing p = facet_pairing(f);
    std::vector<std::vector<std::size_t>> adj(m);
    for (const auto& [facet, owners] : p.owners) {
        if (owners.size() != 2)
            return Verdict::fail("facet " + facet.to_string() + " lies in " + std::to_string(owners.size()) +
                                 " maximal cone(s)");
        adj[owners[0]].push_back(owners[1]);
        adj[owners[1]].push_back(owners[0]);
    }
    std::vector<bool> seen(m, false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
        const std::size_t c = todo.front();
        todo.pop();
        for (std::size_t d : adj[c])
            if (!seen[d]) {
                seen[d] = true;
                ++reached;
                todo.push(d);
            }
    }
    if (reached != m) return Verdict::fail("facet-adjacency graph is disconnected");
    return Verdict::pass();
}

inline std::vector<Adjacency> adjacencies(const Fan& f) {
    std::vector<Adjacency> out;
    for (const auto& [facet, owners] : facet_pairing(f).owners)
        if (owners.size() == 2) out.push_back({owners[0], owners[1], facet});
    return out;
}

struct ProjectivityResult {
    bool projective = false;
    std::string reason;
    std::vector<RatVec> support_function;   // one linear functional per maximal cone
};

/// Replays a support function: agreement on every shared facet and a jump of
/// at least 1 at every ray across it.
inline bool verify_support_function(const Fan& f, const std::vector<RatVec>& m) {
    if (m.size() != f.num_maximal_cones()) return false;
    for (const Adjacency& a : adjacencies(f)) {
        auto check = [&](std::size_t own, std::size_t other) {
            for (std::size_t i : f.maximal_cones()[own].rays.indices()) {
                const IntVec& v = f.rays()[i - 1];
                const Rat diff = dot(m[own], v) - dot(m[other], v);
                if (a.shared.contains(i) ? diff != 0 : diff < 1) return false;
            }
            return true;
        };
        if (!check(a.first, a.second) || !check(a.second, a.first)) return false;
    }
    return true;
}

/// Exact LP for a strictly convex piecewise-linear support function over
/// facet-adjacent pairs. Assumes a complete fan, where local convexity
/// across every wall implies global strict convexity.
inline ProjectivityResult is_projective(const Fan& f) {
    if (Verdict c = is_complete(f); !c) return {false, "fan is not complete: " + c.reason, {}};
    const std::size_t d = f.dim();
    const std::size_t m = f.num_maximal_cones();
    LinearSystem sys(d * m);
    for (const Adjacency& a : adjacencies(f)) {
        auto add_rows = [&](std::size_t own, std::size_t other) {
            for (std::size_t i : f.maximal_cones()[own].rays.indices()) {
                const bool on_wall = a.shared.contains(i);
                if (on_wall && own != a.first) continue;   // equality rows once per wall
                const IntVec& v = f.rays()[i - 1];
                RatVec row(d * m);
                for (std::size_t k = 0; k < d; ++k) {
                    row[own * d + k] = v[k];
                    row[other * d + k] = -Rat(v[k]);
                }
                if (on_wall)
                    sys.add_eq(std::move(row));
                else
                    sys.add_ge(std::move(row), 1);
            }
        };
        add_rows(a.first, a.second);
        add_rows(a.second, a.first);
    }
    const LpResult res = lp_feasible(sys);
    if (!res.feasible) return {false, "no strictly convex support function exists", {}};
    std::vector<RatVec> fn(m, RatVec(d));
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t k = 0; k < d; ++k) fn[c][k] = res.witness[c * d + k];
    if (!verify_support_function(f, fn)) throw Error("is_projective: support function failed replay");
    return {true, {}, std::move(fn)};
}

// ---------------------------------------------------------------------------
// Ray shooting, an independent completeness cross-check.

struct RayHit {
    std::size_t interior = 0;   // maximal cones containing the direction in their interior
    std::size_t boundary = 0;   // maximal cones containing it on their boundary
};

inline RayHit shoot_ray(const Fan& f, const IntVec& direction) {
    RayHit hit;
    const RatVec x = to_rat(direction);
    for (std::size_t c = 0; c < f.num_maximal_cones(); ++c) {
        const ConeHRep& h = f.cone_hrep(c);
        if (h.strictly_contains(x))
            ++hit.interior;
        else if (h.contains(x))
            ++hit.boundary;
    }
    return hit;
}

/// Deterministic direction with coordinates ±pᵉ for distinct primes p.
inline IntVec generic_direction(std::size_t dim, std::uint64_t seed) {
    static constexpr unsigned long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    if (dim > std::size(primes)) throw UsageError("generic_direction supports at most 16 coordinates");
    std::mt19937_64 rng(seed);
    IntVec v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::uint64_t bits = rng();
        Int p = primes[i];
        mpz_pow_ui(v[i].get_mpz_t(), p.get_mpz_t(), 1 + (bits >> 1) % 3);
        if (bits & 1) v[i] = -v[i];
    }
    return v;
}

/// True iff the direction lands in exactly one interior, or only on walls.
inline bool direction_covered_once(const Fan& f, const IntVec& direction) {
    const RayHit h = shoot_ray(f, direction);
    return h.interior == 1 || (h.interior == 0 && h.boundary >= 2);
}

}  // namespace toric
