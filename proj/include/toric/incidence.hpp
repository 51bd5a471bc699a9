#pragma once

// Exact projective linear algebra over ℚ, and a constructive solver for
// 2-planes in ℙ⁵ meeting four given 2-planes in four distinct points in
// general position.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "toric/exact.hpp"

namespace toric {

/// Point of projective space: primitive integer coordinates whose first
/// nonzero entry is positive.
class ProjPoint {
public:
    explicit ProjPoint(IntVec coords) : c_(normalize(std::move(coords))) {}
    explicit ProjPoint(std::span<const Rat> coords) : c_(normalize(primitive(coords))) {}
    ProjPoint(std::initializer_list<long> coords) : ProjPoint(IntVec(coords.begin(), coords.end())) {}

    const IntVec& coords() const noexcept { return c_; }
    std::size_t ambient_dim() const noexcept { return c_.size() - 1; }
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + c_[i].get_str();
        return s + "]";
    }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    static IntVec normalize(IntVec v) {
        if (is_zero(v)) throw InvalidInput("projective point with all coordinates zero");
        v = primitive(std::move(v));
        for (const Int& x : v)
            if (x != 0) {
                if (x < 0)
                    for (Int& y : v) y = -y;
                break;
            }
        return v;
    }

    IntVec c_;
};

/// Nonempty linear subspace of ℙᵐ, kept as a reduced row echelon basis.
class ProjSubspace {
public:
    /// Span of the given rows; they need not be independent but must not all
    /// vanish.
    static ProjSubspace span(const RatMat& rows) {
        RowEchelon e = rref(rows);
        if (e.reduced.rows() == 0) throw InvalidInput("span of zero vectors is empty");
        return ProjSubspace(std::move(e.reduced));
    }
    static ProjSubspace span(const std::vector<IntVec>& points) {
        if (points.empty()) throw InvalidInput("span of no points");
        return span(to_rat(IntMat::from_rows(points)));
    }

    const RatMat& basis() const noexcept { return basis_; }
    std::size_t ambient_dim() const noexcept { return basis_.cols() - 1; }
    std::size_t projective_dim() const noexcept { return basis_.rows() - 1; }

    /// Primitive integer basis rows.
    std::vector<IntVec> integer_basis() const {
        std::vector<IntVec> out;
        for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(primitive(basis_.row(i)));
        return out;
    }

    /// Linear forms cutting out the subspace.
    RatMat equations() const { return rational_kernel(basis_); }

    bool contains(const ProjPoint& p) const {
        if (p.coords().size() != basis_.cols()) return false;
        RatMat m = basis_;
        m.append_row(to_rat(p.coords()));
        return rank(m) == basis_.rows();
    }

    bool contains(const ProjSubspace& other) const {
        if (other.basis_.cols() != basis_.cols()) return false;
        RatMat m = basis_;
        for (std::size_t i = 0; i < other.basis_.rows(); ++i) m.append_row(other.basis_.row(i));
        return rank(m) == basis_.rows();
    }

    std::optional<ProjPoint> as_point() const {
        if (basis_.rows() != 1) return std::nullopt;
        return ProjPoint(basis_.row(0));
    }

    friend bool operator==(const ProjSubspace& a, const ProjSubspace& b) { return a.basis_ == b.basis_; }

private:
    explicit ProjSubspace(RatMat basis) : basis_(std::move(basis)) {}
    RatMat basis_;
};

/// Common zero set of linear forms in ℙᵐ.
inline ProjSubspace subspace_from_equations(const std::vector<RatVec>& forms, std::size_t ambient_dim) {
    RatMat m(0, ambient_dim + 1);
    for (const RatVec& f : forms) {
        if (f.size() != ambient_dim + 1) throw UsageError("linear form has wrong length");
        m.append_row(f);
    }
    const RatMat k = rational_kernel(m);
    if (k.rows() == 0) throw InvalidInput("empty projective set");
    return ProjSubspace::span(k);
}

/// Coordinate subspace {x_i = 0 for i in zero_coords}.
inline ProjSubspace coordinate_subspace(const std::vector<std::size_t>& zero_coords, std::size_t ambient_dim) {
    std::vector<RatVec> forms;
    for (std::size_t i : zero_coords) {
        RatVec f(ambient_dim + 1);
        f.at(i) = 1;
        forms.push_back(std::move(f));
    }
    return subspace_from_equations(forms, ambient_dim);
}

/// Projectivized intersection of the two linear spans; nullopt when they
/// meet only at the origin.
inline std::optional<ProjSubspace> intersect(const ProjSubspace& a, const ProjSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw UsageError("subspaces live in different spaces");
    RatMat eq = a.equations();
    const RatMat eb = b.equations();
    for (std::size_t i = 0; i < eb.rows(); ++i) eq.append_row(eb.row(i));
    if (eq.rows() == 0) return a;
    const RatMat k = rational_kernel(eq);
    if (k.rows() == 0) return std::nullopt;
    return ProjSubspace::span(k);
}

/// Projective dimension of a possibly empty intersection (−1 when empty).
inline long intersection_dim(const ProjSubspace& a, const ProjSubspace& b) {
    const auto m = intersect(a, b);
    return m ? static_cast<long>(m->projective_dim()) : -1;
}

enum class PositionVerdict { General, Special, Inapplicable };

struct PositionResult {
    PositionVerdict verdict = PositionVerdict::Inapplicable;
    std::string detail;
};

inline const char* to_string(PositionVerdict v) {
    switch (v) {
        case PositionVerdict::General: return "general";
        case PositionVerdict::Special: return "special";
        case PositionVerdict::Inapplicable: return "inapplicable";
    }
    return "?";
}

/// Four points on a 2-plane are in general position iff no three are
/// collinear. Points off the plane make the question inapplicable.
inline PositionResult general_position_on_plane(const std::array<ProjPoint, 4>& pts, const ProjSubspace& plane,
                                                const std::array<std::string, 4>& names = {"P1", "P2", "P3", "P4"}) {
    if (plane.projective_dim() != 2) throw UsageError("general_position_on_plane needs a 2-plane");
    const RatMat bt = plane.basis().transpose();
    std::array<RatVec, 4> local;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!plane.contains(pts[i]))
            return {PositionVerdict::Inapplicable, names[i] + " = " + pts[i].to_string() + " does not lie on the plane"};
        local[i] = *solve(bt, to_rat(pts[i].coords()));
    }
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            for (std::size_t c = b + 1; c < 4; ++c) {
                const RatMat m = RatMat::from_rows({local[a], local[b], local[c]});
                if (rank(m) < 3)
                    return {PositionVerdict::Special, names[a] + ", " + names[b] + ", " + names[c] + " are collinear"};
            }
    return {PositionVerdict::General, "no three points are collinear"};
}

// ---------------------------------------------------------------------------
// Transversal planes

inline constexpr long kSampleBox = 10;

struct TransversalCheck {
    bool is_plane = false;           // span has projective dimension 2
    bool meets_each_in_point = false;
    bool points_distinct = false;
    bool points_exclusive = false;   // point i lies on no other target
    bool general_position = false;
    std::vector<ProjPoint> points;

    bool all() const {
        return is_plane && meets_each_in_point && points_distinct && points_exclusive && general_position;
    }
};

/// Replays every predicate a transversal plane has to satisfy.
inline TransversalCheck check_transversal(const ProjSubspace& plane, const std::array<ProjSubspace, 4>& targets) {
    TransversalCheck c;
    c.is_plane = plane.projective_dim() == 2;
    if (!c.is_plane) return c;
    c.meets_each_in_point = true;
    for (const ProjSubspace& t : targets) {
        const auto m = intersect(plane, t);
        if (!m || m->projective_dim() != 0) {
            c.meets_each_in_point = false;
            return c;
        }
        c.points.push_back(*m->as_point());
    }
    c.points_distinct = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (c.points[i] == c.points[j]) c.points_distinct = false;
    c.points_exclusive = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j && targets[j].contains(c.points[i])) c.points_exclusive = false;
    const std::array<ProjPoint, 4> pts = {c.points[0], c.points[1], c.points[2], c.points[3]};
    c.general_position = general_position_on_plane(pts, plane).verdict == PositionVerdict::General;
    return c;
}

struct TransversalResult {
    ProjSubspace plane;
    std::array<ProjPoint, 4> points;
    std::uint64_t seed = 0;
    unsigned attempts = 0;
};

namespace detail {

class BoxSampler {
public:
    explicit BoxSampler(std::uint64_t seed) : rng_(seed) {}
    long next() {
        const std::uint64_t span = 2 * kSampleBox + 1;
        return static_cast<long>(rng_() % span) - kSampleBox;
    }
    /// Random integer combination of the basis rows.
    IntVec combination(const std::vector<IntVec>& basis) {
        IntVec v(basis.front().size());
        for (const IntVec& b : basis) {
            const long c = next();
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
        }
        return v;
    }

private:
    std::mt19937_64 rng_;
};

inline Int det_stack(const std::vector<IntVec>& rows) { return determinant(IntMat::from_rows(rows)); }

inline void require_plane_targets(const std::array<ProjSubspace, 4>& targets) {
    for (const ProjSubspace& t : targets)
        if (t.ambient_dim() != 5 || t.projective_dim() != 2) throw UsageError("targets must be 2-planes in P^5");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (intersection_dim(targets[i], targets[j]) > 0)
                throw InvalidInput("degenerate targets: target " + std::to_string(i + 1) + " and target " +
                                   std::to_string(j + 1) + " meet in more than a point");
}

}  // namespace detail

/// Samples p1 ∈ T1, p2 ∈ T2 and a pencil a·u + b·v in T3; the plane through
/// them meets T4 iff det[p1; p2; a·u + b·v; T4] = 0, which is linear in
/// (a : b) and solved exactly. Every predicate is replayed before returning.
inline TransversalResult find_transversal_plane(const std::array<ProjSubspace, 4>& targets, std::uint64_t seed,
                                                unsigned max_tries) {
    detail::require_plane_targets(targets);
    std::array<std::vector<IntVec>, 4> bases;
    for (std::size_t i = 0; i < 4; ++i) bases[i] = targets[i].integer_basis();
    detail::BoxSampler sample(seed);
    for (unsigned attempt = 1; attempt <= max_tries; ++attempt) {
        const IntVec p1 = sample.combination(bases[0]);
        const IntVec p2 = sample.combination(bases[1]);
        const IntVec u = sample.combination(bases[2]);
        const IntVec v = sample.combination(bases[2]);
        if (is_zero(p1) || is_zero(p2) || is_zero(u) || is_zero(v)) continue;
        auto stacked = [&](const IntVec& third) {
            std::vector<IntVec> rows = {p1, p2, third};
            rows.insert(rows.end(), bases[3].begin(), bases[3].end());
            return detail::det_stack(rows);
        };
        const Int alpha = stacked(u);
        const Int beta = stacked(v);
        IntVec p3(u.size());
        for (std::size_t i = 0; i < p3.size(); ++i) p3[i] = beta * u[i] - alpha * v[i];
        if (alpha == 0 && beta == 0) p3 = u;
        if (is_zero(p3)) continue;
        const ProjSubspace plane = ProjSubspace::span(std::vector<IntVec>{p1, p2, p3});
        const TransversalCheck check = check_transversal(plane, targets);
        if (!check.all()) continue;
        return {plane, {check.points[0], check.points[1], check.points[2], check.points[3]}, seed, attempt};
    }
    throw SearchExhausted("no transversal plane found in " + std::to_string(max_tries) + " attempts", max_tries);
}

struct WitnessPlane {
    ProjSubspace plane;
    ProjPoint q12;   // target1 ∩ target2
    ProjPoint q34;   // target3 ∩ target4
    bool meets_all = false;
    bool refinement_holds = false;   // four distinct, mutually exclusive points
};

/// A plane containing the line through T1∩T2 and T3∩T4 plus one sampled
/// point. It meets every target, but T1 and T2 are met at the same point.
inline WitnessPlane witness_plane_via_line(const std::array<ProjSubspace, 4>& targets, std::uint64_t seed) {
    auto single_point = [](const ProjSubspace& a, const ProjSubspace& b, const char* name) {
        const auto m = intersect(a, b);
        if (!m || m->projective_dim() != 0) throw InvalidInput(std::string(name) + " is not a single point");
        return *m->as_point();
    };
    const ProjPoint q12 = single_point(targets[0], targets[1], "target1 ∩ target2");
    const ProjPoint q34 = single_point(targets[2], targets[3], "target3 ∩ target4");
    if (q12 == q34) throw InvalidInput("target1 ∩ target2 and target3 ∩ target4 coincide");
    detail::BoxSampler sample(seed);
    for (;;) {
        IntVec r(q12.coords().size());
        for (Int& x : r) x = sample.next();
        const std::vector<IntVec> rows = {q12.coords(), q34.coords(), r};
        if (rank_of_rows(rows, r.size()) != 3) continue;
        const ProjSubspace plane = ProjSubspace::span(rows);
        bool meets = true;
        for (const ProjSubspace& t : targets) meets = meets && intersect(plane, t).has_value();
        const TransversalCheck c = check_transversal(plane, targets);
        return {plane, q12, q34, meets, c.all()};
    }
}

// ---------------------------------------------------------------------------
// The explicit data of the del Pezzo example in ℙ⁵.

/// Σ1 = {x0=x3=x5=0}, Σ2 = {x0=x2=x4=0}, Σ3 = {x1=x2=x3=0}, Σ4 = {x1=x4=x5=0}.
inline std::array<ProjSubspace, 4> special_planes() {
    return {coordinate_subspace({0, 3, 5}, 5), coordinate_subspace({0, 2, 4}, 5), coordinate_subspace({1, 2, 3}, 5),
            coordinate_subspace({1, 4, 5}, 5)};
}

/// Σ = {x2+x4 = 0, x0+x1+x3 = 0, x0+x3+x5 = 0} as printed.
inline std::vector<RatVec> printed_sigma_equations() {
    auto form = [](std::initializer_list<long> c) { return RatVec(c.begin(), c.end()); };
    return {form({0, 0, 1, 0, 1, 0}), form({1, 1, 0, 1, 0, 0}), form({1, 0, 0, 1, 0, 1})};
}

inline ProjSubspace printed_sigma() { return subspace_from_equations(printed_sigma_equations(), 5); }

inline std::array<ProjPoint, 4> printed_points() {
    return {ProjPoint{0, 0, 1, 0, -1, 0}, ProjPoint{0, 1, 0, -1, 0, 1}, ProjPoint{1, 0, 0, 0, 0, -1},
            ProjPoint{1, 0, 0, -1, 0, 0}};
}

/// Indices (1-based) of the targets lying in the coordinate hyperplane {x_i = 0}.
inline std::vector<std::size_t> targets_in_hyperplane(const std::array<ProjSubspace, 4>& targets, std::size_t i) {
    const ProjSubspace h = coordinate_subspace({i}, targets[0].ambient_dim());
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < 4; ++t)
        if (h.contains(targets[t])) out.push_back(t + 1);
    return out;
}

/// The hyperplane containments as listed alongside the divisors D_i.
inline std::array<std::vector<std::size_t>, 6> printed_hyperplane_containments() {
    return {{{1, 4}, {1, 2}, {1, 3}, {2, 4}, {2, 3}, {3, 4}}};
}

}  // namespace toric
