#pragma once

// Fans in N and the correspondence with collections of monoids in M.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "toric/monoid.hpp"

namespace toric {

class Fan {
public:
    Fan() = default;
    /// Face closure of the given cones. Throws NotAFan naming the first offending pair.
    static Fan from_cones(const std::vector<Cone>& cones, std::size_t rank);

    std::size_t ambient_rank() const noexcept { return rank_; }
    /// All cones, sorted by (dim, rays); the zero cone comes first.
    const std::vector<Cone>& cones() const noexcept { return cones_; }
    const std::vector<Cone>& maximal_cones() const noexcept { return maximal_; }
    /// Primitive ray generators in lexicographic order; divisor coefficients use this order.
    const std::vector<Vec>& rays() const noexcept { return rays_; }

    std::optional<std::size_t> ray_index(const Vec& ray) const;
    /// Indices into rays() of the rays of c.
    std::vector<std::size_t> ray_indices(const Cone& c) const;

    bool is_simplicial() const;
    bool is_smooth() const;
    bool in_support(const Vec& x) const;

    bool operator==(const Fan& other) const { return rank_ == other.rank_ && cones_ == other.cones_; }

private:
    std::size_t rank_ = 0;
    std::vector<Cone> cones_;
    std::vector<Cone> maximal_;
    std::vector<Vec> rays_;
};

/// First pair (i, j), i < j, of input cones whose intersection is not a face of both.
std::optional<std::pair<std::size_t, std::size_t>> fan_violation(const std::vector<Cone>& cones);

/// σ∨ ∩ M for each cone σ, in the fan's cone order.
std::vector<AffineMonoid> fan_monoids(const Fan& f);
MonoidCollection fan_to_monoid_collection(const Fan& f);
/// Dual cones of cone(S). Throws NotSaturated when some monoid is not saturated.
Fan monoid_collection_to_fan(const MonoidCollection& c);
/// Dual cones of cone(S) for any valid collection, saturated or not.
Fan normalization_fan(const MonoidCollection& c);

struct OrbitPoset {
    std::vector<Cone> cones;
    std::vector<AffineMonoid> monoids;
    /// (i, j) with cones[i] a proper face of cones[j].
    std::vector<std::pair<std::size_t, std::size_t>> order;
    /// Covering relations of `order`.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
};

OrbitPoset orbit_poset(const Fan& f);

/// Lattice points in the box [-radius, radius]^d agree on membership in both supports.
bool same_support_sampled(const Fan& a, const Fan& b, long radius = 8);
/// Every maximal cone of fine lies inside some maximal cone of coarse.
bool refines(const Fan& fine, const Fan& coarse);

}  // namespace toric
