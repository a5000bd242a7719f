#pragma once

// Torus-invariant divisors on fans: Cartier tests, the class group, divisor-class orders,
// facet valuations and symbolic powers of graded primes.

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/fan.hpp"
#include "toric/polyhedron.hpp"

namespace toric {

/// Coefficients indexed by the fan's ray order.
struct TorusDivisor {
    Vec coefficients;

    /// Throws InvalidInput on a length mismatch.
    static TorusDivisor on(const Fan& f, Vec coefficients);
    static TorusDivisor ray(const Fan& f, std::size_t i);
};

struct CartierResult {
    bool cartier = false;
    /// u_σ with <u_σ, v_i> = -a_i on the rays of each maximal cone, when it exists.
    std::vector<std::optional<Vec>> witnesses;
};

CartierResult is_cartier(const Fan& f, const TorusDivisor& d);

/// G = (⊕ Z·D_i) / Div_T, presented through a Smith decomposition of the Cartier lattice.
class ClassGroup {
public:
    /// Throws NoRays.
    static ClassGroup of(const Fan& f);
    /// Cl(S_σ) of a single cone: the cokernel of M -> Z^rays.
    static ClassGroup of_cone(const Cone& sigma);

    std::size_t rank() const noexcept { return free_rank_; }
    /// Invariant factors greater than one.
    const std::vector<Int>& torsion() const noexcept { return torsion_; }
    bool is_finite() const noexcept { return free_rank_ == 0; }
    bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
    /// Hermite basis of the Cartier lattice inside Z^r.
    const std::vector<Vec>& cartier_lattice() const noexcept { return cartier_; }
    std::size_t ray_count() const noexcept { return r_; }

    /// Coordinates of the class: torsion parts reduced mod their factors, then the free part.
    Vec image(const Vec& coefficients) const;
    bool is_zero_class(const Vec& coefficients) const;
    /// Order of the class; empty when infinite.
    std::optional<Int> order(const Vec& coefficients) const;

private:
    static ClassGroup from_lattice(std::vector<Vec> lattice, std::size_t r);

    std::size_t r_ = 0;
    std::vector<Vec> cartier_;
    Matrix v_;
    std::vector<Int> factors_;  ///< all nonzero invariant factors, ones included
    std::vector<Int> torsion_;
    std::size_t free_rank_ = 0;
};

inline ClassGroup class_group(const Fan& f) { return ClassGroup::of(f); }

/// Order of D in G, cross-checked against the lcm of local orders over maximal cones.
/// Empty when infinite. Throws InconsistentOrder if the two computations disagree.
std::optional<Int> divisor_class_order(const Fan& f, const TorusDivisor& d);
/// Order of D restricted to sigma in Cl(S_σ); empty when infinite. Rays of sigma are
/// looked up in the fan.
std::optional<Int> local_class_order(const Fan& f, const Cone& sigma, const TorusDivisor& d);

struct ConeReport {
    Cone cone;
    bool simplicial = false;
    std::optional<Int> multiplicity;
    bool smooth = false;
};

struct SimplicialSmoothReport {
    std::vector<ConeReport> cones;  ///< maximal cones
    ClassGroup group;
    bool simplicial = false;
    bool smooth = false;
};

/// Throws CriterionMismatch if the cone-level and group-level tests disagree.
SimplicialSmoothReport simplicial_smooth_report(const Fan& f);

/// Index of the facet of cone(S) defined by `normal`. Throws NotAFacet.
std::size_t facet_index(const AffineMonoid& s, const Vec& normal);
/// Lattice distance from u to the facet hyperplane, measured in Z·S. Throws NotAFacet.
Int ord(const AffineMonoid& s, const Vec& facet_normal, const Vec& u);
/// The ord functional scaled to be primitive on Z·S, as (normal, divisor): ord(u) = <normal, u> / divisor.
std::pair<Vec, Int> ord_functional(const AffineMonoid& s, const Vec& facet_normal);
/// Heights of the first lattice points of Z·S on each ray of cone(S) off the facet.
std::vector<Int> ray_heights(const AffineMonoid& s, const Vec& facet_normal);

/// {s in S : ord(s) >= m} by minimal generators. Throws NotAFacet.
MonoidIdeal symbolic_power(const AffineMonoid& s, const Vec& facet_normal, const Int& m);
MonoidIdeal graded_prime_of_facet(const AffineMonoid& s, const Vec& facet_normal);

}  // namespace toric
