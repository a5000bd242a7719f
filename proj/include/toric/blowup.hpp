#pragma once

// Blow-ups of monoid ideals, normalization as a blow-up, stellar subdivision,
// simplicialization and resolution of fans.

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/divisor.hpp"

namespace toric {

/// conv(a) ∩ M as an ideal of its (saturated) monoid.
MonoidIdeal integral_closure(const MonoidIdeal& a);
bool is_integrally_closed(const MonoidIdeal& a);

struct BlowupResult {
    AffineMonoid source;
    MonoidIdeal center;
    Polyhedron newton;
    /// Face monoids of the Newton polyhedron.
    MonoidCollection patches;
    /// The normal fan of the Newton polyhedron.
    Fan fan_after;
    /// Per generator of the center: index into newton.faces() of its smallest face.
    std::vector<std::size_t> generator_to_face;
    /// Per generator s: S + Σ N·(g - s).
    std::vector<AffineMonoid> charts;
    /// Per generator: the saturated chart equals the face monoid of its smallest face.
    std::vector<bool> chart_matches_face;
    /// Per Newton face: index into fan_after.cones() of its normal cone.
    std::vector<std::size_t> face_to_cone;
};

/// Throws NotIntegrallyClosed, NotSaturated.
BlowupResult blowup_affine(const AffineMonoid& s, const MonoidIdeal& a);

struct NormalizationPair {
    Vec target;  ///< element of the Hilbert basis of S^sat missing from S
    Vec plus;    ///< s' in S
    Vec minus;   ///< s'' in S with target = s' - s''
};

struct NormalizationResult {
    std::vector<NormalizationPair> pairs;
    /// Generators of the product ideal Π (t^{s'_i}, t^{s''_i}).
    std::vector<Vec> product_ideal;
    AffineMonoid saturation;
    /// S + Σ N·s_i.
    AffineMonoid composite;
    bool composite_is_saturation = false;
    /// Per pair: S ⊆ S + N·s_i ⊆ S^sat.
    std::vector<bool> sandwich;
};

/// Throws AlreadySaturated, PairSearchFailed.
NormalizationResult normalization_blowup(const AffineMonoid& s);

/// Throws NotInSupport; v must be primitive.
Fan stellar_subdivision(const Fan& f, const Vec& v);

struct AffineSimplicialization {
    Int m;
    MonoidIdeal ideal;
    BlowupResult result;
};

/// Blow-up of the m-th symbolic power of the facet's graded prime, m the lcm of ray heights.
/// Throws FiniteOrderClass when the facet's divisor class has finite order.
AffineSimplicialization simplicialize_affine(const AffineMonoid& s, const Vec& facet_normal);

struct ResolutionStep {
    enum class Phase { Simplicialize, Resolve };
    Phase phase;
    Fan before;
    Vec ray;
    /// Phase 1: the divisor m'·D_i whose symbolic powers are blown up.
    std::optional<std::size_t> ray_index;
    std::optional<Int> exponent;
    Fan after;
};

struct ResolutionTrace {
    std::vector<ResolutionStep> steps;
    Fan final_fan;
};

/// Stellar subdivisions along existing rays until every cone is simplicial.
/// Throws StepLimitExceeded if the class-group rank bound or max_steps is exceeded.
ResolutionTrace simplicialize(const Fan& f, std::size_t max_steps = 10000);
/// simplicialize, then subdivide at minimal parallelepiped points until smooth.
ResolutionTrace resolve(const Fan& f, std::size_t max_steps = 10000);

/// Nonzero points of the half-open parallelepiped of a simplicial cone, within its span,
/// each with the sum of its barycentric coordinates.
std::vector<std::pair<Rat, Vec>> parallelepiped_points(const Cone& sigma);

}  // namespace toric
