#pragma once

// Rational polyhedral cones with exact double description.

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// Extreme rays of the pointed cone {y : <g, y> >= 0 for every row g}.
/// The rows must span Q^k; throws NotPointed otherwise. Output is primitive and sorted.
std::vector<Vec> extreme_rays(const std::vector<Vec>& constraints, std::size_t k);

/// A polyhedral cone that may contain lines: cone(rays) + span(lineality).
///
/// Canonical form: `lineality` and `equations` are Hermite bases of saturated lattices,
/// `rays` are the primitive extreme-ray representatives lying in span ∩ lineality^⊥, and
/// `facets` are the dual's canonical rays. With both kept, duality is a swap.
struct GeneralCone {
    std::size_t rank = 0;
    std::vector<Vec> rays;
    std::vector<Vec> lineality;
    std::vector<Vec> facets;
    std::vector<Vec> equations;

    static GeneralCone from_generators(const std::vector<Vec>& rays, const std::vector<Vec>& lineality,
                                       std::size_t rank);
    static GeneralCone whole_space(std::size_t rank);

    std::size_t dim() const noexcept { return rank - equations.size(); }
    bool pointed() const noexcept { return lineality.empty(); }
    bool contains(const Vec& x) const;
    bool contains(const RatVec& x) const;
    /// Inequality rows: facets followed by ±equations.
    std::vector<Vec> inequalities() const;

    bool operator==(const GeneralCone& other) const = default;
};

GeneralCone dual(const GeneralCone& c);

/// Strongly convex rational polyhedral cone.
class Cone {
public:
    Cone() = default;
    static Cone from_rays(const std::vector<Vec>& rays, std::size_t rank);
    static Cone from_inequalities(const std::vector<Vec>& normals, std::size_t rank);
    static Cone zero(std::size_t rank);
    /// Throws ContainsLine when g has lineality.
    static Cone from_general(const GeneralCone& g);

    std::size_t ambient_rank() const noexcept { return data_.rank; }
    std::size_t dim() const noexcept { return data_.dim(); }
    const std::vector<Vec>& rays() const noexcept { return data_.rays; }
    const std::vector<Vec>& facet_normals() const noexcept { return data_.facets; }
    const std::vector<Vec>& equations() const noexcept { return data_.equations; }
    std::vector<Vec> inequalities() const { return data_.inequalities(); }
    bool is_full_dimensional() const noexcept { return data_.equations.empty(); }
    bool contains(const Vec& x) const { return data_.contains(x); }
    const GeneralCone& general() const noexcept { return data_; }

    bool operator==(const Cone& other) const { return data_.rank == other.data_.rank && data_.rays == other.data_.rays; }
    /// Canonical order: by dimension, then lexicographically by rays.
    bool operator<(const Cone& other) const;

private:
    GeneralCone data_;
};

struct Face {
    std::vector<std::size_t> rays;   ///< indices into the parent's rays
    std::vector<std::size_t> tight;  ///< indices of parent facets vanishing on the face
    std::size_t dim = 0;
};

/// All faces, the cone itself and the minimal face included, sorted by (dim, rays).
std::vector<Face> faces(const GeneralCone& c);
std::vector<Face> faces(const Cone& c);
Cone face_cone(const Cone& c, const Face& f);

GeneralCone dual(const Cone& c);
/// Dual of a full-dimensional cone as a Cone. Throws NotFullDimensional otherwise.
Cone dual_cone(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

/// A functional u >= 0 on c with f = c ∩ u^⊥, if f is a face of c.
std::optional<Vec> is_face_of(const Cone& f, const Cone& c);

bool is_simplicial(const Cone& c);
/// Index of the ray lattice in the lattice points of its span. Throws NotSimplicial.
Int multiplicity(const Cone& c);
bool is_smooth(const Cone& c);

}  // namespace toric
