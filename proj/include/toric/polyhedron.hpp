#pragma once

// Full-dimensional pointed polyhedra in M_R with exact H- and V-representations,
// their faces, tangent cones and face monoids.

#include <cstddef>
#include <vector>

#include "toric/monoid.hpp"

namespace toric {

/// <normal, x> >= offset, with a primitive integer normal.
struct Halfspace {
    Vec normal;
    Rat offset;

    bool contains(const RatVec& x) const;
    bool tight_at(const RatVec& x) const;
    bool operator<(const Halfspace& other) const;
    bool operator==(const Halfspace& other) const = default;
};

struct PolyFace {
    std::vector<std::size_t> tight;     ///< indices of inequalities active on the whole face
    std::vector<std::size_t> vertices;  ///< indices into the parent's vertices
    std::vector<std::size_t> rays;      ///< indices into the parent's recession rays
    std::size_t dim = 0;
    RatVec sample;                      ///< relative-interior point
};

class Polyhedron {
public:
    /// Throws EmptyPolyhedron, NotFullDimensional, NotPointed.
    static Polyhedron from_inequalities(const std::vector<Halfspace>& halfspaces, std::size_t rank);
    static Polyhedron from_generators(const std::vector<RatVec>& vertices, const std::vector<Vec>& rays,
                                      std::size_t rank);

    std::size_t ambient_rank() const noexcept { return rank_; }
    /// Irredundant inequalities, sorted.
    const std::vector<Halfspace>& inequalities() const noexcept { return ineqs_; }
    const std::vector<RatVec>& vertices() const noexcept { return vertices_; }
    const std::vector<Vec>& rays() const noexcept { return rays_; }
    bool is_bounded() const noexcept { return rays_.empty(); }
    /// Homogenization {(x, t) : t >= 0, x in t·P}.
    const Cone& homogenization() const noexcept { return homog_; }

    /// Nonempty faces, sorted by dimension; the last one is P itself.
    const std::vector<PolyFace>& faces() const noexcept { return faces_; }
    bool contains(const RatVec& x) const;

    bool operator==(const Polyhedron& other) const { return rank_ == other.rank_ && ineqs_ == other.ineqs_; }

private:
    static Polyhedron from_cone(const GeneralCone& c, std::size_t rank);

    std::size_t rank_ = 0;
    std::vector<Halfspace> ineqs_;
    std::vector<RatVec> vertices_;
    std::vector<Vec> rays_;
    Cone homog_;
    std::vector<PolyFace> faces_;
};

/// Every k-face contains k+1 affinely independent lattice points.
bool is_lattice_polyhedron(const Polyhedron& p);

/// Directions w with x + εw in P for x in the relative interior of f.
GeneralCone tangent_cone(const Polyhedron& p, const PolyFace& f);
/// Tangent cone along f intersected with M.
AffineMonoid face_monoid(const Polyhedron& p, const PolyFace& f);
/// The cone of f in the normal fan: generated by the tight inequality normals.
Cone normal_cone(const Polyhedron& p, const PolyFace& f);

/// Face monoids of all faces, validated. Throws NotLatticePolyhedron.
MonoidCollection monoid_collection_of_polyhedron(const Polyhedron& p);

/// conv(a) + cone(S) for an ideal of a pointed monoid. Throws NotLatticePolyhedron.
Polyhedron newton_polyhedron(const MonoidIdeal& a);

/// P ∩ halfspace, required to be bounded and to keep all facet directions of P.
/// Throws NotTruncating.
Polyhedron truncate(const Polyhedron& p, const Halfspace& halfspace);

}  // namespace toric
