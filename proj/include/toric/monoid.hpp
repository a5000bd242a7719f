#pragma once

// Affine monoids in M: Hilbert bases, saturation, localization, monoid ideals and
// validation of monoid collections.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

struct HilbertBasis {
    std::vector<Vec> elements;  ///< minimal generators modulo units, canonical representatives
    std::vector<Vec> units;     ///< Hermite basis of the unit group
};

/// Minimal generators of cone ∩ L where L is the lattice generated by `lattice`.
/// The cone must lie in the rational span of L.
HilbertBasis hilbert_basis(const GeneralCone& cone, const std::vector<Vec>& lattice);
/// Hilbert basis of a strongly convex cone with respect to Z^d.
std::vector<Vec> hilbert_basis(const Cone& cone);

class AffineMonoid {
public:
    static AffineMonoid from_generators(const std::vector<Vec>& generators, std::size_t rank);
    /// cone ∩ lattice, known to be saturated.
    static AffineMonoid saturated(const GeneralCone& cone, const std::vector<Vec>& lattice);

    std::size_t ambient_rank() const noexcept { return rank_; }
    const std::vector<Vec>& generators() const noexcept { return generators_; }
    /// Hermite basis of Z·S.
    const std::vector<Vec>& group() const noexcept { return group_; }
    const GeneralCone& cone() const noexcept { return cone_; }
    /// Hermite basis of the unit group S ∩ −S.
    const std::vector<Vec>& units() const noexcept { return units_; }
    /// Minimal generators modulo units.
    const std::vector<Vec>& minimal_generators() const noexcept { return minimal_; }
    /// Minimal generating set: minimal generators together with ± the unit basis.
    std::vector<Vec> hilbert_basis() const;
    bool is_saturated() const noexcept { return saturated_; }
    /// A functional positive on S outside its units.
    const Vec& grading() const noexcept { return grading_; }
    bool generates_ambient_lattice() const;

    bool contains(const Vec& u) const;
    bool same_as(const AffineMonoid& other) const;

    std::string to_string() const;

private:
    friend AffineMonoid saturate(const AffineMonoid& s);

    std::size_t rank_ = 0;
    std::vector<Vec> generators_;
    std::vector<Vec> group_;
    GeneralCone cone_;
    std::vector<Vec> units_;
    std::vector<Vec> minimal_;
    Vec grading_;
    bool saturated_ = false;
    HilbertBasis saturation_;
};

/// σ∨ ∩ M.
AffineMonoid monoid_of_cone(const Cone& sigma);
/// cone(S) ∩ Z·S.
AffineMonoid saturate(const AffineMonoid& s);
bool membership(const AffineMonoid& s, const Vec& u);
/// S + N·(−u). Throws NotInMonoid when u is not in S.
AffineMonoid localize(const AffineMonoid& s, const Vec& u);
/// u in S with T = S + N·(−u), if T is a localization of S.
std::optional<Vec> is_localization_of(const AffineMonoid& s, const AffineMonoid& t);

/// Ideal a = ∪ (g + S) of a monoid, stored by minimal generators modulo units.
class MonoidIdeal {
public:
    MonoidIdeal(std::shared_ptr<const AffineMonoid> monoid, const std::vector<Vec>& generators);
    MonoidIdeal(const AffineMonoid& monoid, const std::vector<Vec>& generators)
        : MonoidIdeal(std::make_shared<const AffineMonoid>(monoid), generators) {}

    const AffineMonoid& monoid() const noexcept { return *monoid_; }
    std::shared_ptr<const AffineMonoid> monoid_ptr() const noexcept { return monoid_; }
    const std::vector<Vec>& generators() const noexcept { return generators_; }
    bool empty() const noexcept { return generators_.empty(); }
    bool contains(const Vec& x) const;
    bool same_as(const MonoidIdeal& other) const;

private:
    std::shared_ptr<const AffineMonoid> monoid_;
    std::vector<Vec> generators_;
};

/// Collection of monoids that passed validate_collection.
class MonoidCollection {
public:
    std::size_t ambient_rank() const noexcept { return rank_; }
    const std::vector<AffineMonoid>& monoids() const noexcept { return monoids_; }
    /// (i, j) -> u with monoids[j] = monoids[i] + N·(−u).
    const std::map<std::pair<std::size_t, std::size_t>, Vec>& face_relation() const noexcept { return relation_; }
    /// Index of a monoid equal to s, if present.
    std::optional<std::size_t> find(const AffineMonoid& s) const;

private:
    friend struct CollectionBuilder;
    std::size_t rank_ = 0;
    std::vector<AffineMonoid> monoids_;
    std::map<std::pair<std::size_t, std::size_t>, Vec> relation_;
};

struct Violation {
    enum class Kind { GroupNotFull, NotClosedUnderLocalization, SumNotLocalization };
    Kind kind;
    std::size_t first = 0;
    std::size_t second = 0;
    Vec element;  ///< localization element, when relevant
    std::string message;
};

std::string_view violation_name(Violation::Kind kind);

struct ValidationReport {
    bool valid = false;
    std::vector<Violation> violations;
    std::optional<MonoidCollection> collection;
};

/// Checks: each monoid generates M; closure under localization (one per face);
/// pairwise sums are localizations of each summand. Duplicates are merged first.
ValidationReport validate_collection(const std::vector<AffineMonoid>& monoids);

struct PrimePair {
    Face face;                            ///< face of cone(S)
    std::vector<Vec> face_generators;     ///< Hilbert basis elements of S on the face
    std::vector<Vec> ideal_generators;    ///< Hilbert basis elements off the face
};

/// Faces of cone(S) with their complementary prime ideals. Throws NotSaturated.
std::vector<PrimePair> faces_primes(const AffineMonoid& s);

}  // namespace toric
