#pragma once

// Shared helpers for the unit and acceptance tests: literals and random instances.

#include <algorithm>
#include <initializer_list>
#include <random>
#include <vector>

#include "toric/blowup.hpp"

namespace testing {

using namespace toric;

inline Vec v(std::initializer_list<long> xs) {
    Vec out;
    for (long x : xs) out.push_back(Int(x));
    return out;
}

inline std::vector<Vec> vs(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vec> out;
    for (auto r : rows) out.push_back(v(r));
    return out;
}

inline std::vector<Vec> identity_rows(std::size_t d) { return Matrix::identity(d).row_vectors(); }

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }
    Vec vector(std::size_t d, long bound) {
        Vec out;
        for (std::size_t i = 0; i < d; ++i) out.push_back(Int(uniform(-bound, bound)));
        return out;
    }
    Vec nonzero_vector(std::size_t d, long bound) {
        while (true) {
            Vec x = vector(d, bound);
            if (!is_zero(x)) return x;
        }
    }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// Rays strictly positive on a random functional, so the cone is strongly convex.
struct RandomCone {
    std::vector<Vec> rays;
    Vec positive;  ///< functional positive on every ray
};

inline RandomCone random_pointed_rays(Rng& rng, std::size_t d, std::size_t count, long bound, bool full_dim) {
    if (full_dim) count = std::max(count, d);
    while (true) {
        RandomCone c;
        c.positive = rng.nonzero_vector(d, 3);
        while (c.rays.size() < count) {
            Vec r = rng.nonzero_vector(d, bound);
            if (dot(r, c.positive) > 0) c.rays.push_back(r);
        }
        if (!full_dim || rank_of(c.rays, d) == d) return c;
    }
}

inline Cone random_full_cone(Rng& rng, std::size_t d, std::size_t max_rays, long bound) {
    std::size_t n = d + rng.index(std::max<std::size_t>(max_rays, d) - d + 1);
    return Cone::from_rays(random_pointed_rays(rng, d, n, bound, true).rays, d);
}

inline Cone random_simplicial_cone(Rng& rng, std::size_t d, long bound) {
    return Cone::from_rays(random_pointed_rays(rng, d, d, bound, true).rays, d);
}

/// Normal fan of the convex hull of a few random lattice points.
inline Fan random_polytope_fan(Rng& rng, std::size_t d, std::size_t points, long bound) {
    while (true) {
        std::vector<RatVec> pts;
        for (std::size_t i = 0; i < points; ++i) pts.push_back(to_rat(rng.vector(d, bound)));
        try {
            Polyhedron p = Polyhedron::from_generators(pts, {}, d);
            std::vector<Cone> cones;
            for (const auto& f : p.faces())
                if (f.dim == 0) cones.push_back(normal_cone(p, f));
            return Fan::from_cones(cones, d);
        } catch (const Error&) {
        }
    }
}

/// A mix of single cones, normal fans, their stellar subdivisions and subfans.
inline Fan random_fan(Rng& rng, std::size_t max_rank = 3) {
    std::size_t d = 1 + rng.index(max_rank);
    Fan f;
    switch (rng.index(3)) {
    case 0: f = Fan::from_cones({random_full_cone(rng, d, d + 1, 3)}, d); break;
    case 1: f = random_polytope_fan(rng, d, d + 2, 2); break;
    default: f = random_polytope_fan(rng, d, d + 3, 3); break;
    }
    std::size_t subdivisions = rng.index(3);
    for (std::size_t k = 0; k < subdivisions; ++k) {
        const Cone& sigma = f.maximal_cones()[rng.index(f.maximal_cones().size())];
        if (sigma.rays().size() < 2) break;
        Vec x = sigma.rays()[rng.index(sigma.rays().size())] + sigma.rays()[rng.index(sigma.rays().size())];
        f = stellar_subdivision(f, primitive(x));
    }
    if (f.maximal_cones().size() > 2 && rng.index(2) == 0) {
        std::vector<Cone> keep = f.maximal_cones();
        keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(rng.index(keep.size())));
        f = Fan::from_cones(keep, d);
    }
    return f;
}

}  // namespace testing
