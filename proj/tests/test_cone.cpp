#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Cone cone2(std::initializer_list<std::initializer_list<long>> rays) { return Cone::from_rays(vs(rays), 2); }

const std::vector<Vec> quadric_rays = vs({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}});

}  // namespace

TEST_CASE("cone from rays") {
    Cone c = cone2({{1, 0}, {0, 1}, {1, 1}});
    CHECK(c.rays() == vs({{0, 1}, {1, 0}}));
    CHECK(c.facet_normals() == vs({{0, 1}, {1, 0}}));
    Cone a1 = cone2({{1, 0}, {1, 2}});
    CHECK(a1.facet_normals() == vs({{0, 1}, {2, -1}}));
    try {
        cone2({{1, 0}, {-1, 0}});
        FAIL("expected ContainsLine");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ContainsLine);
    }
    CHECK(Cone::from_rays(vs({{2, 4}}), 2).rays() == vs({{1, 2}}));
}

TEST_CASE("dual cones") {
    Cone orthant = cone2({{1, 0}, {0, 1}});
    CHECK(dual_cone(orthant) == orthant);
    CHECK(dual_cone(cone2({{1, 0}, {1, 2}})) == cone2({{0, 1}, {2, -1}}));
    GeneralCone z = dual(Cone::zero(2));
    CHECK(z.rays.empty());
    CHECK(z.lineality == vs({{1, 0}, {0, 1}}));
    CHECK(z.dim() == 2);
}

TEST_CASE("faces") {
    CHECK(faces(cone2({{1, 0}, {0, 1}})).size() == 4);
    auto fs = faces(Cone::from_rays(quadric_rays, 3));
    std::vector<int> counts(4, 0);
    for (const auto& f : fs) ++counts[f.dim];
    CHECK(counts == std::vector<int>{1, 4, 4, 1});
    CHECK(faces(Cone::zero(2)).size() == 1);
}

TEST_CASE("intersections and face tests") {
    Cone orthant = cone2({{1, 0}, {0, 1}});
    Cone a1 = cone2({{1, 0}, {1, 2}});
    CHECK(intersect(orthant, a1) == a1);
    CHECK(intersect(a1, a1) == a1);
    CHECK(intersect(cone2({{1, 0}}), cone2({{0, 1}})) == Cone::zero(2));
    auto w = is_face_of(cone2({{1, 0}}), orthant);
    REQUIRE(w);
    CHECK(*w == v({0, 1}));
    CHECK_FALSE(is_face_of(cone2({{1, 1}}), orthant));
    auto wz = is_face_of(Cone::zero(2), a1);
    REQUIRE(wz);
    for (const auto& r : a1.rays()) CHECK(dot(*wz, r) > 0);
}

TEST_CASE("simplicial, multiplicity, smooth") {
    Cone a1 = cone2({{1, 0}, {1, 2}});
    CHECK(is_simplicial(a1));
    CHECK(multiplicity(a1) == 2);
    CHECK_FALSE(is_smooth(a1));
    Cone orthant = cone2({{1, 0}, {0, 1}});
    CHECK(is_simplicial(orthant));
    CHECK(multiplicity(orthant) == 1);
    CHECK(is_smooth(orthant));
    CHECK_FALSE(is_simplicial(Cone::from_rays(quadric_rays, 3)));
}

TEST_CASE("double description agrees with brute-force facets [property]") {
    Rng rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t d = 1 + rng.index(4);
        auto rc = random_pointed_rays(rng, d, d + rng.index(4), 4, true);
        Cone c = Cone::from_rays(rc.rays, d);
        CHECK(c.facet_normals() == oracle::facets(rc.rays, d));
        for (const auto& r : c.rays()) {
            CHECK(gcd_of(r) == 1);
            CHECK(c.contains(r));
            CHECK_FALSE(c.contains(-r));
        }
        // Every input ray is a nonnegative combination: it satisfies all facets.
        for (const auto& r : rc.rays) CHECK(c.contains(r));
        // Extreme rays are exactly the rays of the H-description.
        CHECK(Cone::from_inequalities(c.facet_normals(), d) == c);
        for (int k = 0; k < 30; ++k) {
            Vec x = rng.vector(d, 6);
            CHECK(c.contains(x) == oracle::in_cone(oracle::facets(rc.rays, d), x));
        }
    }
}

TEST_CASE("duality is an involution [property]") {
    Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t d = 1 + rng.index(4);
        auto rc = random_pointed_rays(rng, d, 1 + rng.index(d + 2), 5, false);
        GeneralCone c = GeneralCone::from_generators(rc.rays, {}, d);
        CHECK(dual(dual(c)) == c);
    }
}

TEST_CASE("face lattice is closed and transitive [property]") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t d = 2 + rng.index(2);
        Cone c = random_full_cone(rng, d, d + 2, 3);
        auto fs = faces(c);
        std::vector<Cone> fcs;
        for (const auto& f : fs) fcs.push_back(face_cone(c, f));
        for (std::size_t i = 0; i < fs.size(); ++i) {
            CHECK(is_face_of(fcs[i], c));
            for (const auto& g : faces(fcs[i])) {
                Cone gc = face_cone(fcs[i], g);
                CHECK(std::find(fcs.begin(), fcs.end(), gc) != fcs.end());
            }
            for (std::size_t j = 0; j < fs.size(); ++j) CHECK(is_face_of(intersect(fcs[i], fcs[j]), fcs[i]));
        }
    }
}
