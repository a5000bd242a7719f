#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Cone cone(std::initializer_list<std::initializer_list<long>> rays, std::size_t rank) {
    return Cone::from_rays(vs(rays), rank);
}

AffineMonoid mon(std::initializer_list<std::initializer_list<long>> gens, std::size_t rank) {
    return AffineMonoid::from_generators(vs(gens), rank);
}

Fan p1() { return Fan::from_cones({cone({{1}}, 1), cone({{-1}}, 1)}, 1); }

}  // namespace

TEST_CASE("fans from cones") {
    Fan orthant = Fan::from_cones({cone({{1, 0}, {0, 1}}, 2)}, 2);
    CHECK(orthant.cones().size() == 4);
    CHECK(orthant.rays() == vs({{0, 1}, {1, 0}}));
    CHECK(orthant.cones().front() == Cone::zero(2));
    // Two quadrants sharing the ray e2: 1 + 3 + 2 cones.
    Fan two = Fan::from_cones({cone({{1, 0}, {0, 1}}, 2), cone({{0, 1}, {-1, 0}}, 2)}, 2);
    CHECK(two.cones().size() == 6);
    CHECK(two.rays().size() == 3);
    CHECK(two.maximal_cones().size() == 2);
    try {
        Fan::from_cones({cone({{1, 0}, {0, 1}}, 2), cone({{1, 2}, {-1, 0}}, 2)}, 2);
        FAIL("expected NotAFan");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAFan);
    }
    CHECK(fan_violation({cone({{1, 0}, {0, 1}}, 2), cone({{1, 2}, {-1, 0}}, 2)}) == std::make_pair(std::size_t{0}, std::size_t{1}));
    CHECK_FALSE(fan_violation({cone({{1, 0}, {0, 1}}, 2), cone({{0, 1}, {-1, 0}}, 2)}));
    CHECK(two.ray_index(v({-1, 0})) == std::size_t{0});
    CHECK_FALSE(two.ray_index(v({1, 1})));
    CHECK(two.in_support(v({-3, 5})));
    CHECK_FALSE(two.in_support(v({0, -1})));
    CHECK(orthant.is_smooth());
    CHECK_FALSE(Fan::from_cones({cone({{1, 0}, {1, 2}}, 2)}, 2).is_smooth());
}

TEST_CASE("fans to monoid collections") {
    auto c = fan_to_monoid_collection(p1());
    REQUIRE(c.monoids().size() == 3);
    CHECK(c.find(mon({{1}}, 1)));
    CHECK(c.find(mon({{-1}}, 1)));
    CHECK(c.find(mon({{1}, {-1}}, 1)));
    Fan orthant = Fan::from_cones({cone({{1, 0}, {0, 1}}, 2)}, 2);
    auto oc = fan_to_monoid_collection(orthant);
    CHECK(oc.monoids().size() == 4);
    CHECK(oc.find(mon({{1, 0}, {0, 1}}, 2)));
    CHECK(oc.face_relation().size() == 5);
    CHECK(monoid_collection_to_fan(oc) == orthant);
}

TEST_CASE("monoid collections to fans") {
    AffineMonoid n2 = mon({{1, 0}, {0, 1}}, 2);
    auto r = validate_collection({n2, localize(n2, v({1, 0})), localize(n2, v({0, 1})), localize(n2, v({1, 1}))});
    REQUIRE(r.collection);
    CHECK(monoid_collection_to_fan(*r.collection) == Fan::from_cones({cone({{1, 0}, {0, 1}}, 2)}, 2));

    AffineMonoid q = mon({{1, 0}, {1, 1}, {1, 2}}, 2);
    auto qr = validate_collection({q, localize(q, v({1, 0})), localize(q, v({1, 2})), localize(q, v({1, 1}))});
    REQUIRE(qr.collection);
    CHECK(monoid_collection_to_fan(*qr.collection) == Fan::from_cones({cone({{0, 1}, {2, -1}}, 2)}, 2));

    AffineMonoid cusp = mon({{2}, {3}}, 1);
    auto cr = validate_collection({cusp, localize(cusp, v({2}))});
    REQUIRE(cr.valid);
    CHECK_THROWS_AS(monoid_collection_to_fan(*cr.collection), Error);
    CHECK(normalization_fan(*cr.collection) == Fan::from_cones({cone({{1}}, 1)}, 1));
}

TEST_CASE("orbit posets") {
    auto p = orbit_poset(p1());
    CHECK(p.cones.size() == 3);
    CHECK(p.order.size() == 2);
    CHECK(p.covers.size() == 2);
    for (auto [i, j] : p.order) CHECK(p.cones[i] == Cone::zero(1));
    auto o = orbit_poset(Fan::from_cones({cone({{1, 0}, {0, 1}}, 2)}, 2));
    CHECK(o.cones.size() == 4);
    CHECK(o.order.size() == 5);
    CHECK(o.covers.size() == 4);
    auto q = orbit_poset(Fan::from_cones({cone({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}}, 3)}, 3));
    CHECK(q.cones.size() == 10);
    CHECK(q.monoids.size() == 10);
    // 4 rays and 4 2-faces over the apex, 8 ray-in-face incidences, each below the top.
    CHECK(q.covers.size() == 4 + 8 + 4);
}

TEST_CASE("random fans give valid collections and round-trip [property]") {
    Rng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        Fan f = random_fan(rng);
        auto ms = fan_monoids(f);
        CHECK(validate_collection(ms).valid);
        auto c = fan_to_monoid_collection(f);
        CHECK(c.monoids().size() == f.cones().size());
        CHECK(monoid_collection_to_fan(c) == f);
        for (const auto& sigma : f.cones())
            for (const auto& tau : f.cones()) CHECK(is_face_of(intersect(sigma, tau), sigma));
        for (const auto& sigma : f.maximal_cones()) {
            for (const auto& face : faces(sigma))
                CHECK(std::find(f.cones().begin(), f.cones().end(), face_cone(sigma, face)) != f.cones().end());
        }
        CHECK(std::is_sorted(f.rays().begin(), f.rays().end()));
    }
}

TEST_CASE("stellar subdivision refines and keeps the support [property]") {
    Rng rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        Fan f = random_fan(rng);
        const Cone& sigma = f.maximal_cones()[rng.index(f.maximal_cones().size())];
        Vec x = zero_vec(f.ambient_rank());
        for (const auto& r : sigma.rays()) x = x + Int(rng.uniform(0, 2)) * r;
        if (is_zero(x)) continue;
        x = primitive(x);
        Fan g = stellar_subdivision(f, x);
        CHECK(refines(g, f));
        CHECK(same_support_sampled(f, g));
        CHECK(g.ray_index(x));
        for (const auto& r : f.rays()) CHECK(g.ray_index(r));
    }
}

TEST_CASE("localization of cone monoids detects faces [property]") {
    Rng rng(53);
    for (int trial = 0; trial < 15; ++trial) {
        Fan f = random_fan(rng);
        auto ms = fan_monoids(f);
        for (std::size_t i = 0; i < f.cones().size(); ++i)
            for (std::size_t j = 0; j < f.cones().size(); ++j) {
                bool face = is_face_of(f.cones()[j], f.cones()[i]).has_value();
                CHECK(face == is_localization_of(ms[i], ms[j]).has_value());
            }
    }
}
