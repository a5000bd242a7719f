#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Matrix m(std::initializer_list<std::initializer_list<long>> rows, std::size_t cols) {
    return Matrix::from_rows(vs(rows), cols);
}

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long bound) {
    return Matrix::from_rows([&] {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < r; ++i) rows.push_back(rng.vector(c, bound));
        return rows;
    }(), c);
}

bool is_unimodular(const Matrix& a) {
    Int d = determinant(a);
    return d == 1 || d == -1;
}

bool same_row_lattice(const Matrix& a, const Matrix& b) {
    auto ba = lattice_basis(a.row_vectors(), a.cols());
    auto bb = lattice_basis(b.row_vectors(), b.cols());
    return ba == bb;
}

}  // namespace

TEST_CASE("smith normal form invariant factors") {
    CHECK(smith_normal_form(m({{1, 0}, {1, 2}}, 2)).invariant_factors == v({1, 2}));
    CHECK(smith_normal_form(Matrix::identity(3)).invariant_factors == v({1, 1, 1}));
    CHECK(smith_normal_form(m({{2, 0}, {0, 3}}, 2)).invariant_factors == v({1, 6}));
    auto z = smith_normal_form(m({{0, 0}, {0, 0}}, 2));
    CHECK(z.invariant_factors.empty());
    CHECK(z.zero_count == 2);
}

TEST_CASE("hermite normal form") {
    // [[2,4],[1,3]] has determinant 2; its Hermite form reduces the entry above the
    // second pivot into [0, 2).
    CHECK(hermite_normal_form(m({{2, 4}, {1, 3}}, 2)) == m({{1, 1}, {0, 2}}, 2));
    CHECK(hermite_normal_form(Matrix::identity(3)) == Matrix::identity(3));
    CHECK(hermite_normal_form(m({{0, 0}}, 2)) == m({{0, 0}}, 2));
}

TEST_CASE("primitive vectors") {
    CHECK(primitive(v({2, 4, 6})) == v({1, 2, 3}));
    CHECK(primitive(v({1, 0})) == v({1, 0}));
    CHECK(primitive(v({-3, 6})) == v({-1, 2}));
    CHECK_THROWS_AS(primitive(v({0, 0})), Error);
}

TEST_CASE("lattice index") {
    CHECK(lattice_index(m({{1, 0}, {1, 2}}, 2)) == 2);
    CHECK(lattice_index(m({{1, 0}, {0, 1}}, 2)) == 1);
    CHECK(lattice_index(m({{1, 0, 0}, {0, 2, 0}}, 3)) == 2);
    CHECK_THROWS_AS(lattice_index(m({{1, 1}, {2, 2}}, 2)), Error);
}

TEST_CASE("smith decomposition is a unimodular diagonalization [property]") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng.index(4), c = 1 + rng.index(4);
        Matrix a = random_matrix(rng, r, c, 6);
        auto s = smith_normal_form(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(s.d(i, j) == 0);
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        CHECK(s.rank() + s.zero_count == std::min(r, c));
        // Determinantal divisors give the same factors.
        CHECK(s.invariant_factors == oracle::invariant_factors(a.row_vectors()));
    }
}

TEST_CASE("hermite form is idempotent and preserves the row lattice [property]") {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng.index(4), c = 1 + rng.index(4);
        Matrix a = random_matrix(rng, r, c, 6);
        auto hd = hermite_decomposition(a);
        CHECK(hd.u * a == hd.h);
        CHECK(is_unimodular(hd.u));
        CHECK(hermite_normal_form(hd.h) == hd.h);
        CHECK(same_row_lattice(a, hd.h));
        CHECK(hd.rank() == oracle::rank(a.row_vectors(), c));
        for (std::size_t i = 0; i < hd.rank(); ++i) {
            const Int& p = hd.h(i, hd.pivots[i]);
            CHECK(p > 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(hd.h(k, hd.pivots[i]) >= 0);
                CHECK(hd.h(k, hd.pivots[i]) < p);
            }
        }
    }
}

TEST_CASE("lattice index is invariant under unimodular row operations [property]") {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t d = 2 + rng.index(3), r = 1 + rng.index(d);
        Matrix a = random_matrix(rng, r, d, 5);
        if (oracle::rank(a.row_vectors(), d) < r) continue;
        Int idx = lattice_index(a);
        CHECK(idx == oracle::minors_gcd(a.row_vectors(), r));
        Matrix b = a;
        std::size_t i = rng.index(r), j = rng.index(r);
        if (i != j) b.row(i) = b.row(i) + Int(rng.uniform(-3, 3)) * b.row(j);
        if (r > 1) std::swap(b.row(0), b.row(r - 1));
        b.row(0) = -b.row(0);
        CHECK(lattice_index(b) == idx);
    }
}

TEST_CASE("kernels, solving and saturation") {
    Matrix a = m({{1, 2, 3}, {2, 4, 6}}, 3);
    auto lk = left_kernel(a);
    REQUIRE(lk.size() == 1);
    CHECK(is_zero(mul(lk[0], a)));
    auto rk = right_kernel(a);
    CHECK(rk.size() == 2);
    for (const auto& x : rk) CHECK(dot(a.row(0), x) == 0);
    auto sol = solve_left(m({{1, 0}, {1, 2}}, 2), v({2, 2}));
    REQUIRE(sol);
    CHECK(mul(*sol, m({{1, 0}, {1, 2}}, 2)) == v({2, 2}));
    CHECK_FALSE(solve_left(m({{1, 0}, {1, 2}}, 2), v({1, 1})));
    CHECK(saturated_span(vs({{2, 2}}), 2) == vs({{1, 1}}));
    CHECK(orthogonal_complement(vs({{1, 1}}), 2).size() == 1);
    auto basis = lattice_basis(vs({{2, 0}, {0, 3}}), 2);
    CHECK(lattice_contains(basis, v({4, 3})));
    CHECK_FALSE(lattice_contains(basis, v({1, 0})));
    CHECK(reduce_mod_lattice(v({5, 7}), basis) == reduce_mod_lattice(v({1, 1}), basis));
}

TEST_CASE("unimodular and rational inverses [property]") {
    Rng rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t d = 1 + rng.index(4);
        Matrix a = random_matrix(rng, d, d, 5);
        auto s = smith_normal_form(a);
        Matrix vi = unimodular_inverse(s.v);
        CHECK(s.v * vi == Matrix::identity(d));
        CHECK(determinant(a) == oracle::det(a.row_vectors()));
    }
}
