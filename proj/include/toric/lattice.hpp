#pragma once

// Exact integer linear algebra over Z^d: Hermite and Smith normal forms,
// kernels, integer solves, and sublattice bookkeeping.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "toric/error.hpp"

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

/// Element of N or M. The ambient rank is the length.
using Vec = std::vector<Int>;
using RatVec = std::vector<Rat>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_.empty() || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    const Vec& row(std::size_t i) const { return rows_[i]; }
    Vec& row(std::size_t i) { return rows_[i]; }
    const std::vector<Vec>& row_vectors() const noexcept { return rows_; }
    Vec column(std::size_t j) const;

    Matrix transposed() const;
    Matrix operator*(const Matrix& other) const;
    bool operator==(const Matrix& other) const = default;

    std::string to_string() const;

private:
    std::vector<Vec> rows_;
    std::size_t cols_ = 0;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Int& s, const Vec& a);
Int dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
/// Row vector times matrix.
Vec mul(const Vec& x, const Matrix& a);
std::string to_string(const Vec& v);

Int gcd_of(const Vec& v);
Int lcm(const Int& a, const Int& b);

/// v divided by the gcd of its entries.
Vec primitive(const Vec& v);
/// Scale a nonzero rational vector to the primitive integer vector with the same direction.
Vec primitive(const RatVec& v);

struct SmithDecomposition {
    Matrix u;  ///< unimodular, rows x rows
    Matrix d;  ///< diagonal, same shape as the input
    Matrix v;  ///< unimodular, cols x cols
    /// Nonzero diagonal entries, each dividing the next.
    std::vector<Int> invariant_factors;
    /// Number of zero diagonal entries, min(rows, cols) - rank.
    std::size_t zero_count = 0;

    std::size_t rank() const noexcept { return invariant_factors.size(); }
};

/// U * A * V = D. Pivot: smallest nonzero absolute value, ties by lowest row then column.
SmithDecomposition smith_normal_form(const Matrix& a);

struct HermiteDecomposition {
    Matrix h;                          ///< row Hermite form, zero rows at the bottom
    Matrix u;                          ///< unimodular with U * A = H
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

HermiteDecomposition hermite_decomposition(const Matrix& a);
Matrix hermite_normal_form(const Matrix& a);

/// Nonzero rows of the Hermite form: the canonical basis of the row lattice.
std::vector<Vec> lattice_basis(const std::vector<Vec>& generators, std::size_t cols);

std::size_t rank_of(const std::vector<Vec>& rows, std::size_t cols);

/// Absolute index of the row lattice inside its rational saturation.
/// Throws DependentRows when rows are linearly dependent.
Int lattice_index(const Matrix& b);

Int determinant(const Matrix& a);

/// Basis of {x in Z^rows : x * A = 0}.
std::vector<Vec> left_kernel(const Matrix& a);
/// Basis of {x in Z^cols : A * x = 0}, Hermite-reduced.
std::vector<Vec> right_kernel(const Matrix& a);

/// Integer x with x * A = t, if one exists.
std::optional<Vec> solve_left(const Matrix& a, const Vec& t);
/// Rational x with x * A = t, if one exists (A need not have independent rows; a particular solution).
std::optional<RatVec> solve_left_rational(const Matrix& a, const RatVec& t);

/// Hermite basis of Z^d ∩ (span of rows)^⊥.
std::vector<Vec> orthogonal_complement(const std::vector<Vec>& rows, std::size_t d);
/// Hermite basis of Z^d ∩ span(rows).
std::vector<Vec> saturated_span(const std::vector<Vec>& rows, std::size_t d);

/// Membership of x in the lattice spanned by a Hermite basis.
bool lattice_contains(const std::vector<Vec>& hermite_basis, const Vec& x);
/// Canonical representative of x modulo the lattice of a Hermite basis.
Vec reduce_mod_lattice(const Vec& x, const std::vector<Vec>& hermite_basis);

/// Inverse of a square nonsingular integer matrix, over Q (row-major).
std::vector<RatVec> rational_inverse(const Matrix& a);
/// Inverse of a unimodular matrix.
Matrix unimodular_inverse(const Matrix& a);

RatVec to_rat(const Vec& v);

}  // namespace toric
