#include "toric/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace toric {

std::string_view error_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DependentRows: return "DependentRows";
    case ErrorKind::ContainsLine: return "ContainsLine";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::NotInMonoid: return "NotInMonoid";
    case ErrorKind::NotSaturated: return "NotSaturated";
    case ErrorKind::EmptyPolyhedron: return "EmptyPolyhedron";
    case ErrorKind::NotLatticePolyhedron: return "NotLatticePolyhedron";
    case ErrorKind::NotTruncating: return "NotTruncating";
    case ErrorKind::NotAFan: return "NotAFan";
    case ErrorKind::NotAFacet: return "NotAFacet";
    case ErrorKind::NoRays: return "NoRays";
    case ErrorKind::InconsistentOrder: return "InconsistentOrder";
    case ErrorKind::CriterionMismatch: return "CriterionMismatch";
    case ErrorKind::NotIntegrallyClosed: return "NotIntegrallyClosed";
    case ErrorKind::AlreadySaturated: return "AlreadySaturated";
    case ErrorKind::PairSearchFailed: return "PairSearchFailed";
    case ErrorKind::NotInSupport: return "NotInSupport";
    case ErrorKind::FiniteOrderClass: return "FiniteOrderClass";
    case ErrorKind::StepLimitExceeded: return "StepLimitExceeded";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows, Vec(cols)), cols_(cols) {
    for (auto& r : rows_)
        for (auto& e : r) e = 0;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m;
    m.cols_ = cols;
    m.rows_ = rows;
    for (const auto& r : m.rows_)
        if (r.size() != cols)
            throw Error(ErrorKind::InvalidInput, "row length " + std::to_string(r.size()) +
                                                     " does not match column count " +
                                                     std::to_string(cols));
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec c(rows());
    for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
    return c;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
    return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows())
        throw Error(ErrorKind::InvalidInput, "matrix shape mismatch in product");
    Matrix p(rows(), other.cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (rows_[i][k] == 0) continue;
            for (std::size_t j = 0; j < other.cols(); ++j) p(i, j) += rows_[i][k] * other(k, j);
        }
    return p;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows(); ++i) os << (i ? "," : "") << toric::to_string(rows_[i]);
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// vectors

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec operator*(const Int& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Vec zero_vec(std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = 0;
    return v;
}

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v = zero_vec(n);
    v[i] = 1;
    return v;
}

Vec mul(const Vec& x, const Matrix& a) {
    Vec r = zero_vec(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) r[j] += x[i] * a(i, j);
    }
    return r;
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].get_str();
    }
    return s + ")";
}

Int gcd_of(const Vec& v) {
    Int g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Vec primitive(const Vec& v) {
    Int g = gcd_of(v);
    if (g == 0) throw Error(ErrorKind::ZeroVector, "primitive of the zero vector");
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

Vec primitive(const RatVec& v) {
    Int den = 1;
    for (const auto& x : v) den = lcm(den, Int(x.get_den()));
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * den;
        r[i] = s.get_num();
    }
    return primitive(r);
}

RatVec to_rat(const Vec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void row_axpy(Vec& dst, const Int& q, const Vec& src) {
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

void negate(Vec& v) {
    for (auto& x : v) x = -x;
}

}  // namespace

// ---------------------------------------------------------------------------
// Hermite

HermiteDecomposition hermite_decomposition(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    HermiteDecomposition out;
    out.h = a;
    out.u = Matrix::identity(m);
    Matrix& h = out.h;
    Matrix& u = out.u;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        bool have_pivot = false;
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (h(i, c) == 0) continue;
                if (best == m || abs(h(i, c)) < abs(h(best, c))) best = i;
            }
            if (best == m) break;
            have_pivot = true;
            std::swap(h.row(r), h.row(best));
            std::swap(u.row(r), u.row(best));
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h(i, c) == 0) continue;
                Int q = floor_div(h(i, c), h(r, c));
                row_axpy(h.row(i), q, h.row(r));
                row_axpy(u.row(i), q, u.row(r));
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!have_pivot) continue;
        if (h(r, c) < 0) {
            negate(h.row(r));
            negate(u.row(r));
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h(i, c), h(r, c));
            if (q == 0) continue;
            row_axpy(h.row(i), q, h.row(r));
            row_axpy(u.row(i), q, u.row(r));
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

Matrix hermite_normal_form(const Matrix& a) { return hermite_decomposition(a).h; }

std::vector<Vec> lattice_basis(const std::vector<Vec>& generators, std::size_t cols) {
    if (generators.empty()) return {};
    auto hd = hermite_decomposition(Matrix::from_rows(generators, cols));
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < hd.rank(); ++i) basis.push_back(hd.h.row(i));
    return basis;
}

std::size_t rank_of(const std::vector<Vec>& rows, std::size_t cols) {
    if (rows.empty()) return 0;
    return hermite_decomposition(Matrix::from_rows(rows, cols)).rank();
}

// ---------------------------------------------------------------------------
// Smith

SmithDecomposition smith_normal_form(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m == 0 || n == 0) throw Error(ErrorKind::InvalidInput, "Smith normal form of an empty matrix");
    SmithDecomposition out;
    out.d = a;
    out.u = Matrix::identity(m);
    out.v = Matrix::identity(n);
    Matrix& d = out.d;
    Matrix& u = out.u;
    Matrix& v = out.v;

    auto swap_cols = [&](Matrix& x, std::size_t j1, std::size_t j2) {
        for (std::size_t i = 0; i < x.rows(); ++i) std::swap(x(i, j1), x(i, j2));
    };
    auto col_axpy = [&](Matrix& x, std::size_t dst, const Int& q, std::size_t src) {
        for (std::size_t i = 0; i < x.rows(); ++i) x(i, dst) -= q * x(i, src);
    };

    const std::size_t steps = std::min(m, n);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        std::size_t bi = m, bj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (d(i, j) == 0) continue;
                if (bi == m || abs(d(i, j)) < abs(d(bi, bj))) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi == m) break;
        while (true) {
            std::swap(d.row(t), d.row(bi));
            std::swap(u.row(t), u.row(bi));
            swap_cols(d, t, bj);
            swap_cols(v, t, bj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                Int q = floor_div(d(i, t), d(t, t));
                row_axpy(d.row(i), q, d.row(t));
                row_axpy(u.row(i), q, u.row(t));
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                Int q = floor_div(d(t, j), d(t, t));
                col_axpy(d, j, q, t);
                col_axpy(v, j, q, t);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) {
                // Re-pivot on the smallest entry left in row t / column t.
                bi = t;
                bj = t;
                for (std::size_t i = t; i < m; ++i)
                    if (d(i, t) != 0 && (d(bi, bj) == 0 || abs(d(i, t)) < abs(d(bi, bj)))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t; j < n; ++j)
                    if (d(t, j) != 0 && (d(bi, bj) == 0 || abs(d(t, j)) < abs(d(bi, bj)))) {
                        bi = t;
                        bj = j;
                    }
                continue;
            }
            // Divisibility: fold a bad row into row t and redo.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            for (std::size_t j = 0; j < n; ++j) d(t, j) += d(bad, j);
            for (std::size_t j = 0; j < m; ++j) u(t, j) += u(bad, j);
            bi = t;
            bj = t;
        }
        if (d(t, t) < 0) {
            negate(d.row(t));
            negate(u.row(t));
        }
        out.invariant_factors.push_back(d(t, t));
    }
    out.zero_count = steps - out.invariant_factors.size();
    return out;
}

// ---------------------------------------------------------------------------
// determinants, kernels, solving

Int determinant(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
    if (n == 0) return 1;
    Matrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            std::swap(m.row(k), m.row(p));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Int lattice_index(const Matrix& b) {
    if (b.rows() == 0) return 1;
    auto snf = smith_normal_form(b);
    if (snf.rank() < b.rows()) throw Error(ErrorKind::DependentRows, "rows " + b.to_string() + " are dependent");
    Int p = 1;
    for (const auto& f : snf.invariant_factors) p *= f;
    return p;
}

std::vector<Vec> left_kernel(const Matrix& a) {
    if (a.rows() == 0) return {};
    if (a.cols() == 0) {
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < a.rows(); ++i) basis.push_back(unit_vec(a.rows(), i));
        return basis;
    }
    auto hd = hermite_decomposition(a);
    std::vector<Vec> basis;
    for (std::size_t i = hd.rank(); i < a.rows(); ++i) basis.push_back(hd.u.row(i));
    return lattice_basis(basis, a.rows());
}

std::vector<Vec> right_kernel(const Matrix& a) {
    if (a.rows() == 0) {
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < a.cols(); ++i) basis.push_back(unit_vec(a.cols(), i));
        return basis;
    }
    return left_kernel(a.transposed());
}

std::optional<Vec> solve_left(const Matrix& a, const Vec& t) {
    if (a.rows() == 0) {
        if (is_zero(t)) return Vec{};
        return std::nullopt;
    }
    auto hd = hermite_decomposition(a);
    Vec residual = t;
    Vec y = zero_vec(a.rows());
    for (std::size_t k = 0; k < hd.rank(); ++k) {
        const std::size_t p = hd.pivots[k];
        const Int& piv = hd.h(k, p);
        if (residual[p] % piv != 0) return std::nullopt;
        y[k] = residual[p] / piv;
        row_axpy(residual, y[k], hd.h.row(k));
    }
    if (!is_zero(residual)) return std::nullopt;
    return mul(y, hd.u);
}

std::optional<RatVec> solve_left_rational(const Matrix& a, const RatVec& t) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    // n equations in m unknowns: sum_i a(i,j) x_i = t_j.
    std::vector<RatVec> aug(n, RatVec(m + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) aug[j][i] = a(i, j);
        aug[j][m] = t[j];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t p = r;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(aug[r], aug[p]);
        Rat inv = 1 / aug[r][c];
        for (auto& x : aug[r]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (std::size_t j = 0; j <= m; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (aug[i][m] != 0) return std::nullopt;
    RatVec x(m);
    for (auto& e : x) e = 0;
    for (std::size_t k = 0; k < r; ++k) x[pivot_col[k]] = aug[k][m];
    return x;
}

std::vector<Vec> orthogonal_complement(const std::vector<Vec>& rows, std::size_t d) {
    std::vector<Vec> nonzero;
    for (const auto& r : rows)
        if (!is_zero(r)) nonzero.push_back(r);
    if (nonzero.empty()) {
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < d; ++i) basis.push_back(unit_vec(d, i));
        return basis;
    }
    return right_kernel(Matrix::from_rows(nonzero, d));
}

std::vector<Vec> saturated_span(const std::vector<Vec>& rows, std::size_t d) {
    return orthogonal_complement(orthogonal_complement(rows, d), d);
}

namespace {
std::size_t leading_index(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}
}  // namespace

Vec reduce_mod_lattice(const Vec& x, const std::vector<Vec>& hermite_basis) {
    Vec r = x;
    for (const auto& b : hermite_basis) {
        const std::size_t p = leading_index(b);
        Int q = floor_div(r[p], b[p]);
        if (q != 0) row_axpy(r, q, b);
    }
    return r;
}

bool lattice_contains(const std::vector<Vec>& hermite_basis, const Vec& x) {
    return is_zero(reduce_mod_lattice(x, hermite_basis));
}

std::vector<RatVec> rational_inverse(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw Error(ErrorKind::InvalidInput, "inverse of a non-square matrix");
    std::vector<RatVec> aug(n, RatVec(2 * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            aug[i][j] = a(i, j);
            aug[i][n + j] = (i == j) ? 1 : 0;
        }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) throw Error(ErrorKind::DependentRows, "singular matrix " + a.to_string());
        std::swap(aug[c], aug[p]);
        Rat inv = 1 / aug[c][c];
        for (auto& x : aug[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    std::vector<RatVec> inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Matrix unimodular_inverse(const Matrix& a) {
    auto inv = rational_inverse(a);
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (inv[i][j].get_den() != 1) throw Error(ErrorKind::InvalidInput, "matrix is not unimodular");
            r(i, j) = inv[i][j].get_num();
        }
    return r;
}

}  // namespace toric
