#include "toric/divisor.hpp"

#include <algorithm>

namespace toric {

namespace {

// Columns are the rays of sigma, so x * A = (<x, v_i>)_i.
Matrix ray_columns(const Cone& sigma) {
    return Matrix::from_rows(sigma.rays(), sigma.ambient_rank()).transposed();
}

Vec restrict_to(const Fan& f, const Cone& sigma, const Vec& a) {
    Vec out;
    for (const auto& r : sigma.rays()) {
        auto i = f.ray_index(r);
        if (!i) throw Error(ErrorKind::InvalidInput, "cone ray " + to_string(r) + " is not a ray of the fan");
        out.push_back(a[*i]);
    }
    return out;
}

Int floor_mod(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Hermite basis of L ∩ span(gens) for L given by a Hermite basis.
std::vector<Vec> lattice_meet_span(const std::vector<Vec>& lattice, const std::vector<Vec>& gens, std::size_t d) {
    std::vector<Vec> eqs = orthogonal_complement(gens, d);
    if (eqs.empty()) return lattice;
    Matrix g = Matrix::from_rows(lattice, d);
    Matrix m = g * Matrix::from_rows(eqs, d).transposed();
    std::vector<Vec> out;
    for (const auto& y : left_kernel(m)) out.push_back(mul(y, g));
    return lattice_basis(out, d);
}

}  // namespace

TorusDivisor TorusDivisor::on(const Fan& f, Vec coefficients) {
    if (coefficients.size() != f.rays().size())
        throw Error(ErrorKind::InvalidInput, "divisor has " + std::to_string(coefficients.size()) +
                                                 " coefficients but the fan has " + std::to_string(f.rays().size()) +
                                                 " rays");
    return TorusDivisor{std::move(coefficients)};
}

TorusDivisor TorusDivisor::ray(const Fan& f, std::size_t i) { return on(f, unit_vec(f.rays().size(), i)); }

CartierResult is_cartier(const Fan& f, const TorusDivisor& d) {
    CartierResult out;
    out.cartier = true;
    for (const auto& sigma : f.maximal_cones()) {
        if (sigma.dim() == 0) {
            out.witnesses.push_back(zero_vec(f.ambient_rank()));
            continue;
        }
        Vec target = -restrict_to(f, sigma, d.coefficients);
        auto u = solve_left(ray_columns(sigma), target);
        out.cartier = out.cartier && u.has_value();
        out.witnesses.push_back(std::move(u));
    }
    return out;
}

ClassGroup ClassGroup::from_lattice(std::vector<Vec> lattice, std::size_t r) {
    ClassGroup g;
    g.r_ = r;
    g.cartier_ = lattice_basis(lattice, r);
    if (g.cartier_.empty()) {
        g.v_ = Matrix::identity(r);
        g.free_rank_ = r;
        return g;
    }
    auto snf = smith_normal_form(Matrix::from_rows(g.cartier_, r));
    g.v_ = snf.v;
    g.factors_ = snf.invariant_factors;
    for (const auto& x : g.factors_)
        if (x > 1) g.torsion_.push_back(x);
    g.free_rank_ = r - g.factors_.size();
    return g;
}

ClassGroup ClassGroup::of(const Fan& f) {
    const std::size_t r = f.rays().size();
    if (r == 0) throw Error(ErrorKind::NoRays, "fan has no rays");
    const std::size_t d = f.ambient_rank();
    const auto& maxes = f.maximal_cones();
    const std::size_t unknowns = r + maxes.size() * d;

    // a_i + <u_σ, v_i> = 0 for every ray i of every maximal cone σ; one column per equation.
    std::vector<Vec> columns;
    for (std::size_t s = 0; s < maxes.size(); ++s)
        for (const auto& v : maxes[s].rays()) {
            Vec col = zero_vec(unknowns);
            col[*f.ray_index(v)] = 1;
            for (std::size_t j = 0; j < d; ++j) col[r + s * d + j] = v[j];
            columns.push_back(std::move(col));
        }
    std::vector<Vec> lattice;
    if (columns.empty()) {
        for (std::size_t i = 0; i < r; ++i) lattice.push_back(unit_vec(r, i));
    } else {
        Matrix system = Matrix::from_rows(columns, unknowns).transposed();
        for (const auto& x : left_kernel(system)) lattice.emplace_back(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(r));
    }
    return from_lattice(std::move(lattice), r);
}

ClassGroup ClassGroup::of_cone(const Cone& sigma) {
    const std::size_t k = sigma.rays().size();
    if (k == 0) throw Error(ErrorKind::NoRays, "cone has no rays");
    return from_lattice(ray_columns(sigma).row_vectors(), k);
}

Vec ClassGroup::image(const Vec& a) const {
    if (a.size() != r_) throw Error(ErrorKind::InvalidInput, "divisor length does not match the ray count");
    Vec y = mul(a, v_);
    for (std::size_t j = 0; j < factors_.size(); ++j) y[j] = floor_mod(y[j], factors_[j]);
    return y;
}

bool ClassGroup::is_zero_class(const Vec& a) const { return is_zero(image(a)); }

std::optional<Int> ClassGroup::order(const Vec& a) const {
    Vec y = image(a);
    for (std::size_t j = factors_.size(); j < r_; ++j)
        if (y[j] != 0) return std::nullopt;
    Int ord = 1;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        Int g;
        mpz_gcd(g.get_mpz_t(), factors_[j].get_mpz_t(), y[j].get_mpz_t());
        ord = lcm(ord, factors_[j] / g);
    }
    return ord;
}

std::optional<Int> local_class_order(const Fan& f, const Cone& sigma, const TorusDivisor& d) {
    if (sigma.dim() == 0) return Int(1);
    return ClassGroup::of_cone(sigma).order(restrict_to(f, sigma, d.coefficients));
}

std::optional<Int> divisor_class_order(const Fan& f, const TorusDivisor& d) {
    auto global = ClassGroup::of(f).order(d.coefficients);
    std::optional<Int> local = Int(1);
    for (const auto& sigma : f.maximal_cones()) {
        auto o = local_class_order(f, sigma, d);
        if (!o) {
            local.reset();
            break;
        }
        local = lcm(*local, *o);
    }
    if (global != local) {
        auto show = [](const std::optional<Int>& x) { return x ? x->get_str() : std::string("infinite"); };
        throw Error(ErrorKind::InconsistentOrder, "class group order " + show(global) + " but lcm of local orders " +
                                                      show(local) + " for " + to_string(d.coefficients));
    }
    return global;
}

SimplicialSmoothReport simplicial_smooth_report(const Fan& f) {
    SimplicialSmoothReport rep;
    rep.group = ClassGroup::of(f);
    rep.simplicial = true;
    rep.smooth = true;
    for (const auto& sigma : f.maximal_cones()) {
        ConeReport c{sigma, is_simplicial(sigma), std::nullopt, false};
        if (c.simplicial) {
            c.multiplicity = multiplicity(sigma);
            c.smooth = *c.multiplicity == 1;
        }
        rep.simplicial = rep.simplicial && c.simplicial;
        rep.smooth = rep.smooth && c.smooth;
        rep.cones.push_back(std::move(c));
    }
    if (rep.simplicial != rep.group.is_finite())
        throw Error(ErrorKind::CriterionMismatch, std::string("fan is ") + (rep.simplicial ? "" : "not ") +
                                                      "simplicial but the class group has free rank " +
                                                      std::to_string(rep.group.rank()));
    if (rep.smooth != rep.group.is_trivial())
        throw Error(ErrorKind::CriterionMismatch,
                    std::string("fan is ") + (rep.smooth ? "" : "not ") + "smooth but the class group is " +
                        (rep.group.is_trivial() ? "trivial" : "nontrivial"));
    return rep;
}

std::size_t facet_index(const AffineMonoid& s, const Vec& n) {
    const GeneralCone& c = s.cone();
    if (n.size() != c.rank) throw Error(ErrorKind::InvalidInput, "facet normal of wrong rank");
    for (const auto& l : c.lineality)
        if (dot(n, l) != 0) throw Error(ErrorKind::NotAFacet, to_string(n) + " does not vanish on the units");
    for (std::size_t t = 0; t < c.facets.size(); ++t) {
        bool match = true;
        for (const auto& r : c.rays) {
            Int nv = dot(n, r);
            bool tight = dot(c.facets[t], r) == 0;
            if (tight ? nv != 0 : nv <= 0) {
                match = false;
                break;
            }
        }
        if (match && !c.rays.empty()) return t;
    }
    throw Error(ErrorKind::NotAFacet, to_string(n) + " does not define a facet of " + s.to_string());
}

std::pair<Vec, Int> ord_functional(const AffineMonoid& s, const Vec& facet_normal) {
    const Vec& n = s.cone().facets[facet_index(s, facet_normal)];
    Int g = 0;
    for (const auto& b : s.group()) {
        Int v = dot(n, b);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return {n, g};
}

Int ord(const AffineMonoid& s, const Vec& facet_normal, const Vec& u) {
    if (!lattice_contains(s.group(), u))
        throw Error(ErrorKind::InvalidInput, to_string(u) + " is not in the group generated by the monoid");
    auto [n, g] = ord_functional(s, facet_normal);
    return dot(n, u) / g;
}

std::vector<Int> ray_heights(const AffineMonoid& s, const Vec& facet_normal) {
    auto [n, g] = ord_functional(s, facet_normal);
    std::vector<Int> out;
    for (const auto& r : s.cone().rays) {
        if (dot(n, r) == 0) continue;
        std::vector<Vec> span = s.cone().lineality;
        span.push_back(r);
        Int h = 0;
        for (const auto& b : lattice_meet_span(s.group(), span, s.ambient_rank())) {
            Int v = dot(n, b) / g;
            mpz_gcd(h.get_mpz_t(), h.get_mpz_t(), v.get_mpz_t());
        }
        out.push_back(h);
    }
    return out;
}

MonoidIdeal symbolic_power(const AffineMonoid& s, const Vec& facet_normal, const Int& m) {
    if (m < 1) throw Error(ErrorKind::InvalidInput, "symbolic power exponent must be positive");
    if (!s.is_saturated()) throw Error(ErrorKind::NotSaturated, s.to_string() + " is not saturated");
    auto [n, g] = ord_functional(s, facet_normal);
    const std::size_t d = s.ambient_rank();

    // {(u, t) : u in cone(S), ord(u) >= m t, t >= 0} over Z·S x Z.
    std::vector<Vec> rows;
    for (const auto& q : s.cone().inequalities()) {
        Vec row = q;
        row.push_back(0);
        rows.push_back(std::move(row));
    }
    Vec cut = n;
    cut.push_back(-g * m);
    rows.push_back(std::move(cut));
    rows.push_back(unit_vec(d + 1, d));
    GeneralCone homog = dual(GeneralCone::from_generators(rows, {}, d + 1));
    std::vector<Vec> lattice;
    for (const auto& b : s.group()) {
        Vec row = b;
        row.push_back(0);
        lattice.push_back(std::move(row));
    }
    lattice.push_back(unit_vec(d + 1, d));

    std::vector<Vec> gens;
    for (const auto& h : hilbert_basis(homog, lattice).elements)
        if (h[d] == 1) gens.emplace_back(h.begin(), h.end() - 1);
    MonoidIdeal ideal(s, gens);

    // The Newton polyhedron is the truncated cone whenever that truncation is a lattice polyhedron.
    Int l = 1;
    for (const auto& h : ray_heights(s, facet_normal)) l = lcm(l, h);
    if (s.cone().pointed() && s.group().size() == d && m % l == 0) {
        std::vector<Halfspace> hs;
        for (const auto& f : s.cone().facets) hs.push_back({f, Rat(0)});
        hs.push_back({n, Rat(g * m)});
        Polyhedron expected = Polyhedron::from_inequalities(hs, d);
        if (!(newton_polyhedron(ideal) == expected))
            throw Error(ErrorKind::CriterionMismatch, "Newton polyhedron of the symbolic power is not the truncated cone");
    }
    return ideal;
}

MonoidIdeal graded_prime_of_facet(const AffineMonoid& s, const Vec& facet_normal) {
    return symbolic_power(s, facet_normal, Int(1));
}

}  // namespace toric
