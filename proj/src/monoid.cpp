#include "toric/monoid.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

Vec grading_of(const GeneralCone& c) {
    Vec w = zero_vec(c.rank);
    for (const auto& f : c.facets) w = w + f;
    return w;
}

// Pulling triangulation using only the cone's rays.
void triangulate(const std::vector<Vec>& rays, std::size_t k, std::vector<std::vector<Vec>>& out) {
    Cone c = Cone::from_rays(rays, k);
    if (is_simplicial(c)) {
        out.push_back(c.rays());
        return;
    }
    const Vec& apex = c.rays().front();
    for (const auto& f : faces(c)) {
        if (f.dim + 1 != c.dim()) continue;
        if (std::find(f.rays.begin(), f.rays.end(), std::size_t{0}) != f.rays.end()) continue;
        std::vector<Vec> facet_rays;
        for (std::size_t r : f.rays) facet_rays.push_back(c.rays()[r]);
        std::vector<std::vector<Vec>> sub;
        triangulate(facet_rays, k, sub);
        for (auto& s : sub) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
}

// Lattice points of the half-open parallelepiped spanned by a full-rank simplicial ray set.
std::vector<Vec> parallelepiped_points(const std::vector<Vec>& rays, std::size_t k) {
    Matrix r = Matrix::from_rows(rays, k);
    Matrix h = hermite_normal_form(r);
    auto inv = rational_inverse(r);
    std::vector<Vec> out;
    Vec x = zero_vec(k);
    while (true) {
        RatVec lambda(k);
        for (std::size_t j = 0; j < k; ++j) {
            lambda[j] = 0;
            for (std::size_t i = 0; i < k; ++i) lambda[j] += x[i] * inv[i][j];
        }
        Vec p = zero_vec(k);
        RatVec acc(k);
        for (auto& a : acc) a = 0;
        for (std::size_t j = 0; j < k; ++j) {
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), lambda[j].get_num_mpz_t(), lambda[j].get_den_mpz_t());
            Rat frac = lambda[j] - fl;
            for (std::size_t i = 0; i < k; ++i) acc[i] += frac * rays[j][i];
        }
        for (std::size_t i = 0; i < k; ++i) p[i] = acc[i].get_num();
        if (!is_zero(p)) out.push_back(std::move(p));
        std::size_t i = 0;
        while (i < k) {
            x[i] += 1;
            if (x[i] < h(i, i)) break;
            x[i] = 0;
            ++i;
        }
        if (i == k) break;
    }
    return out;
}

// Hilbert basis of a full-dimensional pointed cone in Q^k with respect to Z^k.
std::vector<Vec> hilbert_basis_core(const std::vector<Vec>& rays_in, std::size_t k) {
    Cone cone = Cone::from_rays(rays_in, k);
    std::vector<std::vector<Vec>> simplices;
    triangulate(cone.rays(), k, simplices);
    std::set<Vec> candidates(cone.rays().begin(), cone.rays().end());
    for (const auto& s : simplices)
        for (auto& p : parallelepiped_points(s, k)) candidates.insert(std::move(p));

    Vec w = grading_of(cone.general());
    std::vector<std::pair<Int, Vec>> sorted;
    for (const auto& c : candidates) sorted.emplace_back(dot(w, c), c);
    std::sort(sorted.begin(), sorted.end());
    std::vector<Vec> basis;
    for (const auto& [deg, x] : sorted) {
        bool reducible = false;
        for (const auto& y : basis) {
            if (cone.contains(x - y)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

Vec coordinates(const Matrix& basis, const Vec& v) {
    auto y = solve_left_rational(basis, to_rat(v));
    if (!y) throw Error(ErrorKind::InvalidInput, "vector " + to_string(v) + " is not in the span of the lattice");
    return primitive(*y);
}

bool in_lineality(const GeneralCone& c, const Vec& g) {
    for (const auto& f : c.facets)
        if (dot(f, g) != 0) return false;
    for (const auto& e : c.equations)
        if (dot(e, g) != 0) return false;
    return true;
}

// Nonnegative-integer solvability of u = sum c_i g_i + unit, with c bounded by the grading.
class MembershipSolver {
public:
    MembershipSolver(const std::vector<Vec>& pointed, const std::vector<Vec>& units, const GeneralCone& cone,
                     const Vec& grading)
        : gens_(pointed), units_(units), cone_(cone), w_(grading) {
        std::sort(gens_.begin(), gens_.end(), [&](const Vec& a, const Vec& b) {
            Int da = dot(w_, a), db = dot(w_, b);
            if (da != db) return da > db;
            return a < b;
        });
        for (const auto& g : gens_) deg_.push_back(dot(w_, g));
    }

    bool solve(const Vec& u) {
        if (!cone_.contains(u)) return false;
        return search(0, u);
    }

private:
    bool search(std::size_t i, const Vec& r) {
        Int dr = dot(w_, r);
        if (dr == 0) return lattice_contains(units_, r);
        if (i == gens_.size()) return false;
        auto key = std::make_pair(i, r);
        if (failed_.count(key)) return false;
        Int cmax = dr / deg_[i];
        for (Int c = cmax; c >= 0; --c) {
            Vec next = r - c * gens_[i];
            if (!cone_.contains(next)) continue;
            if (search(i + 1, next)) return true;
        }
        failed_.insert(std::move(key));
        return false;
    }

    std::vector<Vec> gens_;
    std::vector<Int> deg_;
    const std::vector<Vec>& units_;
    const GeneralCone& cone_;
    const Vec& w_;
    std::set<std::pair<std::size_t, Vec>> failed_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Hilbert bases

HilbertBasis hilbert_basis(const GeneralCone& cone, const std::vector<Vec>& lattice_gens) {
    const std::size_t d = cone.rank;
    HilbertBasis out;
    std::vector<Vec> lattice = lattice_basis(lattice_gens, d);
    if (lattice.empty()) return out;
    const Matrix lat = Matrix::from_rows(lattice, d);
    const std::size_t r = lattice.size();

    std::vector<Vec> rays1, lin1;
    for (const auto& v : cone.rays) rays1.push_back(coordinates(lat, v));
    for (const auto& v : cone.lineality) lin1.push_back(coordinates(lat, v));
    GeneralCone c1 = GeneralCone::from_generators(rays1, lin1, r);

    // Restrict to the lattice points of span(cone).
    std::vector<Vec> span_gens = c1.rays;
    span_gens.insert(span_gens.end(), c1.lineality.begin(), c1.lineality.end());
    std::vector<Vec> sub = saturated_span(span_gens, r);
    const std::size_t k = sub.size();
    if (k == 0) return out;
    const Matrix sub_m = Matrix::from_rows(sub, r);
    const Matrix total = sub_m * lat;  // k x d

    std::vector<Vec> rays2, lin2;
    for (const auto& v : c1.rays) rays2.push_back(coordinates(sub_m, v));
    for (const auto& v : c1.lineality) lin2.push_back(coordinates(sub_m, v));
    GeneralCone c2 = GeneralCone::from_generators(rays2, lin2, k);

    const std::size_t u = c2.lineality.size();
    Matrix v_mat = Matrix::identity(k);
    if (u > 0) v_mat = smith_normal_form(Matrix::from_rows(c2.lineality, k)).v;
    const Matrix t_mat = unimodular_inverse(v_mat);

    std::vector<Vec> unit_ambient;
    for (const auto& l : c2.lineality) unit_ambient.push_back(mul(l, total));
    out.units = lattice_basis(unit_ambient, d);

    if (u < k) {
        std::vector<Vec> projected;
        for (const auto& ray : c2.rays) {
            Vec z = mul(ray, v_mat);
            Vec tail(z.begin() + static_cast<std::ptrdiff_t>(u), z.end());
            if (!is_zero(tail)) projected.push_back(tail);
        }
        std::set<Vec> elements;
        for (const auto& h : hilbert_basis_core(projected, k - u)) {
            Vec z = zero_vec(k);
            for (std::size_t i = 0; i < k - u; ++i) z[u + i] = h[i];
            Vec amb = mul(mul(z, t_mat), total);
            elements.insert(reduce_mod_lattice(amb, out.units));
        }
        out.elements.assign(elements.begin(), elements.end());
    }
    return out;
}

std::vector<Vec> hilbert_basis(const Cone& cone) {
    std::vector<Vec> lattice;
    for (std::size_t i = 0; i < cone.ambient_rank(); ++i) lattice.push_back(unit_vec(cone.ambient_rank(), i));
    return hilbert_basis(cone.general(), lattice).elements;
}

// ---------------------------------------------------------------------------
// AffineMonoid

AffineMonoid AffineMonoid::from_generators(const std::vector<Vec>& gens_in, std::size_t rank) {
    std::set<Vec> uniq;
    for (const auto& g : gens_in) {
        if (g.size() != rank) throw Error(ErrorKind::InvalidInput, "generator " + toric::to_string(g) + " has wrong rank");
        if (!is_zero(g)) uniq.insert(g);
    }
    AffineMonoid s;
    s.rank_ = rank;
    s.generators_.assign(uniq.begin(), uniq.end());
    s.group_ = lattice_basis(s.generators_, rank);
    s.cone_ = GeneralCone::from_generators(s.generators_, {}, rank);
    s.grading_ = grading_of(s.cone_);

    std::vector<Vec> unit_gens, pointed;
    for (const auto& g : s.generators_) (in_lineality(s.cone_, g) ? unit_gens : pointed).push_back(g);
    s.units_ = lattice_basis(unit_gens, rank);

    std::sort(pointed.begin(), pointed.end(), [&](const Vec& a, const Vec& b) {
        Int da = dot(s.grading_, a), db = dot(s.grading_, b);
        if (da != db) return da < db;
        return a < b;
    });
    std::vector<Vec> kept;
    for (const auto& g : pointed) {
        bool redundant = false;
        for (const auto& h : kept)
            if (lattice_contains(s.units_, g - h)) {
                redundant = true;
                break;
            }
        if (!redundant && !kept.empty()) {
            MembershipSolver solver(kept, s.units_, s.cone_, s.grading_);
            redundant = solver.solve(g);
        }
        if (!redundant) kept.push_back(g);
    }
    for (auto& g : kept) g = reduce_mod_lattice(g, s.units_);
    std::sort(kept.begin(), kept.end());
    s.minimal_ = std::move(kept);

    s.saturation_ = toric::hilbert_basis(s.cone_, s.group_);
    s.saturated_ = true;
    for (const auto& h : s.saturation_.elements)
        if (!s.contains(h)) {
            s.saturated_ = false;
            break;
        }
    if (s.saturated_)
        for (const auto& e : s.saturation_.units)
            if (!s.contains(e) || !s.contains(-e)) {
                s.saturated_ = false;
                break;
            }
    return s;
}

AffineMonoid AffineMonoid::saturated(const GeneralCone& cone, const std::vector<Vec>& lattice) {
    AffineMonoid s;
    s.rank_ = cone.rank;
    s.saturation_ = toric::hilbert_basis(cone, lattice);
    s.minimal_ = s.saturation_.elements;
    s.units_ = s.saturation_.units;
    s.generators_ = s.hilbert_basis();
    std::sort(s.generators_.begin(), s.generators_.end());
    s.group_ = lattice_basis(s.generators_, s.rank_);
    s.cone_ = GeneralCone::from_generators(s.generators_, {}, s.rank_);
    s.grading_ = grading_of(s.cone_);
    s.saturated_ = true;
    return s;
}

std::vector<Vec> AffineMonoid::hilbert_basis() const {
    std::vector<Vec> out = minimal_;
    for (const auto& u : units_) {
        out.push_back(u);
        out.push_back(-u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool AffineMonoid::generates_ambient_lattice() const {
    if (group_.size() != rank_) return false;
    Int det = 1;
    for (std::size_t i = 0; i < rank_; ++i) det *= group_[i][i];
    return det == 1;
}

bool AffineMonoid::contains(const Vec& u) const {
    if (u.size() != rank_) return false;
    if (!lattice_contains(group_, u)) return false;
    MembershipSolver solver(minimal_, units_, cone_, grading_);
    return solver.solve(u);
}

bool AffineMonoid::same_as(const AffineMonoid& other) const {
    if (rank_ != other.rank_ || group_ != other.group_ || units_ != other.units_) return false;
    if (saturated_ && other.saturated_) return minimal_ == other.minimal_;
    for (const auto& g : minimal_)
        if (!other.contains(g)) return false;
    for (const auto& g : other.minimal_)
        if (!contains(g)) return false;
    return true;
}

std::string AffineMonoid::to_string() const {
    std::string s = "<";
    auto hb = hilbert_basis();
    for (std::size_t i = 0; i < hb.size(); ++i) s += (i ? "," : "") + toric::to_string(hb[i]);
    return s + ">";
}

AffineMonoid monoid_of_cone(const Cone& sigma) {
    std::vector<Vec> lattice;
    for (std::size_t i = 0; i < sigma.ambient_rank(); ++i) lattice.push_back(unit_vec(sigma.ambient_rank(), i));
    return AffineMonoid::saturated(dual(sigma), lattice);
}

AffineMonoid saturate(const AffineMonoid& s) {
    if (s.is_saturated()) return s;
    AffineMonoid sat;
    sat.rank_ = s.rank_;
    sat.saturation_ = s.saturation_;
    sat.minimal_ = s.saturation_.elements;
    sat.units_ = s.saturation_.units;
    sat.generators_ = sat.hilbert_basis();
    sat.group_ = s.group_;
    sat.cone_ = s.cone_;
    sat.grading_ = s.grading_;
    sat.saturated_ = true;
    return sat;
}

bool membership(const AffineMonoid& s, const Vec& u) { return s.contains(u); }

AffineMonoid localize(const AffineMonoid& s, const Vec& u) {
    if (!s.contains(u)) throw Error(ErrorKind::NotInMonoid, to_string(u) + " is not in " + s.to_string());
    if (is_zero(u)) return s;
    std::vector<Vec> gens = s.hilbert_basis();
    gens.push_back(-u);
    return AffineMonoid::from_generators(gens, s.ambient_rank());
}

std::optional<Vec> is_localization_of(const AffineMonoid& s, const AffineMonoid& t) {
    if (s.ambient_rank() != t.ambient_rank()) return std::nullopt;
    for (const auto& g : s.hilbert_basis())
        if (!t.contains(g)) return std::nullopt;
    Vec u = zero_vec(s.ambient_rank());
    for (const auto& g : s.minimal_generators())
        if (t.contains(-g)) u = u + g;
    if (is_zero(u)) {
        if (s.same_as(t)) return u;
        return std::nullopt;
    }
    if (localize(s, u).same_as(t)) return u;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// MonoidIdeal

MonoidIdeal::MonoidIdeal(std::shared_ptr<const AffineMonoid> monoid, const std::vector<Vec>& gens)
    : monoid_(std::move(monoid)) {
    const AffineMonoid& s = *monoid_;
    std::vector<Vec> sorted;
    for (const auto& g : gens) {
        if (!s.contains(g)) throw Error(ErrorKind::NotInMonoid, "ideal generator " + to_string(g) + " is not in the monoid");
        sorted.push_back(reduce_mod_lattice(g, s.units()));
    }
    std::sort(sorted.begin(), sorted.end(), [&](const Vec& a, const Vec& b) {
        Int da = dot(s.grading(), a), db = dot(s.grading(), b);
        if (da != db) return da < db;
        return a < b;
    });
    for (const auto& g : sorted) {
        bool redundant = false;
        for (const auto& h : generators_)
            if (s.contains(g - h)) {
                redundant = true;
                break;
            }
        if (!redundant) generators_.push_back(g);
    }
    std::sort(generators_.begin(), generators_.end());
}

bool MonoidIdeal::contains(const Vec& x) const {
    for (const auto& g : generators_)
        if (monoid_->contains(x - g)) return true;
    return false;
}

bool MonoidIdeal::same_as(const MonoidIdeal& other) const {
    if (!monoid_->same_as(*other.monoid_)) return false;
    for (const auto& g : generators_)
        if (!other.contains(g)) return false;
    for (const auto& g : other.generators_)
        if (!contains(g)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// collections

std::optional<std::size_t> MonoidCollection::find(const AffineMonoid& s) const {
    for (std::size_t i = 0; i < monoids_.size(); ++i)
        if (monoids_[i].same_as(s)) return i;
    return std::nullopt;
}

std::string_view violation_name(Violation::Kind kind) {
    switch (kind) {
    case Violation::Kind::GroupNotFull: return "GroupNotFull";
    case Violation::Kind::NotClosedUnderLocalization: return "NotClosedUnderLocalization";
    case Violation::Kind::SumNotLocalization: return "SumNotLocalization";
    }
    return "Unknown";
}

struct CollectionBuilder {
    static MonoidCollection build(std::size_t rank, std::vector<AffineMonoid> monoids,
                                  std::map<std::pair<std::size_t, std::size_t>, Vec> relation) {
        MonoidCollection c;
        c.rank_ = rank;
        c.monoids_ = std::move(monoids);
        c.relation_ = std::move(relation);
        return c;
    }
};

ValidationReport validate_collection(const std::vector<AffineMonoid>& input) {
    ValidationReport report;
    if (input.empty()) throw Error(ErrorKind::InvalidInput, "empty monoid collection");
    const std::size_t rank = input.front().ambient_rank();
    std::vector<AffineMonoid> monoids;
    for (const auto& s : input) {
        if (s.ambient_rank() != rank) throw Error(ErrorKind::InvalidInput, "monoids of different ranks");
        bool dup = std::any_of(monoids.begin(), monoids.end(), [&](const AffineMonoid& t) { return t.same_as(s); });
        if (!dup) monoids.push_back(s);
    }
    auto find = [&](const AffineMonoid& s) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < monoids.size(); ++i)
            if (monoids[i].same_as(s)) return i;
        return std::nullopt;
    };

    for (std::size_t i = 0; i < monoids.size(); ++i)
        if (!monoids[i].generates_ambient_lattice())
            report.violations.push_back({Violation::Kind::GroupNotFull, i, i, {},
                                         "monoid " + monoids[i].to_string() + " does not generate M"});

    for (std::size_t i = 0; i < monoids.size(); ++i) {
        const auto& s = monoids[i];
        for (const auto& f : faces(s.cone())) {
            Vec u = zero_vec(rank);
            for (const auto& g : s.minimal_generators()) {
                bool on = std::all_of(f.tight.begin(), f.tight.end(),
                                      [&](std::size_t t) { return dot(s.cone().facets[t], g) == 0; });
                if (on) u = u + g;
            }
            if (!find(localize(s, u)))
                report.violations.push_back({Violation::Kind::NotClosedUnderLocalization, i, i, u,
                                             "localization of " + s.to_string() + " at " + to_string(u) +
                                                 " is missing"});
        }
    }

    std::map<std::pair<std::size_t, std::size_t>, Vec> relation;
    for (std::size_t i = 0; i < monoids.size(); ++i)
        for (std::size_t j = i + 1; j < monoids.size(); ++j) {
            std::vector<Vec> gens = monoids[i].hilbert_basis();
            auto more = monoids[j].hilbert_basis();
            gens.insert(gens.end(), more.begin(), more.end());
            AffineMonoid sum = AffineMonoid::from_generators(gens, rank);
            bool ok_i = is_localization_of(monoids[i], sum).has_value();
            bool ok_j = is_localization_of(monoids[j], sum).has_value();
            if (!ok_i || !ok_j)
                report.violations.push_back({Violation::Kind::SumNotLocalization, i, j, {},
                                             "sum " + sum.to_string() + " is not a localization of " +
                                                 (ok_i ? monoids[j] : monoids[i]).to_string()});
        }

    report.valid = report.violations.empty();
    if (report.valid) {
        for (std::size_t i = 0; i < monoids.size(); ++i)
            for (std::size_t j = 0; j < monoids.size(); ++j) {
                if (i == j) continue;
                if (auto u = is_localization_of(monoids[i], monoids[j])) relation[{i, j}] = *u;
            }
        report.collection = CollectionBuilder::build(rank, std::move(monoids), std::move(relation));
    }
    return report;
}

std::vector<PrimePair> faces_primes(const AffineMonoid& s) {
    if (!s.is_saturated()) throw Error(ErrorKind::NotSaturated, s.to_string() + " is not saturated");
    std::vector<PrimePair> out;
    const auto& facets = s.cone().facets;
    for (const auto& f : faces(s.cone())) {
        auto on_face = [&](const Vec& g) {
            return std::all_of(f.tight.begin(), f.tight.end(), [&](std::size_t t) { return dot(facets[t], g) == 0; });
        };
        PrimePair p;
        p.face = f;
        for (const auto& g : s.hilbert_basis()) (on_face(g) ? p.face_generators : p.ideal_generators).push_back(g);
        const auto& hb = s.minimal_generators();
        for (std::size_t a = 0; a < hb.size(); ++a)
            for (std::size_t b = a; b < hb.size(); ++b)
                if (on_face(hb[a] + hb[b]) && !(on_face(hb[a]) && on_face(hb[b])))
                    throw Error(ErrorKind::CriterionMismatch, "complement of a face is not prime");
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace toric
