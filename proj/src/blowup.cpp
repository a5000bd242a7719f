#include "toric/blowup.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

Vec append(const Vec& v, long x) {
    Vec out = v;
    out.push_back(Int(x));
    return out;
}

void require_full_pointed(const AffineMonoid& s) {
    if (!s.is_saturated()) throw Error(ErrorKind::NotSaturated, s.to_string() + " is not saturated");
    if (!s.cone().pointed()) throw Error(ErrorKind::NotPointed, s.to_string() + " has units");
    if (!s.generates_ambient_lattice()) throw Error(ErrorKind::InvalidInput, s.to_string() + " does not generate M");
}

// Joins of v with the facets of sigma that avoid v.
std::vector<Cone> star_cones(const Cone& sigma, const Vec& v) {
    std::vector<Cone> out;
    for (const auto& face : faces(sigma)) {
        if (face.dim + 1 != sigma.dim()) continue;
        Cone tau = face_cone(sigma, face);
        if (tau.contains(v)) continue;
        std::vector<Vec> rays = tau.rays();
        rays.push_back(v);
        out.push_back(Cone::from_rays(rays, sigma.ambient_rank()));
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ideals

MonoidIdeal integral_closure(const MonoidIdeal& a) {
    const AffineMonoid& s = a.monoid();
    if (!s.is_saturated()) throw Error(ErrorKind::NotSaturated, s.to_string() + " is not saturated");
    if (a.empty()) return a;
    const std::size_t d = s.ambient_rank();
    std::vector<Vec> gens, lin, lattice;
    for (const auto& g : a.generators()) gens.push_back(append(g, 1));
    for (const auto& r : s.cone().rays) gens.push_back(append(r, 0));
    for (const auto& u : s.cone().lineality) lin.push_back(append(u, 0));
    for (const auto& b : s.group()) lattice.push_back(append(b, 0));
    lattice.push_back(unit_vec(d + 1, d));
    GeneralCone homog = GeneralCone::from_generators(gens, lin, d + 1);
    std::vector<Vec> closed;
    for (const auto& h : hilbert_basis(homog, lattice).elements)
        if (h[d] == 1) closed.emplace_back(h.begin(), h.end() - 1);
    return MonoidIdeal(a.monoid_ptr(), closed);
}

bool is_integrally_closed(const MonoidIdeal& a) { return integral_closure(a).same_as(a); }

// ---------------------------------------------------------------------------
// affine blow-up

BlowupResult blowup_affine(const AffineMonoid& s, const MonoidIdeal& a) {
    require_full_pointed(s);
    if (!a.monoid().same_as(s)) throw Error(ErrorKind::InvalidInput, "ideal belongs to a different monoid");
    if (a.empty()) throw Error(ErrorKind::InvalidInput, "cannot blow up the empty ideal");
    if (!is_integrally_closed(a)) throw Error(ErrorKind::NotIntegrallyClosed, "ideal is not integrally closed");

    Polyhedron newton = newton_polyhedron(a);
    const auto& ineqs = newton.inequalities();
    const auto& pfaces = newton.faces();

    std::vector<std::size_t> generator_to_face;
    for (const auto& g : a.generators()) {
        RatVec x = to_rat(g);
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < ineqs.size(); ++i)
            if (ineqs[i].tight_at(x)) tight.push_back(i);
        auto it = std::find_if(pfaces.begin(), pfaces.end(), [&](const PolyFace& f) { return f.tight == tight; });
        if (it == pfaces.end()) throw Error(ErrorKind::InvalidInput, "generator " + to_string(g) + " lies in no face");
        generator_to_face.push_back(static_cast<std::size_t>(it - pfaces.begin()));
    }

    std::vector<AffineMonoid> charts;
    std::vector<bool> matches;
    for (std::size_t k = 0; k < a.generators().size(); ++k) {
        const Vec& base = a.generators()[k];
        std::vector<Vec> gens = s.hilbert_basis();
        for (const auto& g : a.generators())
            if (g != base) gens.push_back(g - base);
        charts.push_back(AffineMonoid::from_generators(gens, s.ambient_rank()));
        matches.push_back(saturate(charts.back()).same_as(face_monoid(newton, pfaces[generator_to_face[k]])));
    }

    std::vector<Cone> normal_cones;
    for (const auto& f : pfaces) normal_cones.push_back(normal_cone(newton, f));
    Fan fan_after = Fan::from_cones(normal_cones, s.ambient_rank());
    std::vector<std::size_t> face_to_cone;
    for (const auto& c : normal_cones) {
        auto it = std::find(fan_after.cones().begin(), fan_after.cones().end(), c);
        face_to_cone.push_back(static_cast<std::size_t>(it - fan_after.cones().begin()));
    }

    MonoidCollection patches = monoid_collection_of_polyhedron(newton);
    return BlowupResult{s,       a,      std::move(newton),           std::move(patches), std::move(fan_after),
                        std::move(generator_to_face), std::move(charts), std::move(matches), std::move(face_to_cone)};
}

// ---------------------------------------------------------------------------
// normalization

NormalizationResult normalization_blowup(const AffineMonoid& s) {
    if (s.is_saturated()) throw Error(ErrorKind::AlreadySaturated, s.to_string() + " is already saturated");
    const std::size_t d = s.ambient_rank();
    AffineMonoid sat = saturate(s);
    std::vector<Vec> targets;
    for (const auto& h : sat.hilbert_basis())
        if (!s.contains(h)) targets.push_back(h);

    const std::vector<Vec> gens = s.hilbert_basis();
    std::vector<NormalizationPair> pairs;
    for (const auto& t : targets) {
        std::optional<NormalizationPair> found;
        for (std::size_t bound = 4; bound <= 16 && !found; bound *= 2) {
            // Sums of at most `bound` generators, level by level, each level in lex order.
            std::set<Vec> seen{zero_vec(d)};
            std::vector<Vec> level{zero_vec(d)};
            std::vector<Vec> ordered;
            for (std::size_t k = 1; k <= bound; ++k) {
                std::set<Vec> next;
                for (const auto& x : level)
                    for (const auto& g : gens) {
                        Vec y = x + g;
                        if (!seen.count(y)) next.insert(y);
                    }
                level.assign(next.begin(), next.end());
                for (const auto& y : level) {
                    seen.insert(y);
                    ordered.push_back(y);
                }
            }
            for (const auto& minus : ordered) {
                Vec plus = t + minus;
                if (seen.count(plus) && !is_zero(plus)) {
                    found = NormalizationPair{t, plus, minus};
                    break;
                }
            }
        }
        if (!found) throw Error(ErrorKind::PairSearchFailed, "no pair of sums of at most 16 generators differs by " + to_string(t));
        pairs.push_back(*found);
    }

    std::set<Vec> product{zero_vec(d)};
    for (const auto& p : pairs) {
        std::set<Vec> next;
        for (const auto& x : product) {
            next.insert(x + p.plus);
            next.insert(x + p.minus);
        }
        product = std::move(next);
    }

    std::vector<Vec> composite_gens = gens;
    composite_gens.insert(composite_gens.end(), targets.begin(), targets.end());
    AffineMonoid composite = AffineMonoid::from_generators(composite_gens, d);
    std::vector<bool> sandwich;
    for (const auto& p : pairs) {
        std::vector<Vec> g = gens;
        g.push_back(p.target);
        AffineMonoid patch = AffineMonoid::from_generators(g, d);
        bool lower = std::all_of(gens.begin(), gens.end(), [&](const Vec& x) { return patch.contains(x); });
        bool upper = std::all_of(g.begin(), g.end(), [&](const Vec& x) { return sat.contains(x); });
        sandwich.push_back(lower && upper);
    }
    bool equal = composite.same_as(sat);
    return NormalizationResult{std::move(pairs), std::vector<Vec>(product.begin(), product.end()), std::move(sat),
                               std::move(composite), equal, std::move(sandwich)};
}

// ---------------------------------------------------------------------------
// subdivisions

Fan stellar_subdivision(const Fan& f, const Vec& v) {
    if (v.size() != f.ambient_rank()) throw Error(ErrorKind::InvalidInput, "subdivision vector of wrong rank");
    if (is_zero(v) || gcd_of(v) != 1) throw Error(ErrorKind::InvalidInput, to_string(v) + " is not primitive");
    if (!f.in_support(v)) throw Error(ErrorKind::NotInSupport, to_string(v) + " is not in the support of the fan");
    std::vector<Cone> out;
    for (const auto& sigma : f.maximal_cones()) {
        if (!sigma.contains(v)) {
            out.push_back(sigma);
            continue;
        }
        auto star = star_cones(sigma, v);
        if (star.empty()) star.push_back(Cone::from_rays({v}, f.ambient_rank()));
        out.insert(out.end(), star.begin(), star.end());
    }
    return Fan::from_cones(out, f.ambient_rank());
}

std::vector<std::pair<Rat, Vec>> parallelepiped_points(const Cone& sigma) {
    if (!is_simplicial(sigma)) throw Error(ErrorKind::NotSimplicial, "parallelepiped of a non-simplicial cone");
    const std::size_t d = sigma.ambient_rank();
    const std::size_t k = sigma.rays().size();
    std::vector<std::pair<Rat, Vec>> out;
    if (k == 0) return out;
    std::vector<Vec> sub = saturated_span(sigma.rays(), d);
    Matrix sub_m = Matrix::from_rows(sub, d);
    std::vector<Vec> coords;
    for (const auto& r : sigma.rays()) {
        auto y = solve_left(sub_m, r);
        coords.push_back(*y);
    }
    Matrix c = Matrix::from_rows(coords, k);
    Matrix h = hermite_normal_form(c);
    auto inv = rational_inverse(c);
    Vec x = zero_vec(k);
    while (true) {
        Rat total = 0;
        RatVec p(k, Rat(0));
        for (std::size_t j = 0; j < k; ++j) {
            Rat lambda = 0;
            for (std::size_t i = 0; i < k; ++i) lambda += x[i] * inv[i][j];
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), lambda.get_num_mpz_t(), lambda.get_den_mpz_t());
            Rat frac = lambda - fl;
            total += frac;
            for (std::size_t i = 0; i < k; ++i) p[i] += frac * coords[j][i];
        }
        Vec pi;
        for (const auto& q : p) pi.push_back(q.get_num());
        if (!is_zero(pi)) out.emplace_back(total, mul(pi, sub_m));
        std::size_t i = 0;
        while (i < k) {
            x[i] += 1;
            if (x[i] < h(i, i)) break;
            x[i] = 0;
            ++i;
        }
        if (i == k) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

AffineSimplicialization simplicialize_affine(const AffineMonoid& s, const Vec& facet_normal) {
    require_full_pointed(s);
    const std::size_t d = s.ambient_rank();
    const Vec n = s.cone().facets[facet_index(s, facet_normal)];
    Cone sigma = Cone::from_general(dual(s.cone()));
    Fan before = Fan::from_cones({sigma}, d);
    if (ClassGroup::of(before).order(TorusDivisor::ray(before, *before.ray_index(n)).coefficients))
        throw Error(ErrorKind::FiniteOrderClass, "the divisor of " + to_string(n) + " has finite order");

    Int m = 1;
    for (const auto& h : ray_heights(s, n)) m = lcm(m, h);
    MonoidIdeal ideal = symbolic_power(s, n, m);
    BlowupResult result = blowup_affine(s, ideal);
    if (result.fan_after.rays() != before.rays())
        throw Error(ErrorKind::CriterionMismatch, "simplicializing blow-up changed the ray set");
    if (ClassGroup::of(result.fan_after).rank() >= ClassGroup::of(before).rank())
        throw Error(ErrorKind::CriterionMismatch, "simplicializing blow-up did not lower the class group rank");
    return AffineSimplicialization{m, std::move(ideal), std::move(result)};
}

// ---------------------------------------------------------------------------
// fan-level loops

ResolutionTrace simplicialize(const Fan& f, std::size_t max_steps) {
    ResolutionTrace trace;
    Fan cur = f;
    const std::size_t bound = cur.is_simplicial() ? 0 : ClassGroup::of(cur).rank();
    while (!cur.is_simplicial()) {
        if (trace.steps.size() >= bound || trace.steps.size() >= max_steps)
            throw Error(ErrorKind::StepLimitExceeded, "simplicialization exceeded " + std::to_string(std::min(bound, max_steps)) + " steps");
        ClassGroup g = ClassGroup::of(cur);
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < cur.rays().size() && !pick; ++i)
            if (!g.order(unit_vec(cur.rays().size(), i))) pick = i;
        if (!pick) throw Error(ErrorKind::CriterionMismatch, "non-simplicial fan without a ray divisor of infinite order");
        const Vec v = cur.rays()[*pick];

        Int exponent = 1;
        for (const auto& sigma : cur.maximal_cones()) {
            if (!sigma.contains(v)) continue;
            for (const auto& h : ray_heights(monoid_of_cone(sigma), v)) exponent = lcm(exponent, h);
        }
        Fan next = stellar_subdivision(cur, v);

        // Affine check: blowing up the symbolic power gives the same local subdivision.
        for (const auto& sigma : cur.maximal_cones()) {
            if (!sigma.contains(v) || !sigma.is_full_dimensional()) continue;
            AffineMonoid s = monoid_of_cone(sigma);
            BlowupResult local = blowup_affine(s, symbolic_power(s, v, exponent));
            if (!(local.fan_after == stellar_subdivision(Fan::from_cones({sigma}, cur.ambient_rank()), v)))
                throw Error(ErrorKind::CriterionMismatch, "blow-up of the symbolic power differs from the stellar subdivision");
        }
        if (next.rays() != cur.rays()) throw Error(ErrorKind::CriterionMismatch, "simplicialization changed the ray set");
        if (ClassGroup::of(next).rank() >= g.rank())
            throw Error(ErrorKind::CriterionMismatch, "simplicialization step did not lower the class group rank");
        trace.steps.push_back({ResolutionStep::Phase::Simplicialize, cur, v, pick, exponent, next});
        cur = std::move(next);
    }
    trace.final_fan = std::move(cur);
    return trace;
}

ResolutionTrace resolve(const Fan& f, std::size_t max_steps) {
    ResolutionTrace trace = simplicialize(f, max_steps);
    Fan cur = trace.final_fan;
    while (!cur.is_smooth()) {
        if (trace.steps.size() >= max_steps)
            throw Error(ErrorKind::StepLimitExceeded, "resolution exceeded " + std::to_string(max_steps) + " steps");
        const Cone* target = nullptr;
        for (const auto& sigma : cur.maximal_cones())
            if (!is_smooth(sigma)) {
                target = &sigma;
                break;
            }
        auto pts = parallelepiped_points(*target);
        Vec v = primitive(pts.front().second);
        Fan next = stellar_subdivision(cur, v);
        trace.steps.push_back({ResolutionStep::Phase::Resolve, cur, v, std::nullopt, std::nullopt, next});
        cur = std::move(next);
    }
    trace.final_fan = std::move(cur);
    return trace;
}

}  // namespace toric
