#include "toric/fan.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

bool contained_in(const Cone& a, const Cone& b) {
    return std::all_of(a.rays().begin(), a.rays().end(), [&](const Vec& r) { return b.contains(r); });
}

Fan from_duals(const MonoidCollection& c) {
    std::vector<Cone> cones;
    for (const auto& s : c.monoids()) cones.push_back(Cone::from_general(dual(s.cone())));
    return Fan::from_cones(cones, c.ambient_rank());
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> fan_violation(const std::vector<Cone>& cones) {
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            Cone meet = intersect(cones[i], cones[j]);
            if (!is_face_of(meet, cones[i]) || !is_face_of(meet, cones[j])) return std::make_pair(i, j);
        }
    return std::nullopt;
}

Fan Fan::from_cones(const std::vector<Cone>& input, std::size_t rank) {
    for (const auto& c : input)
        if (c.ambient_rank() != rank) throw Error(ErrorKind::InvalidInput, "cone of wrong rank in fan");
    if (auto bad = fan_violation(input))
        throw Error(ErrorKind::NotAFan, "cones " + std::to_string(bad->first) + " and " + std::to_string(bad->second) +
                                            " meet outside a common face");
    Fan f;
    f.rank_ = rank;
    std::set<Cone> all{Cone::zero(rank)};
    for (const auto& c : input)
        for (const auto& face : faces(c)) all.insert(face_cone(c, face));
    f.cones_.assign(all.begin(), all.end());

    std::vector<Cone> uniq;
    for (const auto& c : input)
        if (std::find(uniq.begin(), uniq.end(), c) == uniq.end()) uniq.push_back(c);
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < uniq.size() && !dominated; ++j)
            dominated = j != i && uniq[j].dim() > uniq[i].dim() && contained_in(uniq[i], uniq[j]);
        if (!dominated) f.maximal_.push_back(uniq[i]);
    }
    if (f.maximal_.empty()) f.maximal_.push_back(Cone::zero(rank));
    std::sort(f.maximal_.begin(), f.maximal_.end());

    for (const auto& c : f.cones_)
        if (c.dim() == 1) f.rays_.push_back(c.rays().front());
    std::sort(f.rays_.begin(), f.rays_.end());
    return f;
}

std::optional<std::size_t> Fan::ray_index(const Vec& ray) const {
    auto it = std::lower_bound(rays_.begin(), rays_.end(), ray);
    if (it == rays_.end() || *it != ray) return std::nullopt;
    return static_cast<std::size_t>(it - rays_.begin());
}

std::vector<std::size_t> Fan::ray_indices(const Cone& c) const {
    std::vector<std::size_t> out;
    for (const auto& r : c.rays()) {
        auto i = ray_index(r);
        if (!i) throw Error(ErrorKind::InvalidInput, "cone ray " + to_string(r) + " is not a ray of the fan");
        out.push_back(*i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Fan::is_simplicial() const {
    return std::all_of(maximal_.begin(), maximal_.end(), [](const Cone& c) { return toric::is_simplicial(c); });
}

bool Fan::is_smooth() const {
    return std::all_of(maximal_.begin(), maximal_.end(), [](const Cone& c) { return toric::is_smooth(c); });
}

bool Fan::in_support(const Vec& x) const {
    return std::any_of(maximal_.begin(), maximal_.end(), [&](const Cone& c) { return c.contains(x); });
}

std::vector<AffineMonoid> fan_monoids(const Fan& f) {
    std::vector<AffineMonoid> out;
    for (const auto& c : f.cones()) out.push_back(monoid_of_cone(c));
    return out;
}

MonoidCollection fan_to_monoid_collection(const Fan& f) {
    auto report = validate_collection(fan_monoids(f));
    if (!report.valid)
        throw Error(ErrorKind::InvalidInput, "monoids of a fan fail validation: " + report.violations.front().message);
    return std::move(*report.collection);
}

Fan monoid_collection_to_fan(const MonoidCollection& c) {
    for (const auto& s : c.monoids())
        if (!s.is_saturated()) throw Error(ErrorKind::NotSaturated, "monoid " + s.to_string() + " is not saturated");
    return from_duals(c);
}

Fan normalization_fan(const MonoidCollection& c) { return from_duals(c); }

OrbitPoset orbit_poset(const Fan& f) {
    OrbitPoset p;
    p.cones = f.cones();
    p.monoids = fan_monoids(f);
    const std::size_t n = p.cones.size();
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && p.cones[i].dim() < p.cones[j].dim() && is_face_of(p.cones[i], p.cones[j])) {
                below[i][j] = true;
                p.order.emplace_back(i, j);
            }
    for (auto [i, j] : p.order) {
        bool covered = true;
        for (std::size_t k = 0; k < n && covered; ++k) covered = !(below[i][k] && below[k][j]);
        if (covered) p.covers.emplace_back(i, j);
    }
    return p;
}

bool same_support_sampled(const Fan& a, const Fan& b, long radius) {
    if (a.ambient_rank() != b.ambient_rank()) return false;
    const std::size_t d = a.ambient_rank();
    Vec x(d, Int(-radius));
    while (true) {
        if (a.in_support(x) != b.in_support(x)) return false;
        std::size_t j = 0;
        while (j < d) {
            x[j] += 1;
            if (x[j] <= radius) break;
            x[j] = -radius;
            ++j;
        }
        if (j == d) break;
    }
    return true;
}

bool refines(const Fan& fine, const Fan& coarse) {
    return std::all_of(fine.maximal_cones().begin(), fine.maximal_cones().end(), [&](const Cone& c) {
        return std::any_of(coarse.maximal_cones().begin(), coarse.maximal_cones().end(),
                           [&](const Cone& big) { return contained_in(c, big); });
    });
}

}  // namespace toric
