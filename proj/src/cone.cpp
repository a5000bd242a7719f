#include "toric/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace toric {

namespace {

class Bits {
public:
    void set(std::size_t i) {
        if (words_.size() <= i / 64) words_.resize(i / 64 + 1, 0);
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    Bits operator&(const Bits& o) const {
        Bits r;
        r.words_.resize(std::min(words_.size(), o.words_.size()));
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
            if (words_[i] & ~other) return false;
        }
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

std::vector<Vec> nonzero_primitive_sorted(const std::vector<Vec>& in) {
    std::set<Vec> s;
    for (const auto& v : in)
        if (!is_zero(v)) s.insert(primitive(v));
    return {s.begin(), s.end()};
}

struct DualData {
    std::vector<Vec> facets;
    std::vector<Vec> equations;
};

// Dual of cone(rays) + span(lineality): equations = span^⊥, facet representatives
// chosen in span ∩ lineality^⊥.
DualData dual_raw(const std::vector<Vec>& rays, const std::vector<Vec>& lineality, std::size_t d) {
    std::vector<Vec> all = rays;
    all.insert(all.end(), lineality.begin(), lineality.end());
    DualData out;
    out.equations = orthogonal_complement(all, d);
    std::vector<Vec> ortho = out.equations;
    ortho.insert(ortho.end(), lineality.begin(), lineality.end());
    std::vector<Vec> basis = orthogonal_complement(ortho, d);
    const std::size_t k = basis.size();
    if (k == 0) return out;
    std::vector<Vec> constraints;
    for (const auto& r : rays) {
        Vec g(k);
        for (std::size_t j = 0; j < k; ++j) g[j] = dot(basis[j], r);
        if (!is_zero(g)) constraints.push_back(std::move(g));
    }
    for (const auto& y : extreme_rays(constraints, k)) {
        Vec u = zero_vec(d);
        for (std::size_t j = 0; j < k; ++j) u = u + y[j] * basis[j];
        out.facets.push_back(primitive(u));
    }
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

}  // namespace

std::vector<Vec> extreme_rays(const std::vector<Vec>& constraints_in, std::size_t k) {
    std::vector<Vec> constraints;
    for (const auto& g : constraints_in)
        if (!is_zero(g)) constraints.push_back(g);
    if (k == 0) return {};
    // Order: an independent set first, remaining rows in input order.
    std::vector<Vec> order;
    std::vector<bool> used(constraints.size(), false);
    for (std::size_t i = 0; i < constraints.size() && order.size() < k; ++i) {
        order.push_back(constraints[i]);
        if (rank_of(order, k) < order.size()) {
            order.pop_back();
        } else {
            used[i] = true;
        }
    }
    if (order.size() < k) throw Error(ErrorKind::NotPointed, "constraint system does not cut out a pointed cone");
    const std::size_t initial = k;
    for (std::size_t i = 0; i < constraints.size(); ++i)
        if (!used[i]) order.push_back(constraints[i]);

    auto inv = rational_inverse(Matrix::from_rows(std::vector<Vec>(order.begin(), order.begin() + initial), k));
    std::vector<Vec> rays;
    std::vector<Bits> zeros;
    for (std::size_t j = 0; j < k; ++j) {
        RatVec col(k);
        for (std::size_t i = 0; i < k; ++i) col[i] = inv[i][j];
        rays.push_back(primitive(col));
        Bits z;
        for (std::size_t i = 0; i < k; ++i)
            if (i != j) z.set(i);
        zeros.push_back(z);
    }

    for (std::size_t c = initial; c < order.size(); ++c) {
        const Vec& g = order[c];
        std::vector<Int> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(g, rays[r]);
            if (val[r] > 0) pos.push_back(r);
            else if (val[r] < 0) neg.push_back(r);
        }
        std::vector<Vec> next_rays;
        std::vector<Bits> next_zeros;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (val[r] < 0) continue;
            Bits z = zeros[r];
            if (val[r] == 0) z.set(c);
            next_rays.push_back(rays[r]);
            next_zeros.push_back(std::move(z));
        }
        for (std::size_t p : pos)
            for (std::size_t n : neg) {
                Bits common = zeros[p] & zeros[n];
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == n) continue;
                    if (common.subset_of(zeros[r])) adjacent = false;
                }
                if (!adjacent) continue;
                Vec w = val[p] * rays[n] - val[n] * rays[p];
                next_rays.push_back(primitive(w));
                common.set(c);
                next_zeros.push_back(std::move(common));
            }
        rays = std::move(next_rays);
        zeros = std::move(next_zeros);
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

// ---------------------------------------------------------------------------
// GeneralCone

GeneralCone GeneralCone::from_generators(const std::vector<Vec>& rays_in, const std::vector<Vec>& lin_in,
                                         std::size_t d) {
    for (const auto& v : rays_in)
        if (v.size() != d) throw Error(ErrorKind::InvalidInput, "ray " + to_string(v) + " has wrong rank");
    for (const auto& v : lin_in)
        if (v.size() != d) throw Error(ErrorKind::InvalidInput, "lineality vector has wrong rank");
    std::vector<Vec> rays = nonzero_primitive_sorted(rays_in);
    std::vector<Vec> lin = lattice_basis(nonzero_primitive_sorted(lin_in), d);

    GeneralCone c;
    c.rank = d;
    DualData first = dual_raw(rays, lin, d);
    DualData second = dual_raw(first.facets, first.equations, d);
    c.rays = second.facets;
    c.lineality = second.equations;
    if (rank_of(lin, d) == c.lineality.size()) {
        c.facets = std::move(first.facets);
        c.equations = std::move(first.equations);
    } else {
        DualData third = dual_raw(c.rays, c.lineality, d);
        c.facets = std::move(third.facets);
        c.equations = std::move(third.equations);
    }
    return c;
}

GeneralCone GeneralCone::whole_space(std::size_t d) {
    std::vector<Vec> lin;
    for (std::size_t i = 0; i < d; ++i) lin.push_back(unit_vec(d, i));
    return from_generators({}, lin, d);
}

bool GeneralCone::contains(const Vec& x) const {
    for (const auto& e : equations)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets)
        if (dot(f, x) < 0) return false;
    return true;
}

bool GeneralCone::contains(const RatVec& x) const {
    auto rdot = [&](const Vec& a) {
        Rat s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
        return s;
    };
    for (const auto& e : equations)
        if (rdot(e) != 0) return false;
    for (const auto& f : facets)
        if (rdot(f) < 0) return false;
    return true;
}

std::vector<Vec> GeneralCone::inequalities() const {
    std::vector<Vec> out = facets;
    for (const auto& e : equations) {
        out.push_back(e);
        out.push_back(-e);
    }
    return out;
}

GeneralCone dual(const GeneralCone& c) {
    GeneralCone d;
    d.rank = c.rank;
    d.rays = c.facets;
    d.lineality = c.equations;
    d.facets = c.rays;
    d.equations = c.lineality;
    return d;
}

// ---------------------------------------------------------------------------
// Cone

Cone Cone::from_rays(const std::vector<Vec>& rays, std::size_t rank) {
    Cone c;
    c.data_ = GeneralCone::from_generators(rays, {}, rank);
    if (!c.data_.lineality.empty())
        throw Error(ErrorKind::ContainsLine, "cone contains the line through " + to_string(c.data_.lineality.front()));
    return c;
}

Cone Cone::from_inequalities(const std::vector<Vec>& normals, std::size_t rank) {
    for (const auto& v : normals)
        if (v.size() != rank) throw Error(ErrorKind::InvalidInput, "normal " + to_string(v) + " has wrong rank");
    if (rank_of(normals, rank) < rank)
        throw Error(ErrorKind::ContainsLine, "inequalities do not cut out a strongly convex cone");
    return from_rays(extreme_rays(normals, rank), rank);
}

Cone Cone::zero(std::size_t rank) { return from_rays({}, rank); }

Cone Cone::from_general(const GeneralCone& g) {
    if (!g.lineality.empty()) throw Error(ErrorKind::ContainsLine, "cone has nontrivial lineality");
    Cone c;
    c.data_ = g;
    return c;
}

bool Cone::operator<(const Cone& other) const {
    if (dim() != other.dim()) return dim() < other.dim();
    return rays() < other.rays();
}

// ---------------------------------------------------------------------------
// faces

std::vector<Face> faces(const GeneralCone& c) {
    const std::size_t nr = c.rays.size();
    const std::size_t nf = c.facets.size();
    std::vector<std::vector<bool>> tight(nf, std::vector<bool>(nr));
    for (std::size_t f = 0; f < nf; ++f)
        for (std::size_t r = 0; r < nr; ++r) tight[f][r] = dot(c.facets[f], c.rays[r]) == 0;

    std::vector<std::size_t> all(nr);
    for (std::size_t i = 0; i < nr; ++i) all[i] = i;
    std::set<std::vector<std::size_t>> seen{all};
    std::vector<std::vector<std::size_t>> queue{all};
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const auto cur = queue[q];
        for (std::size_t f = 0; f < nf; ++f) {
            std::vector<std::size_t> next;
            for (std::size_t r : cur)
                if (tight[f][r]) next.push_back(r);
            if (next.size() == cur.size()) continue;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::vector<Face> out;
    for (const auto& rs : seen) {
        Face face;
        face.rays = rs;
        for (std::size_t f = 0; f < nf; ++f) {
            bool all_tight = std::all_of(rs.begin(), rs.end(), [&](std::size_t r) { return tight[f][r]; });
            if (all_tight) face.tight.push_back(f);
        }
        std::vector<Vec> span = c.lineality;
        for (std::size_t r : rs) span.push_back(c.rays[r]);
        face.dim = rank_of(span, c.rank);
        out.push_back(std::move(face));
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.rays < b.rays;
    });
    return out;
}

std::vector<Face> faces(const Cone& c) { return faces(c.general()); }

Cone face_cone(const Cone& c, const Face& f) {
    std::vector<Vec> rs;
    for (std::size_t r : f.rays) rs.push_back(c.rays()[r]);
    return Cone::from_rays(rs, c.ambient_rank());
}

GeneralCone dual(const Cone& c) { return dual(c.general()); }

Cone dual_cone(const Cone& c) {
    if (!c.is_full_dimensional())
        throw Error(ErrorKind::NotFullDimensional, "dual of a cone that is not full-dimensional has lineality");
    return Cone::from_general(dual(c.general()));
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_rank() != b.ambient_rank()) throw Error(ErrorKind::InvalidInput, "rank mismatch in intersect");
    std::vector<Vec> normals = a.inequalities();
    auto more = b.inequalities();
    normals.insert(normals.end(), more.begin(), more.end());
    return Cone::from_inequalities(normals, a.ambient_rank());
}

std::optional<Vec> is_face_of(const Cone& f, const Cone& c) {
    if (f.ambient_rank() != c.ambient_rank()) return std::nullopt;
    for (const auto& r : f.rays())
        if (!c.contains(r)) return std::nullopt;
    Vec witness = zero_vec(c.ambient_rank());
    std::vector<const Vec*> tight;
    for (const auto& n : c.facet_normals()) {
        bool vanishes = std::all_of(f.rays().begin(), f.rays().end(), [&](const Vec& r) { return dot(n, r) == 0; });
        if (vanishes) {
            tight.push_back(&n);
            witness = witness + n;
        }
    }
    std::vector<Vec> face_rays;
    for (const auto& r : c.rays()) {
        bool on = std::all_of(tight.begin(), tight.end(), [&](const Vec* n) { return dot(*n, r) == 0; });
        if (on) face_rays.push_back(r);
    }
    if (face_rays != f.rays()) return std::nullopt;
    return witness;
}

bool is_simplicial(const Cone& c) { return c.rays().size() == c.dim(); }

Int multiplicity(const Cone& c) {
    if (!is_simplicial(c)) throw Error(ErrorKind::NotSimplicial, "multiplicity of a non-simplicial cone");
    if (c.rays().empty()) return 1;
    return lattice_index(Matrix::from_rows(c.rays(), c.ambient_rank()));
}

bool is_smooth(const Cone& c) { return is_simplicial(c) && multiplicity(c) == 1; }

}  // namespace toric
