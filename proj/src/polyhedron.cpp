#include "toric/polyhedron.hpp"

#include <algorithm>
#include <map>

namespace toric {

namespace {

Rat dot_rat(const Vec& a, const RatVec& x) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
    return s;
}

Int denominator_lcm(const RatVec& x) {
    Int l = 1;
    for (const auto& q : x) l = lcm(l, q.get_den());
    return l;
}

Int floor_of(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int ceil_of(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Affine rank of the points is at least k.
bool affinely_spans(const std::vector<Vec>& pts, std::size_t k, std::size_t d) {
    if (pts.empty()) return false;
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    return rank_of(diffs, d) >= k;
}

}  // namespace

bool Halfspace::contains(const RatVec& x) const { return dot_rat(normal, x) >= offset; }
bool Halfspace::tight_at(const RatVec& x) const { return dot_rat(normal, x) == offset; }
bool Halfspace::operator<(const Halfspace& other) const {
    if (normal != other.normal) return normal < other.normal;
    return offset < other.offset;
}

Polyhedron Polyhedron::from_inequalities(const std::vector<Halfspace>& halfspaces, std::size_t rank) {
    std::vector<Vec> rows;
    for (const auto& h : halfspaces) {
        if (h.normal.size() != rank) throw Error(ErrorKind::InvalidInput, "inequality of wrong rank");
        // <a,x> >= p/q  <=>  q<a,x> - p t >= 0
        Vec row = h.offset.get_den() * h.normal;
        row.push_back(-h.offset.get_num());
        rows.push_back(std::move(row));
    }
    rows.push_back(unit_vec(rank + 1, rank));
    return from_cone(dual(GeneralCone::from_generators(rows, {}, rank + 1)), rank);
}

Polyhedron Polyhedron::from_generators(const std::vector<RatVec>& vertices, const std::vector<Vec>& rays,
                                       std::size_t rank) {
    if (vertices.empty()) throw Error(ErrorKind::EmptyPolyhedron, "no vertices given");
    std::vector<Vec> gens;
    for (const auto& v : vertices) {
        if (v.size() != rank) throw Error(ErrorKind::InvalidInput, "vertex of wrong rank");
        Int den = denominator_lcm(v);
        Vec g;
        for (const auto& q : v) g.push_back(Rat(q * den).get_num());
        g.push_back(den);
        gens.push_back(std::move(g));
    }
    for (const auto& r : rays) {
        if (r.size() != rank) throw Error(ErrorKind::InvalidInput, "ray of wrong rank");
        Vec g = r;
        g.push_back(0);
        gens.push_back(std::move(g));
    }
    return from_cone(GeneralCone::from_generators(gens, {}, rank + 1), rank);
}

Polyhedron Polyhedron::from_cone(const GeneralCone& c, std::size_t rank) {
    bool has_vertex = std::any_of(c.rays.begin(), c.rays.end(), [&](const Vec& r) { return r[rank] > 0; });
    if (!has_vertex) throw Error(ErrorKind::EmptyPolyhedron, "the inequalities have no common solution");
    if (!c.pointed()) throw Error(ErrorKind::NotPointed, "polyhedron contains a line");
    if (!c.equations.empty()) throw Error(ErrorKind::NotFullDimensional, "polyhedron has empty interior");

    Polyhedron p;
    p.rank_ = rank;
    p.homog_ = Cone::from_general(c);
    const auto& hr = p.homog_.rays();
    const auto& hf = p.homog_.facet_normals();

    std::vector<std::pair<RatVec, std::size_t>> verts;
    std::vector<std::pair<Vec, std::size_t>> rays;
    for (std::size_t i = 0; i < hr.size(); ++i) {
        if (hr[i][rank] > 0) {
            RatVec x(rank);
            for (std::size_t j = 0; j < rank; ++j) x[j] = Rat(hr[i][j], hr[i][rank]);
            for (auto& q : x) q.canonicalize();
            verts.emplace_back(std::move(x), i);
        } else {
            rays.emplace_back(Vec(hr[i].begin(), hr[i].end() - 1), i);
        }
    }
    std::sort(verts.begin(), verts.end());
    std::sort(rays.begin(), rays.end());
    std::map<std::size_t, std::pair<bool, std::size_t>> ray_slot;  // homog ray -> (is vertex, index)
    for (std::size_t i = 0; i < verts.size(); ++i) {
        p.vertices_.push_back(verts[i].first);
        ray_slot[verts[i].second] = {true, i};
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
        p.rays_.push_back(rays[i].first);
        ray_slot[rays[i].second] = {false, i};
    }

    std::vector<std::pair<Halfspace, std::size_t>> ineqs;
    for (std::size_t f = 0; f < hf.size(); ++f) {
        Vec a(hf[f].begin(), hf[f].end() - 1);
        if (is_zero(a)) continue;  // t >= 0
        Int g = gcd_of(a);
        Halfspace h{primitive(a), Rat(-hf[f][rank], g)};
        h.offset.canonicalize();
        ineqs.emplace_back(std::move(h), f);
    }
    std::sort(ineqs.begin(), ineqs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::map<std::size_t, std::size_t> facet_slot;
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
        p.ineqs_.push_back(ineqs[i].first);
        facet_slot[ineqs[i].second] = i;
    }

    for (const auto& cf : toric::faces(p.homog_)) {
        PolyFace face;
        for (std::size_t r : cf.rays) {
            auto [is_vertex, idx] = ray_slot[r];
            (is_vertex ? face.vertices : face.rays).push_back(idx);
        }
        if (face.vertices.empty()) continue;
        std::sort(face.vertices.begin(), face.vertices.end());
        std::sort(face.rays.begin(), face.rays.end());
        for (std::size_t t : cf.tight) {
            auto it = facet_slot.find(t);
            if (it != facet_slot.end()) face.tight.push_back(it->second);
        }
        std::sort(face.tight.begin(), face.tight.end());
        face.dim = cf.dim - 1;
        face.sample = RatVec(rank, Rat(0));
        for (std::size_t v : face.vertices)
            for (std::size_t j = 0; j < rank; ++j) face.sample[j] += p.vertices_[v][j];
        for (auto& q : face.sample) q /= Rat(static_cast<long>(face.vertices.size()));
        for (std::size_t r : face.rays)
            for (std::size_t j = 0; j < rank; ++j) face.sample[j] += p.rays_[r][j];
        p.faces_.push_back(std::move(face));
    }
    std::stable_sort(p.faces_.begin(), p.faces_.end(),
                     [](const PolyFace& a, const PolyFace& b) { return a.dim < b.dim; });
    return p;
}

bool Polyhedron::contains(const RatVec& x) const {
    return std::all_of(ineqs_.begin(), ineqs_.end(), [&](const Halfspace& h) { return h.contains(x); });
}

bool is_lattice_polyhedron(const Polyhedron& p) {
    const std::size_t d = p.ambient_rank();
    for (const auto& f : p.faces()) {
        // Bounding box of the vertices and their translates by each ray.
        std::vector<RatVec> pts;
        for (std::size_t v : f.vertices) {
            pts.push_back(p.vertices()[v]);
            for (std::size_t r : f.rays) {
                RatVec w = p.vertices()[v];
                for (std::size_t j = 0; j < d; ++j) w[j] += p.rays()[r][j];
                pts.push_back(std::move(w));
            }
        }
        Vec lo(d), hi(d);
        for (std::size_t j = 0; j < d; ++j) {
            lo[j] = ceil_of(pts[0][j]);
            hi[j] = floor_of(pts[0][j]);
            for (const auto& q : pts) {
                lo[j] = std::min(lo[j], ceil_of(q[j]));
                hi[j] = std::max(hi[j], floor_of(q[j]));
            }
        }
        bool empty_box = false;
        for (std::size_t j = 0; j < d; ++j) empty_box = empty_box || lo[j] > hi[j];
        if (empty_box) return false;

        std::vector<Vec> found;
        Vec x = lo;
        while (true) {
            RatVec xr = to_rat(x);
            bool in_face = p.contains(xr) && std::all_of(f.tight.begin(), f.tight.end(), [&](std::size_t t) {
                               return p.inequalities()[t].tight_at(xr);
                           });
            if (in_face) found.push_back(x);
            std::size_t j = 0;
            while (j < d) {
                x[j] += 1;
                if (x[j] <= hi[j]) break;
                x[j] = lo[j];
                ++j;
            }
            if (j == d) break;
        }
        if (f.dim == 0 ? found.empty() : !affinely_spans(found, f.dim, d)) return false;
    }
    return true;
}

GeneralCone tangent_cone(const Polyhedron& p, const PolyFace& f) {
    std::vector<Vec> normals;
    for (std::size_t t : f.tight) normals.push_back(p.inequalities()[t].normal);
    return dual(GeneralCone::from_generators(normals, {}, p.ambient_rank()));
}

AffineMonoid face_monoid(const Polyhedron& p, const PolyFace& f) {
    std::vector<Vec> lattice;
    for (std::size_t i = 0; i < p.ambient_rank(); ++i) lattice.push_back(unit_vec(p.ambient_rank(), i));
    return AffineMonoid::saturated(tangent_cone(p, f), lattice);
}

Cone normal_cone(const Polyhedron& p, const PolyFace& f) {
    std::vector<Vec> normals;
    for (std::size_t t : f.tight) normals.push_back(p.inequalities()[t].normal);
    return Cone::from_rays(normals, p.ambient_rank());
}

MonoidCollection monoid_collection_of_polyhedron(const Polyhedron& p) {
    if (!is_lattice_polyhedron(p)) throw Error(ErrorKind::NotLatticePolyhedron, "polyhedron has a face without enough lattice points");
    std::vector<AffineMonoid> monoids;
    for (const auto& f : p.faces()) monoids.push_back(face_monoid(p, f));
    auto report = validate_collection(monoids);
    if (!report.valid) throw Error(ErrorKind::InvalidInput, "face monoids fail validation: " + report.violations.front().message);
    return std::move(*report.collection);
}

Polyhedron newton_polyhedron(const MonoidIdeal& a) {
    if (a.empty()) throw Error(ErrorKind::EmptyPolyhedron, "empty ideal");
    const AffineMonoid& s = a.monoid();
    if (!s.cone().pointed()) throw Error(ErrorKind::NotPointed, "Newton polyhedron of a monoid with units");
    std::vector<RatVec> points;
    for (const auto& g : a.generators()) points.push_back(to_rat(g));
    Polyhedron p = Polyhedron::from_generators(points, s.cone().rays, s.ambient_rank());
    if (!is_lattice_polyhedron(p)) throw Error(ErrorKind::NotLatticePolyhedron, "Newton polyhedron is not a lattice polyhedron");
    return p;
}

Polyhedron truncate(const Polyhedron& p, const Halfspace& halfspace) {
    if (p.is_bounded()) throw Error(ErrorKind::NotTruncating, "polyhedron is already bounded");
    std::vector<Halfspace> hs = p.inequalities();
    hs.push_back(halfspace);
    Polyhedron q = [&] {
        try {
            return Polyhedron::from_inequalities(hs, p.ambient_rank());
        } catch (const Error& e) {
            throw Error(ErrorKind::NotTruncating, std::string("truncation degenerates: ") + e.what());
        }
    }();
    if (!q.is_bounded()) throw Error(ErrorKind::NotTruncating, "truncation is unbounded");
    for (const auto& h : p.inequalities()) {
        bool kept = std::any_of(q.inequalities().begin(), q.inequalities().end(),
                                [&](const Halfspace& g) { return g.normal == h.normal; });
        if (!kept) throw Error(ErrorKind::NotTruncating, "truncation drops the facet with normal " + to_string(h.normal));
    }
    return q;
}

}  // namespace toric
