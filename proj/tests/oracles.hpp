#pragma once

// Slow, independent reference computations used to check the library. They only share the
// number types with it: determinants by rational elimination, facets by brute force over
// ray subsets, Hilbert bases and monoid membership by exhaustive enumeration.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;
using ZVec = std::vector<Z>;

inline std::size_t rank(const std::vector<ZVec>& rows, std::size_t cols) {
    std::vector<std::vector<Q>> a;
    for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < a.size(); ++c) {
        std::size_t p = rk;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rk]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rk || a[i][c] == 0) continue;
            Q f = a[i][c] / a[rk][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rk][j];
        }
        ++rk;
    }
    return rk;
}

inline Z det(std::vector<ZVec> m) {
    std::size_t n = m.size();
    std::vector<std::vector<Q>> a;
    for (const auto& r : m) a.emplace_back(r.begin(), r.end());
    Q d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Q f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d.get_num();
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            fn(idx);
            return;
        }
        for (std::size_t i = start; i + (k - pos) <= n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

/// gcd of all k x k minors; D_0 = 1.
inline Z minors_gcd(const std::vector<ZVec>& a, std::size_t k) {
    if (k == 0) return 1;
    std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    Z g = 0;
    if (k > rows || k > cols) return 0;
    for_each_subset(rows, k, [&](const std::vector<std::size_t>& ri) {
        for_each_subset(cols, k, [&](const std::vector<std::size_t>& ci) {
            std::vector<ZVec> sub;
            for (auto i : ri) {
                ZVec row;
                for (auto j : ci) row.push_back(a[i][j]);
                sub.push_back(row);
            }
            Z d = det(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        });
    });
    return g;
}

/// Nonzero invariant factors D_k / D_{k-1}.
inline std::vector<Z> invariant_factors(const std::vector<ZVec>& a) {
    std::vector<Z> out;
    Z prev = 1;
    for (std::size_t k = 1;; ++k) {
        Z dk = minors_gcd(a, k);
        if (dk == 0) break;
        out.push_back(dk / prev);
        prev = dk;
    }
    return out;
}

inline ZVec primitive(ZVec v) {
    Z g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

inline Z dot(const ZVec& a, const ZVec& b) {
    Z s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Normal to d-1 vectors in Z^d via cofactors (generalized cross product).
inline ZVec cross(const std::vector<ZVec>& vs, std::size_t d) {
    ZVec n(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<ZVec> sub;
        for (const auto& v : vs) {
            ZVec row;
            for (std::size_t c = 0; c < d; ++c)
                if (c != j) row.push_back(v[c]);
            sub.push_back(row);
        }
        n[j] = det(sub) * ((j % 2 == 0) ? 1 : -1);
    }
    return n;
}

/// Primitive inner facet normals of a full-dimensional cone, sorted.
inline std::vector<ZVec> facets(const std::vector<ZVec>& rays, std::size_t d) {
    std::set<ZVec> out;
    if (d == 1) {
        bool pos = false, neg = false;
        for (const auto& r : rays) (r[0] > 0 ? pos : neg) = true;
        if (pos && !neg) out.insert(ZVec{1});
        if (neg && !pos) out.insert(ZVec{-1});
        return {out.begin(), out.end()};
    }
    for_each_subset(rays.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<ZVec> vs;
        for (auto i : idx) vs.push_back(rays[i]);
        ZVec n = cross(vs, d);
        bool nonzero = std::any_of(n.begin(), n.end(), [](const Z& x) { return x != 0; });
        if (!nonzero) return;
        bool pos = false, neg = false;
        for (const auto& r : rays) {
            Z s = dot(n, r);
            if (s > 0) pos = true;
            if (s < 0) neg = true;
        }
        if (pos && neg) return;
        if (neg)
            for (auto& x : n) x = -x;
        out.insert(primitive(n));
    });
    return {out.begin(), out.end()};
}

inline bool in_cone(const std::vector<ZVec>& facet_normals, const ZVec& x) {
    for (const auto& n : facet_normals)
        if (dot(n, x) < 0) return false;
    return true;
}

/// Rational λ with Σ λ_i rows_i = x for linearly independent rows, if x is in their span.
inline std::optional<std::vector<Q>> solve(const std::vector<ZVec>& rows, const ZVec& x) {
    std::size_t r = rows.size(), d = x.size();
    // Augmented system: d equations in r unknowns.
    std::vector<std::vector<Q>> a(d, std::vector<Q>(r + 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < r; ++j) a[i][j] = rows[j][i];
        a[i][r] = x[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < r && row < d; ++c) {
        std::size_t p = row;
        while (p < d && a[p][c] == 0) ++p;
        if (p == d) continue;
        std::swap(a[p], a[row]);
        for (std::size_t i = 0; i < d; ++i) {
            if (i == row || a[i][c] == 0) continue;
            Q f = a[i][c] / a[row][c];
            for (std::size_t j = c; j <= r; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t i = row; i < d; ++i)
        if (a[i][r] != 0) return std::nullopt;
    std::vector<Q> lambda(r, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) lambda[pivot_col[i]] = a[i][r] / a[i][pivot_col[i]];
    return lambda;
}

/// k·h for the least k clearing the denominators of h = Σ λ_i g_i, λ >= 0, over the first
/// maximal independent subset of generators that contains h in its cone (Carathéodory).
/// That multiple is a nonnegative integer combination, so lies in N·gens. Empty if h is not
/// in the cone.
inline std::optional<ZVec> caratheodory_multiple(const std::vector<ZVec>& gens, const ZVec& h) {
    std::size_t d = h.size(), r = rank(gens, d);
    std::optional<ZVec> out;
    for_each_subset(gens.size(), r, [&](const std::vector<std::size_t>& idx) {
        if (out) return;
        std::vector<ZVec> t;
        for (auto i : idx) t.push_back(gens[i]);
        if (rank(t, d) < r) return;
        auto lambda = solve(t, h);
        if (!lambda) return;
        Z k = 1;
        for (const auto& l : *lambda) {
            if (l < 0) return;
            mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), l.get_den_mpz_t());
        }
        ZVec m(h);
        for (auto& c : m) c *= k;
        out = m;
    });
    return out;
}

using LVec = std::vector<long long>;

/// Hilbert basis of a full-dimensional pointed cone by enumerating lattice points of
/// degree at most W = sum of ray degrees, for w = sum of facet normals. Every Hilbert basis
/// element lies in a half-open parallelepiped of some simplicial subcone, so has degree < W.
/// Empty when the degree-W slice does not fit in the box [-radius, radius]^d.
inline std::optional<std::set<LVec>> hilbert_basis(const std::vector<ZVec>& rays, std::size_t d, long radius) {
    auto normals = facets(rays, d);
    ZVec w(d, 0);
    for (const auto& n : normals)
        for (std::size_t i = 0; i < d; ++i) w[i] += n[i];
    Z total = 0;
    for (const auto& r : rays) {
        Z wr = dot(w, r);
        if (wr <= 0) return std::nullopt;
        total += wr;
    }
    for (const auto& r : rays) {
        Z wr = dot(w, r);
        for (const auto& x : r)
            if (abs(x) * total > Z(radius) * wr) return std::nullopt;
    }
    std::vector<std::vector<long long>> nl;
    for (const auto& n : normals) {
        LVec row;
        for (const auto& x : n) row.push_back(x.get_si());
        nl.push_back(row);
    }
    LVec wl;
    for (const auto& x : w) wl.push_back(x.get_si());
    long long top = total.get_si();
    std::set<LVec> points;
    LVec x(d, -radius);
    while (true) {
        bool inside = true;
        for (const auto& n : nl) {
            long long s = 0;
            for (std::size_t i = 0; i < d; ++i) s += n[i] * x[i];
            if (s < 0) {
                inside = false;
                break;
            }
        }
        if (inside) {
            long long deg = 0;
            for (std::size_t i = 0; i < d; ++i) deg += wl[i] * x[i];
            if (deg > 0 && deg <= top) points.insert(x);
        }
        std::size_t i = 0;
        while (i < d && x[i] == radius) x[i++] = -radius;
        if (i == d) break;
        ++x[i];
    }
    std::set<LVec> basis;
    for (const auto& p : points) {
        bool reducible = false;
        for (const auto& q : points) {
            if (q == p) continue;
            LVec diff(d);
            for (std::size_t i = 0; i < d; ++i) diff[i] = p[i] - q[i];
            if (points.count(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.insert(p);
    }
    return basis;
}

/// x in N·gens using at most max_terms generators.
inline bool in_monoid(const std::vector<LVec>& gens, const LVec& x, std::size_t max_terms) {
    std::set<LVec> frontier{LVec(x.size(), 0)};
    std::set<LVec> seen = frontier;
    if (seen.count(x)) return true;
    for (std::size_t k = 0; k < max_terms; ++k) {
        std::set<LVec> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                LVec q(p);
                for (std::size_t i = 0; i < q.size(); ++i) q[i] += g[i];
                if (q == x) return true;
                if (seen.insert(q).second) next.insert(q);
            }
        frontier = std::move(next);
    }
    return false;
}

/// Order of a in Z^r / A·Z^d for A with rows the rays (r x d): the index of the column
/// lattice of A inside that of [A | a]. Empty when a is not in the rational span.
inline std::optional<Z> local_order(const std::vector<ZVec>& ray_rows, const ZVec& a) {
    std::size_t r = ray_rows.size();
    if (r == 0) return Z(1);
    std::size_t d = ray_rows[0].size();
    // Rows of the transpose span the image lattice.
    std::vector<ZVec> img(d, ZVec(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < d; ++j) img[j][i] = ray_rows[i][j];
    std::vector<ZVec> ext = img;
    ext.push_back(a);
    std::size_t rk = rank(img, r);
    if (rank(ext, r) != rk) return std::nullopt;
    if (rk == 0) return Z(1);
    return minors_gcd(img, rk) / minors_gcd(ext, rk);
}

/// Index of the sublattice generated by the rows in its saturation.
inline Z multiplicity(const std::vector<ZVec>& rays) {
    if (rays.empty()) return 1;
    return minors_gcd(rays, rank(rays, rays[0].size()));
}

}  // namespace oracle
