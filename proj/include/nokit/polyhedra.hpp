#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "field.hpp"
#include "partitions.hpp"

namespace nokit {

using Q = mpq_class;
using QVec = std::vector<Q>;
using IVec = std::vector<long long>;

// a . v + b >= 0
struct Ineq {
    QVec a;
    Q b;
    bool operator==(const Ineq&) const = default;
};

struct HPolytope {
    std::vector<Partition> coords;
    std::vector<Ineq> ineqs;

    std::size_t dim() const { return coords.size(); }
    bool contains(const QVec& v) const {
        for (const auto& h : ineqs) {
            Q s = h.b;
            for (std::size_t i = 0; i < v.size(); ++i) s += h.a[i] * v[i];
            if (s < 0) return false;
        }
        return true;
    }
};

struct unbounded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Q dot(const QVec& a, const QVec& v) {
    Q s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * v[i];
    return s;
}

inline Q eval(const Ineq& h, const QVec& v) { return dot(h.a, v) + h.b; }

// Primitive integer multiple of (a, b).
inline std::vector<mpz_class> primitive(const QVec& a, const Q& b) {
    mpz_class l = 1;
    for (const auto& x : a) l = lcm(l, mpz_class(x.get_den()));
    l = lcm(l, mpz_class(b.get_den()));
    std::vector<mpz_class> out;
    for (const auto& x : a) out.push_back(mpz_class(x * l));
    out.push_back(mpz_class(b * l));
    mpz_class g = 0;
    for (const auto& x : out) g = gcd(g, x);
    if (g != 0)
        for (auto& x : out) x /= g;
    return out;
}

namespace detail {

struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    Bits operator&(const Bits& o) const {
        Bits r;
        r.w.resize(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    bool superset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if ((o.w[i] & ~w[i]) != 0) return false;
        return true;
    }
};

using ZVec = std::vector<mpz_class>;

inline void make_primitive(ZVec& v) {
    mpz_class g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
}

inline mpz_class zdot(const ZVec& a, const ZVec& b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Extreme rays of the pointed cone {y : R y >= 0}; throws when R has a kernel.
inline std::vector<ZVec> extreme_rays(const std::vector<ZVec>& R, std::size_t m) {
    const std::size_t nr = R.size();
    // greedy independent rows
    std::vector<int> basis;
    Matrix<Q> ech;
    for (std::size_t i = 0; i < nr && basis.size() < m; ++i) {
        Matrix<Q> t = ech;
        t.emplace_back();
        for (const auto& x : R[i]) t.back().push_back(Q(x));
        if (rank(t) > static_cast<int>(ech.size())) {
            ech = t;
            basis.push_back(static_cast<int>(i));
        }
    }
    if (basis.size() < m) throw unbounded_error("cone is not pointed (unbounded or lower-dimensional constraint system)");
    struct Ray {
        ZVec x;
        Bits zero;
    };
    std::vector<Ray> rays;
    Matrix<Q> B(m, QVec(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) B[i][j] = Q(R[basis[i]][j]);
    for (std::size_t i = 0; i < m; ++i) {
        QVec e(m, 0);
        e[i] = 1;
        auto y = solve(B, e);
        mpz_class l = 1;
        for (const auto& q : *y) l = lcm(l, mpz_class(q.get_den()));
        Ray r{ZVec(m), Bits(nr)};
        for (std::size_t j = 0; j < m; ++j) r.x[j] = mpz_class((*y)[j] * l);
        make_primitive(r.x);
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) r.zero.set(basis[j]);
        rays.push_back(std::move(r));
    }
    std::vector<char> used(nr, 0);
    for (int b : basis) used[b] = 1;
    for (std::size_t row = 0; row < nr; ++row) {
        if (used[row]) continue;
        std::vector<mpz_class> s(rays.size());
        std::vector<int> pos, neg, zer;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = zdot(R[row], rays[i].x);
            int sg = sgn(s[i]);
            (sg > 0 ? pos : sg < 0 ? neg : zer).push_back(static_cast<int>(i));
        }
        if (neg.empty()) {
            for (int i : zer) rays[i].zero.set(row);
            continue;
        }
        std::vector<Ray> next;
        for (int i : pos) next.push_back(rays[i]);
        for (int i : zer) {
            next.push_back(rays[i]);
            next.back().zero.set(row);
        }
        for (int p : pos)
            for (int q : neg) {
                Bits Z = rays[p].zero & rays[q].zero;
                if (Z.count() + 2 < static_cast<int>(m)) continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (static_cast<int>(t) == p || static_cast<int>(t) == q) continue;
                    if (rays[t].zero.superset_of(Z)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray r{ZVec(m), Z};
                for (std::size_t j = 0; j < m; ++j) r.x[j] = s[p] * rays[q].x[j] - s[q] * rays[p].x[j];
                make_primitive(r.x);
                r.zero.set(row);
                next.push_back(std::move(r));
            }
        rays = std::move(next);
    }
    std::vector<ZVec> out;
    for (auto& r : rays) out.push_back(std::move(r.x));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Exact vertex set of a bounded H-polytope, sorted lexicographically. Empty if infeasible.
inline std::vector<QVec> vertices(const HPolytope& H) {
    const std::size_t d = H.dim();
    std::vector<detail::ZVec> R;
    std::set<detail::ZVec> seen;
    for (const auto& h : H.ineqs) {
        auto z = primitive(h.a, h.b);
        bool trivial = true;
        for (std::size_t i = 0; i < d; ++i)
            if (z[i] != 0) trivial = false;
        if (trivial) {
            if (z[d] < 0) return {};
            continue;
        }
        if (seen.insert(z).second) R.push_back(z);
    }
    detail::ZVec t(d + 1, 0);
    t[d] = 1;
    if (seen.insert(t).second) R.push_back(t);
    std::vector<QVec> out;
    for (const auto& ray : detail::extreme_rays(R, d + 1)) {
        if (ray[d] == 0) throw unbounded_error("polytope is unbounded");
        QVec v(d);
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = Q(ray[i], ray[d]);
            v[i].canonicalize();
        }
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline int affine_rank(const std::vector<QVec>& pts) {
    if (pts.empty()) return -1;
    Matrix<Q> m;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec r(pts[0].size());
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = pts[i][j] - pts[0][j];
        m.push_back(std::move(r));
    }
    return rank(m);
}

// Facet inequalities of the hull of a full-dimensional point set, as primitive integer rows.
inline HPolytope hull(const std::vector<Partition>& coords, const std::vector<QVec>& pts) {
    const std::size_t d = coords.size();
    if (affine_rank(pts) != static_cast<int>(d)) throw std::invalid_argument("hull: point set is not full-dimensional");
    std::vector<detail::ZVec> R;
    for (const auto& p : pts) {
        mpz_class l = 1;
        for (const auto& x : p) l = lcm(l, mpz_class(x.get_den()));
        detail::ZVec z;
        for (const auto& x : p) z.push_back(mpz_class(x * l));
        z.push_back(l);
        R.push_back(std::move(z));
    }
    HPolytope H;
    H.coords = coords;
    for (const auto& ray : detail::extreme_rays(R, d + 1)) {
        Ineq h;
        bool zero_normal = true;
        for (std::size_t i = 0; i < d; ++i) {
            h.a.push_back(Q(ray[i]));
            if (ray[i] != 0) zero_normal = false;
        }
        h.b = Q(ray[d]);
        if (!zero_normal) H.ineqs.push_back(std::move(h));
    }
    return H;
}

struct QPolytope {
    HPolytope h;
    std::vector<QVec> verts;

    explicit QPolytope(HPolytope H) : h(std::move(H)), verts(vertices(h)) {
        for (const auto& v : verts)
            if (!h.contains(v)) throw std::logic_error("vertex violates an inequality");
    }
    QPolytope(HPolytope H, std::vector<QVec> V) : h(std::move(H)), verts(std::move(V)) {}

    std::size_t dim() const { return h.dim(); }
    bool empty() const { return verts.empty(); }
    int affine_dim() const { return affine_rank(verts); }
    bool is_integral() const {
        for (const auto& v : verts)
            for (const auto& x : v)
                if (x.get_den() != 1) return false;
        return true;
    }
    std::vector<QVec> nonintegral_vertices() const {
        std::vector<QVec> out;
        for (const auto& v : verts)
            if (std::any_of(v.begin(), v.end(), [](const Q& x) { return x.get_den() != 1; })) out.push_back(v);
        return out;
    }
};

// Irredundant facets in canonical form (primitive integer rows, sorted); needs full dimension.
inline std::vector<std::vector<mpz_class>> canonical_facets(const QPolytope& P) {
    const std::size_t d = P.dim();
    if (P.affine_dim() != static_cast<int>(d)) throw std::invalid_argument("canonical_facets: polytope is not full-dimensional");
    std::set<std::vector<mpz_class>> out;
    for (const auto& h : P.h.ineqs) {
        std::vector<QVec> tight;
        for (const auto& v : P.verts)
            if (eval(h, v) == 0) tight.push_back(v);
        if (static_cast<int>(tight.size()) >= static_cast<int>(d) && affine_rank(tight) == static_cast<int>(d) - 1)
            out.insert(primitive(h.a, h.b));
    }
    return {out.begin(), out.end()};
}

inline bool same_polytope(const QPolytope& a, const QPolytope& b) { return a.verts == b.verts; }

// Exact volume by a pulling triangulation; 0 for lower-dimensional input.
inline Q volume(const QPolytope& P) {
    const int d = static_cast<int>(P.dim());
    if (P.empty() || P.affine_dim() < d) return 0;
    const auto& V = P.verts;
    std::vector<std::vector<int>> tight;
    for (const auto& h : P.h.ineqs) {
        std::vector<int> t;
        for (int i = 0; i < static_cast<int>(V.size()); ++i)
            if (eval(h, V[i]) == 0) t.push_back(i);
        tight.push_back(std::move(t));
    }
    auto pts = [&](const std::vector<int>& S) {
        std::vector<QVec> p;
        for (int i : S) p.push_back(V[i]);
        return p;
    };
    Q total = 0;
    std::vector<int> apex;
    auto rec = [&](auto&& self, const std::vector<int>& S, int k) -> void {
        if (k == 0) {
            apex.push_back(S[0]);
            Matrix<Q> m;
            for (std::size_t i = 1; i < apex.size(); ++i) {
                QVec r(d);
                for (int j = 0; j < d; ++j) r[j] = V[apex[i]][j] - V[apex[0]][j];
                m.push_back(std::move(r));
            }
            Q det = determinant(m);
            total += det < 0 ? Q(-det) : det;
            apex.pop_back();
            return;
        }
        int v0 = S[0];
        std::set<std::vector<int>> facets;
        for (const auto& t : tight) {
            std::vector<int> F;
            std::set_intersection(S.begin(), S.end(), t.begin(), t.end(), std::back_inserter(F));
            if (static_cast<int>(F.size()) < k || std::binary_search(F.begin(), F.end(), v0)) continue;
            if (F.size() == S.size()) continue;
            if (affine_rank(pts(F)) == k - 1) facets.insert(F);
        }
        apex.push_back(v0);
        for (const auto& F : facets) self(self, F, k - 1);
        apex.pop_back();
    };
    std::vector<int> all(V.size());
    std::iota(all.begin(), all.end(), 0);
    rec(rec, all, d);
    Q fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    return total / fact;
}

// ---------------------------------------------------------------- lattice points

inline long long floor_q(const Q& x) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return f.get_si();
}
inline long long ceil_q(const Q& x) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return c.get_si();
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

// Integer points of r*P, sorted.
inline std::vector<IVec> lattice_points(const QPolytope& P, long long r = 1) {
    if (r < 0) throw std::invalid_argument("lattice_points: negative dilation");
    if (P.empty()) return {};
    const int d = static_cast<int>(P.dim());
    std::vector<long long> lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        Q mn = P.verts[0][j], mx = mn;
        for (const auto& v : P.verts) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = ceil_q(mn * Q(static_cast<long>(r)));
        hi[j] = floor_q(mx * Q(static_cast<long>(r)));
        if (lo[j] > hi[j]) return {};
    }
    struct IH {
        std::vector<long long> a;
        long long b;
        std::vector<long long> suffix;  // suffix[i] = max of sum_{j>i} a_j x_j over the box
    };
    std::vector<IH> hs;
    for (const auto& h : P.h.ineqs) {
        auto z = primitive(h.a, h.b * Q(static_cast<long>(r)));
        IH ih;
        for (int j = 0; j < d; ++j) ih.a.push_back(z[j].get_si());
        ih.b = z[d].get_si();
        ih.suffix.assign(d, 0);
        long long s = 0;
        for (int j = d - 1; j >= 0; --j) {
            ih.suffix[j] = s;
            s += std::max(ih.a[j] * lo[j], ih.a[j] * hi[j]);
        }
        hs.push_back(std::move(ih));
    }
    std::vector<IVec> out;
    IVec x(d);
    std::vector<long long> partial(hs.size());
    for (std::size_t t = 0; t < hs.size(); ++t) partial[t] = hs[t].b;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == d) {
            out.push_back(x);
            return;
        }
        long long L = lo[i], U = hi[i];
        for (std::size_t t = 0; t < hs.size(); ++t) {
            const auto& h = hs[t];
            long long rhs = -partial[t] - h.suffix[i];  // need a_i x_i >= rhs
            if (h.a[i] > 0) L = std::max(L, ceil_div(rhs, h.a[i]));
            else if (h.a[i] < 0) U = std::min(U, floor_div(rhs, h.a[i]));
            else if (rhs > 0) return;
            if (L > U) return;
        }
        for (long long v = L; v <= U; ++v) {
            x[i] = v;
            for (std::size_t t = 0; t < hs.size(); ++t) partial[t] += hs[t].a[i] * v;
            self(self, i + 1);
            for (std::size_t t = 0; t < hs.size(); ++t) partial[t] -= hs[t].a[i] * v;
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------- Gelfand-Tsetlin

// Rectangles i x j, 1 <= i <= n-k, 1 <= j <= k, in canonical order.
inline std::vector<Partition> rectangle_coords(const GridShape& s) {
    std::vector<Partition> c;
    for (int i = 1; i <= s.rows(); ++i)
        for (int j = 1; j <= s.k; ++j) c.push_back(Partition::rectangle(i, j));
    std::sort(c.begin(), c.end());
    return c;
}

namespace detail {
inline int rect_index(const std::vector<Partition>& coords, int i, int j) {
    if (i <= 0 || j <= 0) return -1;
    auto p = Partition::rectangle(i, j);
    auto it = std::lower_bound(coords.begin(), coords.end(), p);
    return static_cast<int>(it - coords.begin());
}
}  // namespace detail

inline HPolytope gt_polytope(const GridShape& s, const Q& r) {
    HPolytope H;
    H.coords = rectangle_coords(s);
    const std::size_t d = H.dim();
    auto idx = [&](int i, int j) { return detail::rect_index(H.coords, i, j); };
    auto add = [&](std::initializer_list<std::pair<int, int>> terms, const Q& b) {
        Ineq h{QVec(d, 0), b};
        for (auto [c, coef] : terms) h.a[c] += coef;
        H.ineqs.push_back(std::move(h));
    };
    add({{idx(1, 1), 1}}, 0);
    add({{idx(s.rows(), s.k), -1}}, r);
    for (int i = 1; i <= s.rows(); ++i)
        for (int j = 1; j <= s.k; ++j) {
            if (i >= 2) add({{idx(i, j), 1}, {idx(i - 1, j), -1}}, 0);
            if (j >= 2) add({{idx(i, j), 1}, {idx(i, j - 1), -1}}, 0);
        }
    return H;
}

// f_{i x j} = v_{i x j} - v_{(i-1) x (j-1)}
inline Matrix<Q> gt_map_matrix(const GridShape& s) {
    auto coords = rectangle_coords(s);
    const std::size_t d = coords.size();
    Matrix<Q> F(d, QVec(d, 0));
    for (int i = 1; i <= s.rows(); ++i)
        for (int j = 1; j <= s.k; ++j) {
            int a = detail::rect_index(coords, i, j);
            F[a][a] = 1;
            int b = detail::rect_index(coords, i - 1, j - 1);
            if (b >= 0) F[a][b] = -1;
        }
    return F;
}

inline QVec gt_map_F(const GridShape& s, const QVec& v) {
    auto F = gt_map_matrix(s);
    QVec f(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) f[i] = dot(F[i], v);
    return f;
}

// telescoping sum along the diagonal
inline QVec gt_map_F_inv(const GridShape& s, const QVec& f) {
    auto coords = rectangle_coords(s);
    QVec v(f.size(), 0);
    for (int i = 1; i <= s.rows(); ++i)
        for (int j = 1; j <= s.k; ++j) {
            Q acc = 0;
            for (int t = 0; i - t >= 1 && j - t >= 1; ++t) acc += f[detail::rect_index(coords, i - t, j - t)];
            v[detail::rect_index(coords, i, j)] = acc;
        }
    return v;
}

// Image of an H-polytope in v-coordinates under F: a.v + b >= 0 becomes (a F^{-1}).f + b >= 0.
inline HPolytope gt_map_polytope(const GridShape& s, const HPolytope& H) {
    const std::size_t d = H.dim();
    HPolytope out;
    out.coords = H.coords;
    Matrix<Q> Finv(d, QVec(d, 0));  // columns are images of unit vectors
    for (std::size_t c = 0; c < d; ++c) {
        QVec e(d, 0);
        e[c] = 1;
        QVec col = gt_map_F_inv(s, e);
        for (std::size_t r = 0; r < d; ++r) Finv[r][c] = col[r];
    }
    for (const auto& h : H.ineqs) {
        Ineq g{QVec(d, 0), h.b};
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t r = 0; r < d; ++r) g.a[c] += h.a[r] * Finv[r][c];
        out.ineqs.push_back(std::move(g));
    }
    return out;
}

// prod_{i=1..k} (k-i)! / (n-i)!
inline Q gamma_volume_formula(const GridShape& s) {
    auto fact = [](int m) {
        mpz_class f = 1;
        for (int t = 2; t <= m; ++t) f *= t;
        return f;
    };
    Q v = 1;
    for (int i = 1; i <= s.k; ++i) v *= Q(fact(s.k - i), fact(s.n - i));
    v.canonicalize();
    return v;
}

// Integral interlacing patterns with top row (r^{n-k}, 0^k), by brute force.
inline long long gt_pattern_count(const GridShape& s, int r) {
    std::vector<int> top(s.n, 0);
    for (int i = 0; i < s.rows(); ++i) top[i] = r;
    std::map<std::vector<int>, long long> memo;
    auto rec = [&](auto&& self, const std::vector<int>& row) -> long long {
        if (row.size() == 1) return 1;
        auto it = memo.find(row);
        if (it != memo.end()) return it->second;
        long long total = 0;
        std::vector<int> next(row.size() - 1);
        auto fill = [&](auto&& fself, std::size_t i) -> void {
            if (i == next.size()) {
                total += self(self, next);
                return;
            }
            for (int v = row[i + 1]; v <= row[i]; ++v) {
                next[i] = v;
                fself(fself, i + 1);
            }
        };
        fill(fill, 0);
        memo.emplace(row, total);
        return total;
    };
    return rec(rec, top);
}

// ---------------------------------------------------------------- IDP

// Smallest r <= r_max such that Lattice(s r P) is the s-fold sum of Lattice(r P) for all s <= s_max.
inline std::optional<int> idp_r(const QPolytope& P, int r_max = 4, int s_max = 3) {
    for (int r = 1; r <= r_max; ++r) {
        auto base = lattice_points(P, r);
        std::set<IVec> sum(base.begin(), base.end());
        bool ok = true;
        for (int s = 2; s <= s_max && ok; ++s) {
            std::set<IVec> next;
            for (const auto& a : sum)
                for (const auto& b : base) {
                    IVec c(a.size());
                    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
                    next.insert(std::move(c));
                }
            sum = std::move(next);
            auto target = lattice_points(P, static_cast<long long>(s) * r);
            ok = std::set<IVec>(target.begin(), target.end()) == sum;
        }
        if (ok) return r;
    }
    return std::nullopt;
}

inline std::string q_str(const Q& x) { return x.get_str(); }

}  // namespace nokit
