#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "charts.hpp"
#include "laurent.hpp"
#include "partitions.hpp"
#include "plabic.hpp"
#include "polyhedra.hpp"

namespace nokit {

// W = sum_i q^{delta_{i,n-k}} W_i; W[i-1] is W_i written in the cluster of P_G (p_empty = 1).
struct SuperpotentialExpansion {
    GridShape shape;
    std::vector<Partition> coords;
    std::vector<Poly> W;
    int q_index = 0;  // = n-k, 1-based

    bool positive() const {
        return std::all_of(W.begin(), W.end(), [](const Poly& p) { return !p.is_zero() && p.has_positive_coefficients(); });
    }
    std::size_t term_count() const {
        std::size_t c = 0;
        for (const auto& w : W) c += w.num_terms();
        return c;
    }
    VarSpace varspace() const { return partition_varspace(coords); }
};

namespace detail {
inline int coord_pos(const std::vector<Partition>& coords, const Partition& p) {
    if (p.empty()) return -1;
    auto it = std::lower_bound(coords.begin(), coords.end(), p);
    if (it == coords.end() || !(*it == p)) throw std::out_of_range("no coordinate " + p.str());
    return static_cast<int>(it - coords.begin());
}

// monomial prod p_num / prod p_den with p_empty = 1
inline Exponent ratio(const std::vector<Partition>& coords, std::initializer_list<Partition> num, std::initializer_list<Partition> den) {
    Exponent e(coords.size(), 0);
    for (const auto& p : num)
        if (int i = coord_pos(coords, p); i >= 0) ++e[i];
    for (const auto& p : den)
        if (int i = coord_pos(coords, p); i >= 0) --e[i];
    return e;
}
}  // namespace detail

inline SuperpotentialExpansion rectangles_superpotential(const GridShape& s) {
    const int R = s.rows(), k = s.k, n = s.n;
    SuperpotentialExpansion X;
    X.shape = s;
    X.coords = rectangle_coords(s);
    X.q_index = R;
    X.W.assign(n, Poly(X.coords.size()));
    auto rect = [](int i, int j) { return Partition::rectangle(i, j); };
    X.W[n - 1].add_term(detail::ratio(X.coords, {rect(1, 1)}, {}), 1);
    for (int i = 2; i <= R; ++i)
        for (int j = 1; j <= k; ++j)
            X.W[i - 2].add_term(detail::ratio(X.coords, {rect(i, j), rect(i - 2, j - 1)}, {rect(i - 1, j - 1), rect(i - 1, j)}), 1);
    X.W[R - 1].add_term(detail::ratio(X.coords, {rect(R - 1, k - 1)}, {rect(R, k)}), 1);
    for (int i = 1; i <= R; ++i)
        for (int j = 2; j <= k; ++j)
            X.W[n - j].add_term(detail::ratio(X.coords, {rect(i, j), rect(i - 1, j - 2)}, {rect(i - 1, j - 1), rect(i, j - 1)}), 1);
    return X;
}

// Faces around the black endpoint of e, minus the two faces beside e; boundary edges weigh 1.
inline std::vector<Exponent> marsh_scott_edge_weights(const PlabicGraph& g, const PlabicInfo& info, const std::vector<Partition>& coords) {
    const Embedding& em = info.em;
    std::vector<Exponent> w(g.num_edges(), Exponent(coords.size(), 0));
    for (int v = g.n(); v < g.num_vertices(); ++v) {
        if (g.color[v] != Color::black) continue;
        const auto& r = g.rot[v];
        const int deg = static_cast<int>(r.size());
        // corner[t] is the face between r[t] and r[t+1]
        std::vector<int> corner(deg);
        for (int t = 0; t < deg; ++t) corner[t] = em.left_face(em.dart_from(r[t], g.other(r[t], v)));
        for (int t = 0; t < deg; ++t)
            for (int u = 0; u < deg; ++u) {
                if (u == t || u == (t - 1 + deg) % deg) continue;
                int pos = detail::coord_pos(coords, info.face_label[corner[u]]);
                if (pos >= 0) ++w[r[t]][pos];
            }
    }
    return w;
}

struct expansion_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// W_i = sum over matchings M with boundary J^i of w_M / prod_{faces} p * p_{mu_{i-1}} prod_{j=i+1}^{i+k} p_{mu_j}
inline SuperpotentialExpansion marsh_scott_expansion(const PlabicGraph& g, const PlabicInfo& info) {
    const GridShape& s = g.shape;
    SuperpotentialExpansion X;
    X.shape = s;
    X.coords = info.coordinates();
    X.q_index = s.rows();
    const std::size_t m = X.coords.size();
    auto w = marsh_scott_edge_weights(g, info, X.coords);
    Exponent base(m, 0);
    for (std::size_t i = 0; i < m; ++i) base[i] = -1;
    for (int i = 1; i <= s.n; ++i) {
        Exponent shift = base;
        auto bump = [&](int j) {
            int pos = detail::coord_pos(X.coords, frozen_mu(mod1(j, s.n), s));
            if (pos >= 0) ++shift[pos];
        };
        bump(i - 1);
        for (int j = i + 1; j <= i + s.k; ++j) bump(j);
        Poly Wi(m);
        auto ms = enumerate_matchings(g, boundary_target_set(i, s));
        if (ms.empty()) throw expansion_error("no matching with boundary J^" + std::to_string(i));
        for (const auto& M : ms) {
            Exponent e = shift;
            for (int ed = 0; ed < g.num_edges(); ++ed)
                if (M[ed])
                    for (std::size_t t = 0; t < m; ++t) e[t] += w[ed][t];
            Wi.add_term(e, 1);
        }
        X.W.push_back(std::move(Wi));
    }
    return X;
}

inline SuperpotentialExpansion marsh_scott_expansion(const PlabicGraph& g) { return marsh_scott_expansion(g, analyze(g)); }

// ---------------------------------------------------------------- Gamma systems

struct TropTerm {
    AffineForm form;
    int slot;  // 1-based i: the inequality is form(v) + r_i >= 0
};

struct TropSystem {
    std::vector<Partition> coords;
    std::vector<TropTerm> terms;
};

inline TropSystem gamma_system(const SuperpotentialExpansion& X) {
    TropSystem T;
    T.coords = X.coords;
    for (int i = 1; i <= static_cast<int>(X.W.size()); ++i) {
        const Poly& Wi = X.W[i - 1];
        for (const auto& f : tropicalize(Wi).forms) T.terms.push_back({f, i});
    }
    return T;
}

inline HPolytope gamma_polytope(const TropSystem& T, const std::vector<Q>& r_vec) {
    HPolytope H;
    H.coords = T.coords;
    std::set<std::pair<QVec, Q>> seen;
    for (const auto& t : T.terms) {
        Ineq h{t.form.a, t.form.c + r_vec.at(t.slot - 1)};
        if (seen.emplace(h.a, h.b).second) H.ineqs.push_back(std::move(h));
    }
    return H;
}

inline std::vector<Q> r_vector(const GridShape& s, const Q& r) {
    std::vector<Q> v(s.n, 0);
    v[s.rows() - 1] = r;
    return v;
}

inline HPolytope gamma_polytope(const SuperpotentialExpansion& X, const Q& r = 1) {
    return gamma_polytope(gamma_system(X), r_vector(X.shape, r));
}

// v_D = -sum_j r_j val(P_{mu_j})
inline QVec translation_vector(const std::vector<Q>& r_vec, const std::vector<Partition>& coords, const GridShape& s) {
    QVec v(coords.size(), 0);
    for (int j = 1; j <= s.n; ++j) {
        auto val = maxdiag_valuation(frozen_mu(j, s), coords);
        for (std::size_t t = 0; t < coords.size(); ++t) v[t] -= r_vec[j - 1] * val[t];
    }
    return v;
}

// ---------------------------------------------------------------- tropical mutation

enum class Trop { min, max };

// One square move seen on coordinates: before/after coordinate orders and the exchanged labels.
struct MutationStep {
    Quiver quiver;  // quiver before the move
    Partition old_label;
    Partition new_label;
    std::vector<Partition> coords_before;
    std::vector<Partition> coords_after;

    static MutationStep make(const Quiver& q, const Partition& old_label, const Partition& new_label) {
        MutationStep m{q, old_label, new_label, {}, {}};
        for (const auto& p : q.labels)
            if (!p.empty()) m.coords_before.push_back(p);
        m.coords_after = m.coords_before;
        std::replace(m.coords_after.begin(), m.coords_after.end(), old_label, new_label);
        std::sort(m.coords_after.begin(), m.coords_after.end());
        return m;
    }

    // sums over arrows into and out of the mutated vertex
    std::pair<QVec, QVec> arrow_forms() const {
        const std::size_t d = coords_before.size();
        int v = quiver.index_of(old_label);
        if (v < 0 || quiver.frozen[v]) throw std::domain_error("trop_mutate: vertex must be mutable");
        QVec in(d, 0), out(d, 0);
        for (int i = 0; i < quiver.size(); ++i) {
            if (quiver.labels[i].empty()) continue;
            int pos = detail::coord_pos(coords_before, quiver.labels[i]);
            int b = quiver.b[i][v];
            if (b > 0) in[pos] += b;
            else if (b < 0) out[pos] += -b;
        }
        return {in, out};
    }

    // reorders a vector on coords_before with the mutated entry replaced
    QVec reorder(const QVec& v, const Q& fresh) const {
        QVec w(v.size());
        for (std::size_t i = 0; i < coords_before.size(); ++i) {
            const Partition& p = coords_before[i] == old_label ? new_label : coords_before[i];
            w[detail::coord_pos(coords_after, p)] = coords_before[i] == old_label ? fresh : v[i];
        }
        return w;
    }

    QVec apply(const QVec& v, Trop mode = Trop::min) const {
        auto [in, out] = arrow_forms();
        Q a = dot(in, v), b = dot(out, v);
        Q m = mode == Trop::min ? std::min(a, b) : std::max(a, b);
        return reorder(v, m - v[detail::coord_pos(coords_before, old_label)]);
    }
};

template <class Int>
std::vector<Int> trop_mutate_point(const MutationStep& step, const std::vector<Int>& v, Trop mode = Trop::min) {
    QVec q;
    for (auto x : v) q.emplace_back(static_cast<long>(x));
    QVec r = step.apply(q, mode);
    std::vector<Int> out;
    for (const auto& x : r) out.push_back(static_cast<Int>(x.get_num().get_si()));
    return out;
}

struct mutation_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Splits P along the bend hyperplane, maps both pieces linearly and takes the hull.
inline QPolytope trop_mutate_polytope(const QPolytope& P, const MutationStep& step) {
    auto [in, out] = step.arrow_forms();
    const std::size_t d = P.dim();
    QVec diff(d);
    for (std::size_t i = 0; i < d; ++i) diff[i] = out[i] - in[i];
    std::set<QVec> image;
    for (int side : {+1, -1}) {
        HPolytope H = P.h;
        QVec a = diff;
        if (side < 0)
            for (auto& x : a) x = -x;
        H.ineqs.push_back({a, 0});
        for (const auto& v : vertices(H)) image.insert(step.apply(v));
    }
    std::vector<QVec> pts(image.begin(), image.end());
    HPolytope hh = hull(step.coords_after, pts);
    QPolytope Q2(hh);
    for (const auto& p : pts)
        if (!Q2.h.contains(p)) throw mutation_error("mapped vertex outside the hull");
    return Q2;
}

}  // namespace nokit
