#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "partitions.hpp"

namespace nokit {

enum class Color : std::uint8_t { boundary, black, white };

inline const char* color_name(Color c) {
    switch (c) {
        case Color::boundary: return "boundary";
        case Color::black: return "black";
        case Color::white: return "white";
    }
    return "?";
}

struct structure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertices 0..n-1 are the boundary vertices 1..n (clockwise).
// rot[v] lists the incident edge ids of v in clockwise order.
struct PlabicGraph {
    GridShape shape;
    std::vector<Color> color;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> rot;

    int n() const { return shape.n; }
    int num_vertices() const { return static_cast<int>(color.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    bool is_boundary(int v) const { return v < shape.n; }
    int other(int e, int v) const { return edges[e][0] == v ? edges[e][1] : edges[e][0]; }
    int degree(int v) const { return static_cast<int>(rot[v].size()); }

    int add_vertex(Color c) {
        color.push_back(c);
        rot.emplace_back();
        return num_vertices() - 1;
    }
    int add_edge(int u, int v) {
        edges.push_back({u, v});
        return num_edges() - 1;
    }

    void validate() const {
        if (static_cast<int>(rot.size()) != num_vertices()) throw structure_error("rotation table size");
        std::vector<int> seen(num_edges(), 0);
        for (int v = 0; v < num_vertices(); ++v) {
            if (is_boundary(v) != (color[v] == Color::boundary)) throw structure_error("boundary vertices must come first");
            for (int e : rot[v]) {
                if (e < 0 || e >= num_edges() || (edges[e][0] != v && edges[e][1] != v)) throw structure_error("rotation lists a non-incident edge");
                ++seen[e];
            }
            if (is_boundary(v)) {
                if (degree(v) != 1) throw structure_error("boundary vertex must have exactly one edge");
                int w = other(rot[v][0], v);
                if (color[w] != Color::white) throw structure_error("boundary vertex must be adjacent to a white vertex");
            } else if (degree(v) < 2) {
                throw structure_error("internal leaf or isolated vertex");
            }
        }
        for (int e = 0; e < num_edges(); ++e) {
            if (seen[e] != 2) throw structure_error("edge not listed exactly once at each endpoint");
            auto [a, b] = edges[e];
            if (a == b) throw structure_error("loop edge");
            if (!is_boundary(a) && !is_boundary(b) && color[a] == color[b]) throw structure_error("graph is not bipartite");
        }
    }
};

// Faces of the disk embedding. Virtual edges E+i join boundary vertex i to i+1 (0-based)
// so that the boundary circle closes; the outer face is the one beyond the circle.
struct Embedding {
    int E = 0;
    int n = 0;
    std::vector<std::array<int, 2>> xedges;
    std::vector<std::vector<int>> xrot;
    std::vector<std::array<int, 2>> pos;  // position of edge in the rotation of each endpoint
    std::vector<int> face_of_dart;
    std::vector<std::vector<int>> face_darts;
    int outer = -1;
    std::vector<bool> frozen;

    int num_faces() const { return static_cast<int>(face_darts.size()); }
    int tail(int d) const { return xedges[d >> 1][d & 1]; }
    int head(int d) const { return xedges[d >> 1][(d & 1) ^ 1]; }
    int edge(int d) const { return d >> 1; }
    bool is_virtual(int d) const { return (d >> 1) >= E; }
    int dart_from(int e, int v) const { return 2 * e + (xedges[e][0] == v ? 0 : 1); }
    int left_face(int d) const { return face_of_dart[d]; }
    int right_face(int d) const { return face_of_dart[d ^ 1]; }

    int rot_index(int e, int v) const { return xedges[e][0] == v ? pos[e][0] : pos[e][1]; }
    int next_in_face(int d) const {
        int v = head(d);
        const auto& r = xrot[v];
        int i = rot_index(edge(d), v);
        int e2 = r[(i + 1) % r.size()];
        return dart_from(e2, v);
    }
};

inline Embedding embed(const PlabicGraph& g) {
    Embedding em;
    em.E = g.num_edges();
    em.n = g.n();
    em.xedges = g.edges;
    for (int i = 0; i < g.n(); ++i) em.xedges.push_back({i, (i + 1) % g.n()});
    em.xrot = g.rot;
    for (int i = 0; i < g.n(); ++i) {
        int real = g.rot[i].at(0);
        em.xrot[i] = {em.E + i, real, em.E + (i - 1 + g.n()) % g.n()};
    }
    em.pos.assign(em.xedges.size(), {-1, -1});
    for (int v = 0; v < static_cast<int>(em.xrot.size()); ++v)
        for (int i = 0; i < static_cast<int>(em.xrot[v].size()); ++i) {
            int e = em.xrot[v][i];
            int side = em.xedges[e][0] == v ? 0 : 1;
            if (em.pos[e][side] != -1) throw structure_error("edge repeated in a rotation");
            em.pos[e][side] = i;
        }
    int D = 2 * static_cast<int>(em.xedges.size());
    em.face_of_dart.assign(D, -1);
    for (int d0 = 0; d0 < D; ++d0) {
        if (em.face_of_dart[d0] != -1) continue;
        int f = static_cast<int>(em.face_darts.size());
        em.face_darts.emplace_back();
        int d = d0;
        do {
            em.face_of_dart[d] = f;
            em.face_darts[f].push_back(d);
            d = em.next_in_face(d);
        } while (d != d0);
    }
    em.outer = em.face_of_dart[2 * em.E];
    em.frozen.assign(em.num_faces(), false);
    for (int i = 0; i < g.n(); ++i) em.frozen[em.face_of_dart[2 * (em.E + i) + 1]] = true;
    for (int d = 0; d < 2 * em.E; ++d)
        if (em.face_of_dart[d] == em.outer) throw structure_error("a real edge borders the outer face");
    return em;
}

// Trip from boundary vertex i: maximal right turn at black, maximal left turn at white.
inline std::vector<int> trip_darts(const PlabicGraph& g, const Embedding& em, int i) {
    std::vector<int> darts;
    int d = em.dart_from(g.rot[i].at(0), i);
    int guard = 4 * em.E + 8;
    for (;;) {
        darts.push_back(d);
        int v = em.head(d);
        if (g.is_boundary(v)) break;
        const auto& r = g.rot[v];
        int deg = static_cast<int>(r.size());
        int idx = em.rot_index(em.edge(d), v);
        int e2 = g.color[v] == Color::black ? r[(idx - 1 + deg) % deg] : r[(idx + 1) % deg];
        d = em.dart_from(e2, v);
        if (--guard < 0) throw structure_error("trip does not terminate");
    }
    return darts;
}

// perm[i-1] = endpoint of the trip starting at i
inline std::vector<int> trip_permutation(const PlabicGraph& g) {
    Embedding em = embed(g);
    std::vector<int> perm;
    for (int i = 0; i < g.n(); ++i) perm.push_back(em.head(trip_darts(g, em, i).back()) + 1);
    return perm;
}

inline std::vector<int> pi_kn(const GridShape& s) {
    std::vector<int> p;
    for (int i = 1; i <= s.n; ++i) p.push_back(mod1(i + s.n - s.k, s.n));
    return p;
}

// Quiver on face labels; b[i][j] = #(i -> j) - #(j -> i).
struct Quiver {
    std::vector<Partition> labels;
    std::vector<bool> frozen;
    std::vector<std::vector<int>> b;

    int size() const { return static_cast<int>(labels.size()); }
    int index_of(const Partition& p) const {
        auto it = std::lower_bound(labels.begin(), labels.end(), p);
        if (it == labels.end() || !(*it == p)) return -1;
        return static_cast<int>(it - labels.begin());
    }
    int at(const Partition& a, const Partition& c) const { return b[index_of(a)][index_of(c)]; }

    void clear_frozen_block() {
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j)
                if (frozen[i] && frozen[j]) b[i][j] = 0;
    }

    Quiver mutate(int v) const {
        if (frozen.at(v)) throw std::domain_error("cannot mutate at a frozen vertex");
        Quiver q = *this;
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) {
                if (i == v || j == v) q.b[i][j] = -b[i][j];
                else q.b[i][j] = b[i][j] + (std::abs(b[i][v]) * b[v][j] + b[i][v] * std::abs(b[v][j])) / 2;
            }
        q.clear_frozen_block();
        return q;
    }

    // Rename vertex v and restore the sorted label order.
    Quiver relabel(int v, const Partition& fresh) const {
        std::vector<Partition> nl = labels;
        nl[v] = fresh;
        std::vector<int> order(size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int c) { return nl[a] < nl[c]; });
        Quiver q;
        for (int i : order) {
            q.labels.push_back(nl[i]);
            q.frozen.push_back(frozen[i]);
        }
        q.b.assign(size(), std::vector<int>(size(), 0));
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) q.b[i][j] = b[order[i]][order[j]];
        return q;
    }

    bool operator==(const Quiver&) const = default;
};

// Everything derived from the embedding: faces, trips, labels, quiver.
struct PlabicInfo {
    Embedding em;
    std::vector<int> perm;
    std::vector<std::vector<int>> trips;
    std::vector<Partition> face_label;  // per face; outer face unused
    std::vector<Subset> face_subset;
    std::vector<Partition> labels;      // sorted, including the empty diagram
    std::map<Partition, int> face_by_label;
    Quiver quiver;

    int face(const Partition& p) const {
        auto it = face_by_label.find(p);
        if (it == face_by_label.end()) throw std::out_of_range("no face labelled " + p.str());
        return it->second;
    }
    std::vector<Partition> coordinates() const {
        std::vector<Partition> c;
        for (const auto& p : labels)
            if (!p.empty()) c.push_back(p);
        return c;
    }
    std::vector<Partition> mutable_labels() const {
        std::vector<Partition> m;
        for (int i = 0; i < quiver.size(); ++i)
            if (!quiver.frozen[i]) m.push_back(quiver.labels[i]);
        return m;
    }
};

namespace detail {
struct DSU {
    std::vector<int> p;
    explicit DSU(int m) : p(m) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace detail

inline PlabicInfo analyze(const PlabicGraph& g) {
    g.validate();
    PlabicInfo info;
    info.em = embed(g);
    const Embedding& em = info.em;
    const int F = em.num_faces();
    const int n = g.n();
    const GridShape& s = g.shape;
    if (F - 1 != s.dim() + 1) throw structure_error("expected " + std::to_string(s.dim() + 1) + " faces, found " + std::to_string(F - 1));

    std::vector<std::vector<int>> in_left(F);
    for (int i = 0; i < n; ++i) {
        std::vector<int> darts = trip_darts(g, em, i);
        info.perm.push_back(em.head(darts.back()) + 1);
        std::vector<char> on_trip(em.E, 0);
        for (int d : darts) on_trip[em.edge(d)] = 1;
        detail::DSU dsu(F);
        for (int e = 0; e < em.E; ++e)
            if (!on_trip[e]) dsu.unite(em.face_of_dart[2 * e], em.face_of_dart[2 * e + 1]);
        std::vector<char> side(F, 0);  // 1 left, 2 right
        for (int d : darts) {
            side[dsu.find(em.left_face(d))] |= 1;
            side[dsu.find(em.right_face(d))] |= 2;
        }
        for (int f = 0; f < F; ++f) {
            if (f == em.outer) continue;
            int c = side[dsu.find(f)];
            if (c == 3) throw structure_error("trip " + std::to_string(i + 1) + " does not separate the disk");
            if (c == 1) in_left[f].push_back(i + 1);
        }
        info.trips.push_back(std::move(darts));
    }
    if (info.perm != pi_kn(s)) throw structure_error("trip permutation is not pi_{k,n}");

    info.face_label.assign(F, Partition());
    info.face_subset.assign(F, Subset());
    for (int f = 0; f < F; ++f) {
        if (f == em.outer) continue;
        if (static_cast<int>(in_left[f].size()) != s.rows()) throw structure_error("face label of wrong size; graph is not reduced");
        info.face_subset[f] = in_left[f];
        info.face_label[f] = south_steps_to_partition(in_left[f], s);
        if (!info.face_by_label.emplace(info.face_label[f], f).second) throw structure_error("repeated face label; graph is not reduced");
        info.labels.push_back(info.face_label[f]);
    }
    std::sort(info.labels.begin(), info.labels.end());

    Quiver& q = info.quiver;
    q.labels = info.labels;
    q.frozen.assign(q.size(), false);
    q.b.assign(q.size(), std::vector<int>(q.size(), 0));
    for (int f = 0; f < F; ++f)
        if (f != em.outer && em.frozen[f]) q.frozen[q.index_of(info.face_label[f])] = true;
    for (int e = 0; e < em.E; ++e) {
        auto [a, c] = g.edges[e];
        if (g.is_boundary(a) || g.is_boundary(c)) continue;
        int w = g.color[a] == Color::white ? a : c;
        int d = em.dart_from(e, w);
        int L = em.left_face(d), R = em.right_face(d);
        if (L == R || (em.frozen[L] && em.frozen[R])) continue;
        int li = q.index_of(info.face_label[L]), ri = q.index_of(info.face_label[R]);
        q.b[ri][li] += 1;
        q.b[li][ri] -= 1;
    }
    return info;
}

// Grid of k columns and n-k rows; grid point (i,j) is the face labelled by the i x j rectangle.
inline PlabicGraph build_rectangles(const GridShape& s);

// Contracts every internal degree-2 vertex that does not touch the boundary.
inline PlabicGraph normalize(const PlabicGraph& g0) {
    PlabicGraph g = g0;
    std::vector<char> dead_v(g.num_vertices(), 0), dead_e(g.num_edges(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = g.n(); v < g.num_vertices(); ++v) {
            if (dead_v[v] || g.degree(v) != 2) continue;
            int e0 = g.rot[v][0], e1 = g.rot[v][1];
            int a = g.other(e0, v), c = g.other(e1, v);
            if (g.is_boundary(a) || g.is_boundary(c) || a == c) continue;
            auto rotate_from = [&](int x, int e) {
                std::vector<int> out;
                const auto& r = g.rot[x];
                int m = static_cast<int>(r.size());
                int i = static_cast<int>(std::find(r.begin(), r.end(), e) - r.begin());
                for (int t = 1; t < m; ++t) out.push_back(r[(i + t) % m]);
                return out;
            };
            std::vector<int> ra = rotate_from(a, e0), rc = rotate_from(c, e1);
            for (int e : rc) {
                if (g.edges[e][0] == c) g.edges[e][0] = a;
                if (g.edges[e][1] == c) g.edges[e][1] = a;
            }
            ra.insert(ra.end(), rc.begin(), rc.end());
            g.rot[a] = ra;
            g.rot[c].clear();
            g.rot[v].clear();
            dead_v[v] = dead_v[c] = 1;
            dead_e[e0] = dead_e[e1] = 1;
            changed = true;
        }
    }
    PlabicGraph out;
    out.shape = g.shape;
    std::vector<int> vmap(g.num_vertices(), -1), emap(g.num_edges(), -1);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!dead_v[v]) vmap[v] = out.add_vertex(g.color[v]);
    for (int e = 0; e < g.num_edges(); ++e)
        if (!dead_e[e]) emap[e] = out.add_edge(vmap[g.edges[e][0]], vmap[g.edges[e][1]]);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!dead_v[v])
            for (int e : g.rot[v]) out.rot[vmap[v]].push_back(emap[e]);
    out.validate();
    return out;
}

inline PlabicGraph build_rectangles(const GridShape& s) {
    const int R = s.rows(), k = s.k, n = s.n;
    PlabicGraph g;
    g.shape = s;
    std::vector<std::pair<double, double>> xy;
    for (int i = 0; i < n; ++i) {
        g.add_vertex(Color::boundary);
        xy.emplace_back(0.0, 0.0);
    }
    for (int i = 0; i < R; ++i) xy[i] = {k + 1.0, -(i + 0.5)};
    for (int j = 0; j < k; ++j) xy[n - j - 1] = {j + 0.5, -(R + 1.0)};
    std::vector<std::vector<int>> U(R, std::vector<int>(k)), L(R, std::vector<int>(k));
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < k; ++j) {
            U[i][j] = g.add_vertex(Color::black);
            xy.emplace_back(j + 2.0 / 3, -(i + 1.0 / 3));
            L[i][j] = g.add_vertex(Color::white);
            xy.emplace_back(j + 1.0 / 3, -(i + 2.0 / 3));
        }
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < k; ++j) {
            g.add_edge(U[i][j], L[i][j]);
            if (j + 1 < k) {
                g.add_edge(U[i][j], L[i][j + 1]);
            } else {
                int pad = g.add_vertex(Color::white);
                xy.emplace_back(k + 0.4, -(i + 0.5));
                g.add_edge(U[i][j], pad);
                g.add_edge(pad, i);
            }
            if (i >= 1) g.add_edge(U[i][j], L[i - 1][j]);
        }
    for (int j = 0; j < k; ++j) g.add_edge(L[R - 1][j], n - j - 1);
    std::vector<std::vector<int>> inc(g.num_vertices());
    for (int e = 0; e < g.num_edges(); ++e) {
        inc[g.edges[e][0]].push_back(e);
        inc[g.edges[e][1]].push_back(e);
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto angle = [&](int e) {
            int w = g.other(e, v);
            return std::atan2(xy[w].second - xy[v].second, xy[w].first - xy[v].first);
        };
        std::sort(inc[v].begin(), inc[v].end(), [&](int a, int b) { return angle(a) > angle(b); });
        g.rot[v] = inc[v];
    }
    return normalize(g);
}

// A face is square-movable when its boundary is a 4-cycle of distinct internal vertices.
inline std::optional<std::array<int, 4>> square_darts(const PlabicGraph& g, const Embedding& em, int f) {
    if (f == em.outer || em.frozen[f]) return std::nullopt;
    const auto& ds = em.face_darts[f];
    if (ds.size() != 4) return std::nullopt;
    std::set<int> vs;
    for (int d : ds) {
        if (em.is_virtual(d) || g.is_boundary(em.tail(d))) return std::nullopt;
        vs.insert(em.tail(d));
    }
    if (vs.size() != 4) return std::nullopt;
    return std::array<int, 4>{ds[0], ds[1], ds[2], ds[3]};
}

inline std::vector<Partition> square_faces(const PlabicGraph& g, const PlabicInfo& info) {
    std::vector<Partition> out;
    for (int f = 0; f < info.em.num_faces(); ++f)
        if (square_darts(g, info.em, f)) out.push_back(info.face_label[f]);
    std::sort(out.begin(), out.end());
    return out;
}

struct move_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Square move at the face with the given label; the result is normalized.
inline PlabicGraph square_move(const PlabicGraph& g0, const PlabicInfo& info, const Partition& label) {
    int f = info.face(label);
    auto sq = square_darts(g0, info.em, f);
    if (!sq) throw move_error("face " + label.str() + " is not square-movable");
    PlabicGraph g = g0;
    const Embedding& em = info.em;
    std::array<int, 4> v{}, oldE{}, s{}, spoke{}, side{};
    for (int i = 0; i < 4; ++i) {
        v[i] = em.tail((*sq)[i]);
        oldE[i] = em.edge((*sq)[i]);
    }
    for (int i = 0; i < 4; ++i) s[i] = g.add_vertex(g.color[v[i]] == Color::black ? Color::white : Color::black);
    for (int i = 0; i < 4; ++i) spoke[i] = g.add_edge(v[i], s[i]);
    for (int i = 0; i < 4; ++i) side[i] = g.add_edge(s[i], s[(i + 1) % 4]);
    for (int i = 0; i < 4; ++i) {
        // at v[i] the face lies between edge oldE[i-1] (incoming) and oldE[i] (outgoing), consecutive clockwise
        auto& r = g.rot[v[i]];
        int ein = oldE[(i + 3) % 4], eout = oldE[i];
        int m = static_cast<int>(r.size());
        int p = static_cast<int>(std::find(r.begin(), r.end(), ein) - r.begin());
        if (p == m || r[(p + 1) % m] != eout) throw structure_error("square move: rotation inconsistent with face");
        std::vector<int> nr;
        for (int t = 2; t < m; ++t) nr.push_back(r[(p + t) % m]);
        nr.push_back(spoke[i]);
        r = nr;
        g.rot[s[i]] = {side[(i + 3) % 4], side[i], spoke[i]};
    }
    // drop the four old square edges
    PlabicGraph out;
    out.shape = g.shape;
    out.color = g.color;
    out.rot.assign(g.num_vertices(), {});
    std::vector<int> emap(g.num_edges(), -1);
    for (int e = 0; e < g.num_edges(); ++e)
        if (std::find(oldE.begin(), oldE.end(), e) == oldE.end()) emap[e] = out.add_edge(g.edges[e][0], g.edges[e][1]);
    for (int x = 0; x < g.num_vertices(); ++x)
        for (int e : g.rot[x]) out.rot[x].push_back(emap[e]);
    return normalize(out);
}

inline PlabicGraph square_move(const PlabicGraph& g, const Partition& label) { return square_move(g, analyze(g), label); }

// ---------------------------------------------------------------- matchings

using EdgeSet = std::vector<char>;  // indicator over real edges

inline Subset matching_boundary(const PlabicGraph& g, const EdgeSet& m) {
    Subset b;
    for (int i = 0; i < g.n(); ++i)
        if (m[g.rot[i][0]]) b.push_back(i + 1);
    return b;
}

inline bool is_matching(const PlabicGraph& g, const EdgeSet& m) {
    std::vector<int> cover(g.num_vertices(), 0);
    for (int e = 0; e < g.num_edges(); ++e)
        if (m[e]) {
            ++cover[g.edges[e][0]];
            ++cover[g.edges[e][1]];
        }
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (cover[v] > 1) return false;
        if (!g.is_boundary(v) && cover[v] != 1) return false;
    }
    return true;
}

// All matchings with boundary J (up to limit). Empty if J is not matchable.
inline std::vector<EdgeSet> enumerate_matchings(const PlabicGraph& g, const Subset& J, std::size_t limit = SIZE_MAX) {
    std::vector<EdgeSet> out;
    EdgeSet m(g.num_edges(), 0);
    std::vector<char> covered(g.num_vertices(), 0);
    std::vector<char> inJ(g.n() + 1, 0);
    for (int j : J) inJ[j] = 1;
    for (int i = 0; i < g.n(); ++i) {
        if (!inJ[i + 1]) continue;
        int e = g.rot[i][0];
        int w = g.other(e, i);
        if (covered[w]) return out;
        covered[w] = covered[i] = 1;
        m[e] = 1;
    }
    std::vector<int> internal;
    for (int v = g.n(); v < g.num_vertices(); ++v) internal.push_back(v);
    auto rec = [&](auto&& self) -> void {
        if (out.size() >= limit) return;
        int best = -1, best_opts = INT32_MAX;
        for (int v : internal) {
            if (covered[v]) continue;
            int opts = 0;
            for (int e : g.rot[v]) {
                int w = g.other(e, v);
                if (!g.is_boundary(w) && !covered[w]) ++opts;
            }
            if (opts < best_opts) {
                best_opts = opts;
                best = v;
                if (opts == 0) break;
            }
        }
        if (best < 0) {
            out.push_back(m);
            return;
        }
        if (best_opts == 0) return;
        for (int e : g.rot[best]) {
            int w = g.other(e, best);
            if (g.is_boundary(w) || covered[w]) continue;
            covered[best] = covered[w] = 1;
            m[e] = 1;
            self(self);
            m[e] = 0;
            covered[best] = covered[w] = 0;
        }
    };
    rec(rec);
    return out;
}

struct FlipCover {
    int lower;
    int upper;
    Partition face;
};

struct MatchingLattice {
    std::vector<EdgeSet> elements;
    std::vector<FlipCover> covers;
    int min = -1;
    int max = -1;
};

// Alternating face boundary: returns +1 if flipping goes up, -1 if down, 0 if not flippable.
// Up means the matched edges, read clockwise around the face, run from white to black.
inline int flip_direction(const PlabicGraph& g, const Embedding& em, int f, const EdgeSet& m) {
    if (f == em.outer || em.frozen[f]) return 0;
    const auto& ds = em.face_darts[f];
    if (ds.size() % 2) return 0;
    int par = -1;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (em.is_virtual(ds[i])) return 0;
        bool in = m[em.edge(ds[i])];
        int want = static_cast<int>(i % 2);
        if (in) {
            if (par == -1) par = want;
            else if (par != want) return 0;
        } else if (par == want) {
            return 0;
        }
    }
    for (std::size_t i = 0; i < ds.size(); ++i) {
        bool in = m[em.edge(ds[i])];
        if (in != (static_cast<int>(i % 2) == par)) return 0;
    }
    int d = ds[par];
    // face darts run counterclockwise; clockwise white->black means counterclockwise tail is black
    return g.color[em.tail(d)] == Color::black ? +1 : -1;
}

inline EdgeSet flip(const Embedding& em, int f, EdgeSet m) {
    for (int d : em.face_darts[f]) m[em.edge(d)] ^= 1;
    return m;
}

inline MatchingLattice matchings_with_boundary(const PlabicGraph& g, const PlabicInfo& info, const Subset& J) {
    MatchingLattice L;
    L.elements = enumerate_matchings(g, J);
    std::sort(L.elements.begin(), L.elements.end());
    std::map<EdgeSet, int> idx;
    for (int i = 0; i < static_cast<int>(L.elements.size()); ++i) idx[L.elements[i]] = i;
    const Embedding& em = info.em;
    std::vector<int> ups(L.elements.size(), 0), downs(L.elements.size(), 0);
    for (int i = 0; i < static_cast<int>(L.elements.size()); ++i)
        for (int f = 0; f < em.num_faces(); ++f)
            if (flip_direction(g, em, f, L.elements[i]) == +1) {
                int j = idx.at(flip(em, f, L.elements[i]));
                L.covers.push_back({i, j, info.face_label[f]});
                ++ups[i];
                ++downs[j];
            }
    for (int i = 0; i < static_cast<int>(L.elements.size()); ++i) {
        if (downs[i] == 0) {
            if (L.min != -1) throw structure_error("matching lattice has two minimal elements");
            L.min = i;
        }
        if (ups[i] == 0) {
            if (L.max != -1) throw structure_error("matching lattice has two maximal elements");
            L.max = i;
        }
    }
    return L;
}

// ---------------------------------------------------------------- perfect orientation

struct PerfectOrientation {
    EdgeSet matching;           // the matching with boundary {1..n-k}
    std::vector<int> tail;      // tail vertex of each real edge
    Subset sources;
    std::vector<int> topo;      // vertices in topological order
};

inline PerfectOrientation perfect_orientation(const PlabicGraph& g) {
    const GridShape& s = g.shape;
    Subset I;
    for (int i = 1; i <= s.rows(); ++i) I.push_back(i);
    auto ms = enumerate_matchings(g, I, 2);
    if (ms.empty()) throw structure_error("no matching with boundary {1..n-k}");
    if (ms.size() > 1) throw structure_error("matching with boundary {1..n-k} is not unique");
    PerfectOrientation O;
    O.matching = ms[0];
    O.sources = I;
    O.tail.assign(g.num_edges(), -1);
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = g.edges[e];
        int w, x;  // white endpoint, other endpoint (black or boundary)
        if (g.color[a] == Color::white) {
            w = a;
            x = b;
        } else {
            w = b;
            x = a;
        }
        O.tail[e] = O.matching[e] ? x : w;
    }
    // acyclicity
    std::vector<int> indeg(g.num_vertices(), 0);
    std::vector<std::vector<int>> out(g.num_vertices());
    for (int e = 0; e < g.num_edges(); ++e) {
        int t = O.tail[e], h = g.other(e, t);
        out[t].push_back(e);
        ++indeg[h];
    }
    std::vector<int> st;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (indeg[v] == 0) st.push_back(v);
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        O.topo.push_back(v);
        for (int e : out[v]) {
            int h = g.other(e, v);
            if (--indeg[h] == 0) st.push_back(h);
        }
    }
    if (static_cast<int>(O.topo.size()) != g.num_vertices()) throw std::logic_error("perfect orientation has a directed cycle");
    for (int v = g.n(); v < g.num_vertices(); ++v) {
        int outc = 0, inc = 0;
        for (int e : g.rot[v]) (O.tail[e] == v ? outc : inc)++;
        if (g.color[v] == Color::black && outc != 1) throw std::logic_error("black vertex without a unique outgoing edge");
        if (g.color[v] == Color::white && inc != 1) throw std::logic_error("white vertex without a unique incoming edge");
    }
    for (int i = 0; i < g.n(); ++i) {
        bool src = O.tail[g.rot[i][0]] == i;
        if (src != (i < s.rows())) throw std::logic_error("source set is not {1..n-k}");
    }
    return O;
}

}  // namespace nokit
