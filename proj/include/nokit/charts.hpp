#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"
#include "laurent.hpp"
#include "partitions.hpp"
#include "plabic.hpp"

namespace nokit {

using ValuationVector = std::vector<int>;  // indexed like NetworkChart::coords

inline VarSpace partition_varspace(const std::vector<Partition>& coords) {
    VarSpace vs;
    for (const auto& p : coords) vs.names.push_back(p.str());
    return vs;
}

struct NetworkChart {
    PlabicGraph graph;
    PlabicInfo info;
    PerfectOrientation orientation;
    std::vector<Partition> coords;          // face labels minus the empty diagram
    std::vector<Exponent> edge_weight;      // per real edge, exponents over coords

    const GridShape& shape() const { return graph.shape; }
    std::size_t dim() const { return coords.size(); }
    int coord_index(const Partition& p) const {
        auto it = std::lower_bound(coords.begin(), coords.end(), p);
        if (it == coords.end() || !(*it == p)) return -1;
        return static_cast<int>(it - coords.begin());
    }
    VarSpace varspace() const { return partition_varspace(coords); }
};

// Edge weights from paths in the dual tree rooted at the empty face: crossing an oriented
// edge from its right face to its left face puts x_mu on that edge.
inline NetworkChart make_chart(const PlabicGraph& g) {
    NetworkChart c;
    c.graph = g;
    c.info = analyze(g);
    c.orientation = perfect_orientation(g);
    c.coords = c.info.coordinates();
    const Embedding& em = c.info.em;
    const int F = em.num_faces();
    int root = c.info.face(Partition());
    std::vector<int> parent_dart(F, -1);
    std::vector<int> parent(F, -1);
    std::vector<char> seen(F, 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (int d : em.face_darts[f]) {
            if (em.is_virtual(d)) continue;
            int h = em.right_face(d);
            if (seen[h] || h == em.outer) continue;
            seen[h] = 1;
            parent[h] = f;
            parent_dart[h] = d;  // f is the left face of d, h the right face
            q.push(h);
        }
    }
    c.edge_weight.assign(g.num_edges(), Exponent(c.dim(), 0));
    for (int f = 0; f < F; ++f) {
        if (f == em.outer || f == root) continue;
        if (!seen[f]) throw structure_error("dual graph is disconnected");
        int idx = c.coord_index(c.info.face_label[f]);
        for (int h = f; h != root; h = parent[h]) {
            int d = parent_dart[h];
            int e = em.edge(d);
            bool along = em.tail(d) == c.orientation.tail[e];
            c.edge_weight[e][idx] += along ? -1 : 1;
        }
    }
    return c;
}

// Boundary measurement matrix over a commutative ring R; weight(e) gives the edge weight.
template <class R>
Matrix<R> boundary_matrix_over(const NetworkChart& c, const std::function<R(int)>& weight, const R& zero, const R& one) {
    const PlabicGraph& g = c.graph;
    const int rows = c.shape().rows(), n = g.n();
    Matrix<R> A(rows, std::vector<R>(n, zero));
    std::vector<R> w(g.num_edges(), zero);
    for (int e = 0; e < g.num_edges(); ++e) w[e] = weight(e);
    for (int i = 0; i < rows; ++i) {
        std::vector<R> val(g.num_vertices(), zero);
        val[i] = one;
        for (int v : c.orientation.topo) {
            if (v < rows) continue;
            R s = zero;
            bool any = false;
            for (int e : g.rot[v]) {
                int u = c.orientation.tail[e];
                if (u == v) continue;
                s = any ? s + val[u] * w[e] : val[u] * w[e];
                any = true;
            }
            val[v] = s;
        }
        for (int j = 0; j < n; ++j) {
            if (j < rows) {
                A[i][j] = (j == i) ? one : zero;
            } else {
                bool neg = (rows - 1 - i) % 2 == 1;
                A[i][j] = neg ? zero - val[j] : val[j];
            }
        }
    }
    return A;
}

inline Matrix<Poly> boundary_matrix(const NetworkChart& c) {
    const std::size_t m = c.dim();
    return boundary_matrix_over<Poly>(
        c, [&](int e) { return Poly::monomial(c.edge_weight[e]); }, Poly(m), Poly::constant(m, 1));
}

template <class F>
Matrix<F> boundary_matrix_at(const NetworkChart& c, const std::vector<F>& x) {
    auto w = [&](int e) {
        F r(1);
        for (std::size_t i = 0; i < c.dim(); ++i) {
            int a = c.edge_weight[e][i];
            if (a == 0) continue;
            F b = a > 0 ? x[i] : field_inv(x[i]);
            for (int t = 0; t < std::abs(a); ++t) r = r * b;
        }
        return r;
    };
    return boundary_matrix_over<F>(c, w, F(0), F(1));
}

// Laplace expansion along the first row; rings without division.
template <class R>
R laplace_minor(const Matrix<R>& a, const std::vector<int>& cols, const R& zero) {
    const int m = static_cast<int>(cols.size());
    if (m == 0) throw std::invalid_argument("laplace_minor: empty minor");
    std::function<R(int, std::vector<int>&)> rec = [&](int row, std::vector<int>& rest) -> R {
        if (row == m - 1) return a[row][rest[0]];
        R total = zero;
        bool first = true;
        for (std::size_t t = 0; t < rest.size(); ++t) {
            const R& entry = a[row][rest[t]];
            if (entry == zero) continue;
            std::vector<int> sub;
            for (std::size_t u = 0; u < rest.size(); ++u)
                if (u != t) sub.push_back(rest[u]);
            R term = entry * rec(row + 1, sub);
            if (first) {
                total = t % 2 ? zero - term : term;
                first = false;
            } else {
                total = t % 2 ? total - term : total + term;
            }
        }
        return total;
    };
    std::vector<int> cs = cols;
    return rec(0, cs);
}

inline std::vector<int> zero_based(const Subset& J) {
    std::vector<int> c;
    for (int j : J) c.push_back(j - 1);
    return c;
}

// Exponent of the flow M xor M_O.
inline Exponent flow_weight(const NetworkChart& c, const EdgeSet& m) {
    Exponent e(c.dim(), 0);
    for (int ed = 0; ed < c.graph.num_edges(); ++ed)
        if (m[ed] != c.orientation.matching[ed])
            for (std::size_t i = 0; i < c.dim(); ++i) e[i] += c.edge_weight[ed][i];
    return e;
}

inline Poly flow_polynomial_by_matchings(const NetworkChart& c, const Subset& J) {
    Poly p(c.dim());
    for (const auto& m : enumerate_matchings(c.graph, J)) p.add_term(flow_weight(c, m), 1);
    return p;
}

inline constexpr int kLaplaceRowLimit = 4;

inline Poly flow_polynomial(const NetworkChart& c, const Matrix<Poly>& A, const Subset& J) {
    if (static_cast<int>(J.size()) != c.shape().rows()) throw std::invalid_argument("flow_polynomial: |J| must be n-k");
    if (c.shape().rows() > kLaplaceRowLimit) return flow_polynomial_by_matchings(c, J);
    return laplace_minor(A, zero_based(J), Poly(c.dim()));
}

inline Poly flow_polynomial(const NetworkChart& c, const Subset& J) { return flow_polynomial(c, boundary_matrix(c), J); }

inline Poly flow_polynomial(const NetworkChart& c, const Partition& lambda) {
    return flow_polynomial(c, partition_to_south_steps(lambda, c.shape()));
}

struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

inline ValuationVector val_min_of(const Poly& p, const std::string& what) {
    auto t = strongly_min_term(p);
    if (!t) throw invariant_violation("no strongly minimal term in " + what);
    return t->exps;
}
inline ValuationVector val_max_of(const Poly& p, const std::string& what) {
    auto t = strongly_max_term(p);
    if (!t) throw invariant_violation("no strongly maximal term in " + what);
    return t->exps;
}

// All flow polynomials of a chart, indexed by partition.
struct ChartPluckers {
    std::map<Partition, Poly> P;
};

inline ChartPluckers all_flow_polynomials(const NetworkChart& c) {
    ChartPluckers out;
    Matrix<Poly> A = boundary_matrix(c);
    for (const auto& lam : all_partitions(c.shape())) out.P.emplace(lam, flow_polynomial(c, A, partition_to_south_steps(lam, c.shape())));
    return out;
}

inline ValuationVector val_min(const NetworkChart& c, const Partition& lambda) {
    return val_min_of(flow_polynomial(c, lambda), "P_" + lambda.str());
}
inline ValuationVector val_max(const NetworkChart& c, const Partition& lambda) {
    return val_max_of(flow_polynomial(c, lambda), "P_" + lambda.str());
}

// MaxDiag(mu \ lambda) at every coordinate mu
inline ValuationVector maxdiag_valuation(const Partition& lambda, const std::vector<Partition>& coords) {
    ValuationVector v;
    for (const auto& mu : coords) v.push_back(max_diag(mu, lambda));
    return v;
}

// Diag0(mu) - MaxDiag(lambda \ S^{n-k}(mu))
inline ValuationVector highest_valuation(const Partition& lambda, const std::vector<Partition>& coords, const GridShape& g) {
    ValuationVector v;
    for (const auto& mu : coords) v.push_back(diag0(mu) - max_diag(lambda, cyclic_shift(mu, g, g.rows())));
    return v;
}

// ---------------------------------------------------------------- X-mutation

// x'_nu = 1/x_nu; arrows nu->mu multiply by (1+x_nu)^b, arrows mu->nu divide by (1+x_nu^{-1})^b.
template <class F>
std::vector<F> x_mutate(const Quiver& q, const std::vector<Partition>& coords, const std::vector<F>& x, const Partition& nu) {
    int v = q.index_of(nu);
    if (v < 0 || q.frozen[v]) throw std::domain_error("x_mutate: vertex must be mutable");
    auto pos = [&](const Partition& p) {
        return static_cast<int>(std::lower_bound(coords.begin(), coords.end(), p) - coords.begin());
    };
    int xv = pos(nu);
    std::vector<F> out = x;
    F xn = x[xv];
    for (int i = 0; i < q.size(); ++i) {
        if (i == v || q.labels[i].empty()) continue;
        int b = q.b[v][i];
        F& y = out[pos(q.labels[i])];
        if (b > 0) y = y * (F(1) + xn).pow(b);
        else if (b < 0) y = y / (F(1) + field_inv(xn)).pow(-b);
    }
    out[xv] = field_inv(xn);
    return out;
}

// ---------------------------------------------------------------- Puiseux witness

// x_lambda(t) on the dual rectangles graph; the result is p_mu for every mu in P_{k,n}.
struct PuiseuxWitness {
    GridShape shape;
    Partition lambda;
    std::map<Partition, int> t_exponent;      // per coordinate of the dual graph
    std::map<Partition, Poly> p;              // univariate in t
    std::map<Partition, int> lowest;          // lowest t-exponent of p_mu
};

inline std::map<Partition, int> puiseux_exponents(const Partition& lambda, const GridShape& s) {
    const int k = s.k, nk = s.rows();
    // transpose, rotate by 180 degrees into the SE corner of a k x (n-k) grid
    Partition lt = lambda.transpose();
    std::vector<std::vector<char>> in(k + 2, std::vector<char>(nk + 2, 0));
    for (int a = 1; a <= lt.num_rows(); ++a)
        for (int b = 1; b <= lt.row(a - 1); ++b) in[k + 1 - a][nk + 1 - b] = 1;
    std::map<Partition, int> ex;
    auto bump = [&](int r, int cc, int by) {
        if (r >= 1 && cc >= 1) ex[Partition::rectangle(r, cc)] += by;
    };
    // boundary of the region from the NE grid corner (0, nk) to the SW corner (k, 0)
    int r = 0, cc = nk;
    char prev = 0;
    auto filled = [&](int i, int j) { return i >= 1 && i <= k && j >= 1 && j <= nk && in[i][j]; };
    while (!(r == k && cc == 0)) {
        char step;
        // move south while the box SW of the current point (row r+1, column cc) is empty
        if (r < k && (cc == 0 || !filled(r + 1, cc))) step = 'S';
        else step = 'W';
        if (prev == 'S' && step == 'W') bump(r, cc, +1);
        if (prev == 'W' && step == 'S') bump(r, cc, -1);
        if (step == 'S') ++r;
        else --cc;
        prev = step;
    }
    return ex;
}

inline PuiseuxWitness puiseux_witness(const Partition& lambda, const GridShape& s) {
    if (!lambda.fits(s)) throw std::invalid_argument("puiseux_witness: partition does not fit");
    PuiseuxWitness w;
    w.shape = s;
    w.lambda = lambda;
    w.t_exponent = puiseux_exponents(lambda, s);
    GridShape d = s.dual();
    NetworkChart c = make_chart(build_rectangles(d));
    std::vector<int> tdeg(c.dim(), 0);
    for (const auto& [mu, e] : w.t_exponent) {
        int i = c.coord_index(mu);
        if (i < 0) throw std::logic_error("puiseux_witness: rectangle outside the dual grid");
        tdeg[i] = e;
    }
    auto weight = [&](int e) {
        int a = 0;
        for (std::size_t i = 0; i < c.dim(); ++i) a += c.edge_weight[e][i] * tdeg[i];
        return Poly::monomial({a});
    };
    Matrix<Poly> A = boundary_matrix_over<Poly>(c, weight, Poly(1), Poly::constant(1, 1));
    for (const auto& mu : all_partitions(s)) {
        Poly pm = laplace_minor(A, zero_based(partition_to_west_steps(mu, s)), Poly(1));
        if (pm.is_zero()) throw invariant_violation("puiseux_witness: vanishing Plucker coordinate");
        w.lowest[mu] = pm.terms().begin()->first[0];
        w.p.emplace(mu, std::move(pm));
    }
    return w;
}

// ---------------------------------------------------------------- left twist

struct not_in_open_cell : std::domain_error {
    using std::domain_error::domain_error;
};

// Column i: <tau_i, A_i> = 1 and <tau_i, A_j> = 0 for the n-k-1 cyclically preceding columns.
template <class F>
Matrix<F> left_twist(const Matrix<F>& A) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(A.at(0).size());
    Matrix<F> T(m, std::vector<F>(n, F(0)));
    for (int i = 0; i < n; ++i) {
        Matrix<F> S(m, std::vector<F>(m, F(0)));
        std::vector<F> rhs(m, F(0));
        for (int t = 0; t < m; ++t) {
            int col = ((i - t) % n + n) % n;
            for (int r = 0; r < m; ++r) S[t][r] = A[r][col];
        }
        rhs[0] = F(1);
        auto x = solve(S, rhs);
        if (!x) throw not_in_open_cell("left_twist: cyclic columns are dependent");
        for (int r = 0; r < m; ++r) T[r][i] = (*x)[r];
    }
    return T;
}

template <class F>
std::map<Subset, F> plucker_vector(const Matrix<F>& A, const GridShape& s) {
    std::map<Subset, F> out;
    for (const auto& lam : all_partitions(s)) {
        Subset J = partition_to_south_steps(lam, s);
        out.emplace(J, minor(A, zero_based(J)));
    }
    return out;
}

template <class F>
bool projectively_equal(const std::map<Subset, F>& a, const std::map<Subset, F>& b) {
    std::optional<F> ratio;
    for (const auto& [J, x] : a) {
        const F& y = b.at(J);
        if (is_zero(x) != is_zero(y)) return false;
        if (is_zero(x)) continue;
        F r = y / x;
        if (!ratio) ratio = r;
        else if (!(r == *ratio)) return false;
    }
    return true;
}

}  // namespace nokit
