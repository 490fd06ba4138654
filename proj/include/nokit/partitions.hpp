#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nokit {

// Box with rows = n-k and k columns.
struct GridShape {
    int k = 1;
    int n = 2;

    GridShape() = default;
    GridShape(int k_, int n_) : k(k_), n(n_) {
        if (k < 1 || n <= k) throw std::invalid_argument("GridShape: need 1 <= k < n");
    }
    int rows() const { return n - k; }
    int cols() const { return k; }
    int dim() const { return k * (n - k); }
    // same n, rows and columns swapped
    GridShape dual() const { return GridShape(n - k, n); }
    bool operator==(const GridShape&) const = default;
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] < 0) throw std::invalid_argument("Partition: negative row");
            if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("Partition: rows must weakly decrease");
        }
        while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    }
    Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

    static Partition rectangle(int r, int c) {
        if (r <= 0 || c <= 0) return Partition();
        return Partition(std::vector<int>(r, c));
    }

    const std::vector<int>& rows() const { return rows_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int row(int i) const { return i < num_rows() ? rows_[i] : 0; }
    int size() const {
        int s = 0;
        for (int r : rows_) s += r;
        return s;
    }
    bool empty() const { return rows_.empty(); }
    bool fits(const GridShape& g) const { return num_rows() <= g.rows() && row(0) <= g.cols(); }
    bool contains(int r, int c) const { return c < row(r); }
    bool subset_of(const Partition& o) const {
        for (int i = 0; i < num_rows(); ++i)
            if (row(i) > o.row(i)) return false;
        return true;
    }

    Partition transpose() const {
        std::vector<int> t(row(0), 0);
        for (int c = 0; c < row(0); ++c)
            for (int r = 0; r < num_rows() && rows_[r] > c; ++r) ++t[c];
        return Partition(t);
    }

    // canonical text: "3,3,1"; "0" for the empty diagram
    std::string str() const {
        if (rows_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(rows_[i]);
        }
        return s;
    }
    static Partition parse(const std::string& s) {
        std::vector<int> r;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("Partition::parse: empty field in '" + s + "'");
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("Partition::parse: bad field '" + tok + "'");
            r.push_back(v);
        }
        return Partition(r);
    }

    bool operator==(const Partition&) const = default;
    // canonical order: by size, then lexicographic on rows
    std::strong_ordering operator<=>(const Partition& o) const {
        if (auto c = size() <=> o.size(); c != 0) return c;
        return rows_ <=> o.rows_;
    }

private:
    std::vector<int> rows_;
};

using Subset = std::vector<int>;  // sorted, 1-based

inline int mod1(int i, int n) { return ((i - 1) % n + n) % n + 1; }

inline Subset normalize_subset(Subset s, int n) {
    for (int& x : s) x = mod1(x, n);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline Subset complement(const Subset& s, int n) {
    std::vector<bool> in(n + 1, false);
    for (int x : s) in[x] = true;
    Subset c;
    for (int i = 1; i <= n; ++i)
        if (!in[i]) c.push_back(i);
    return c;
}

// Border path from the NE corner to the SW corner, steps labelled 1..n.
inline Partition south_steps_to_partition(const Subset& J, const GridShape& g) {
    if (static_cast<int>(J.size()) != g.rows()) throw std::invalid_argument("south_steps_to_partition: subset size must be n-k");
    std::vector<bool> south(g.n + 1, false);
    for (int j : J) {
        if (j < 1 || j > g.n || south[j]) throw std::invalid_argument("south_steps_to_partition: bad subset");
        south[j] = true;
    }
    int x = g.k;
    std::vector<int> rows;
    for (int t = 1; t <= g.n; ++t) {
        if (south[t]) rows.push_back(x);
        else --x;
    }
    return Partition(rows);
}

inline Partition west_steps_to_partition(const Subset& J, const GridShape& g) {
    if (static_cast<int>(J.size()) != g.k) throw std::invalid_argument("west_steps_to_partition: subset size must be k");
    return south_steps_to_partition(complement(normalize_subset(J, g.n), g.n), g);
}

inline Subset partition_to_south_steps(const Partition& p, const GridShape& g) {
    if (!p.fits(g)) throw std::invalid_argument("partition " + p.str() + " does not fit the grid");
    Subset J;
    int x = g.k, r = 0;
    for (int t = 1; t <= g.n; ++t) {
        if (r < g.rows() && p.row(r) == x) {
            J.push_back(t);
            ++r;
        } else {
            --x;
        }
    }
    return J;
}

inline Subset partition_to_west_steps(const Partition& p, const GridShape& g) {
    return complement(partition_to_south_steps(p, g), g.n);
}

inline std::vector<Partition> all_partitions(const GridShape& g) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int bound) -> void {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == g.rows()) return;
        for (int v = 1; v <= bound; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, g.k);
    std::sort(out.begin(), out.end());
    return out;
}

inline Partition max_partition(const GridShape& g) { return Partition::rectangle(g.rows(), g.k); }

struct SkewShape {
    Partition outer;
    Partition inner;
};

inline int max_diag(const SkewShape& s) {
    std::vector<int> count;
    int off = s.outer.num_rows();
    for (int r = 0; r < s.outer.num_rows(); ++r)
        for (int c = s.inner.row(r); c < s.outer.row(r); ++c) {
            std::size_t d = static_cast<std::size_t>(c - r + off);
            if (count.size() <= d) count.resize(d + 1, 0);
            ++count[d];
        }
    int m = 0;
    for (int c : count) m = std::max(m, c);
    return m;
}
inline int max_diag(const Partition& outer, const Partition& inner) { return max_diag(SkewShape{outer, inner}); }

inline int diag0(const Partition& mu) {
    int d = 0;
    while (d < mu.num_rows() && mu.row(d) > d) ++d;
    return d;
}

// border word read SW -> NE, 0 = horizontal, 1 = vertical
inline std::vector<int> border_word(const Partition& mu, const GridShape& g) {
    Subset J = partition_to_south_steps(mu, g);
    std::vector<int> w(g.n, 0);
    for (int j : J) w[g.n - j] = 1;
    return w;
}

inline Partition from_border_word(const std::vector<int>& w, const GridShape& g) {
    Subset J;
    for (int t = 1; t <= g.n; ++t)
        if (w[g.n - t]) J.push_back(t);
    return south_steps_to_partition(J, g);
}

inline Partition cyclic_shift(const Partition& mu, const GridShape& g, int times = 1) {
    std::vector<int> w = border_word(mu, g);
    int s = ((times % g.n) + g.n) % g.n;
    std::rotate(w.begin(), w.begin() + s, w.end());
    return from_border_word(w, g);
}

// mu_i: west steps i+1..i+k
inline Partition frozen_mu(int i, const GridShape& g) {
    Subset W;
    for (int t = 1; t <= g.k; ++t) W.push_back(i + t);
    return west_steps_to_partition(normalize_subset(W, g.n), g);
}

// mu_i with one box added; for i = n-k this is the (n-k-1)x(k-1) rectangle
inline Partition mu_box(int i, const GridShape& g) {
    Subset W;
    for (int t = 1; t <= g.k - 1; ++t) W.push_back(i + t);
    W.push_back(i + g.k + 1);
    return west_steps_to_partition(normalize_subset(W, g.n), g);
}

// J^i = {i+k+1, ..., i-1} u {i+1}
inline Subset boundary_target_set(int i, const GridShape& g) {
    Subset J;
    for (int t = i + g.k + 1; t <= i - 1 + g.n; ++t) J.push_back(t);
    J.push_back(i + 1);
    J = normalize_subset(J, g.n);
    if (static_cast<int>(J.size()) != g.rows()) throw std::logic_error("boundary_target_set: size mismatch");
    return J;
}

inline std::string subset_str(const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace nokit
