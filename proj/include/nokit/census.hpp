#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <deque>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "charts.hpp"
#include "mirror.hpp"
#include "partitions.hpp"
#include "plabic.hpp"
#include "polyhedra.hpp"

namespace nokit {

using ClassKey = std::vector<Partition>;  // sorted face labels

inline std::string key_str(const ClassKey& k) {
    std::string s;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ';';
        s += k[i].str();
    }
    return s;
}

inline ClassKey parse_key(const std::string& s) {
    ClassKey k;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) k.push_back(Partition::parse(tok));
    std::sort(k.begin(), k.end());
    return k;
}

// One square move: from class `from`, at face `old_label`, producing `new_label` in class `to`.
struct MoveEdge {
    int from;
    int to;
    Partition old_label;
    Partition new_label;
};

struct ClassRecord {
    ClassKey key;
    PlabicGraph graph;
    std::vector<Partition> path;  // faces moved at, starting from the rectangles graph
    std::optional<QPolytope> gamma;
    bool integral = false;
    std::vector<QVec> nonintegral;
};

struct CensusReport {
    GridShape shape;
    std::vector<ClassRecord> classes;  // sorted by key
    std::vector<MoveEdge> moves;       // every square move between classes
    int rec_index = -1;
    int integral = 0;
    int nonintegral = 0;
    std::uint64_t seed = 0;
    int threads = 1;
    double seconds = 0;

    int find(const ClassKey& k) const {
        for (int i = 0; i < static_cast<int>(classes.size()); ++i)
            if (classes[i].key == k) return i;
        return -1;
    }
};

struct census_guard_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Coordinate-count limits: up to 9 runs freely, up to 12 needs the deep flag, beyond needs force.
inline constexpr int kFreeDim = 9;
inline constexpr int kDeepDim = 12;

inline void check_census_guard(const GridShape& s, bool deep, bool force) {
    int N = s.dim();
    if (N <= kFreeDim || force) return;
    if (N <= kDeepDim && deep) return;
    throw census_guard_error("shape with N = " + std::to_string(N) + " coordinates needs " + (N <= kDeepDim ? "--deep" : "--force"));
}

struct CensusOptions {
    bool gamma = true;
    int threads = 1;
    bool shuffle = false;  // randomize the frontier order
    std::uint64_t seed = 0;
    bool deep = false;
    bool force = false;
};

// Breadth-first search over square moves from the rectangles graph.
inline CensusReport enumerate_classes(const GridShape& s, const CensusOptions& opt = {}) {
    check_census_guard(s, opt.deep, opt.force);
    CensusReport rep;
    rep.shape = s;
    rep.seed = opt.seed;
    std::mt19937_64 rng(opt.seed);
    std::map<ClassKey, int> index;
    std::vector<ClassRecord> found;
    std::vector<MoveEdge> moves;
    std::deque<int> frontier;
    PlabicGraph g0 = build_rectangles(s);
    PlabicInfo i0 = analyze(g0);
    index[i0.labels] = 0;
    found.push_back({i0.labels, g0, {}, std::nullopt, false, {}});
    frontier.push_back(0);
    while (!frontier.empty()) {
        if (opt.shuffle) std::shuffle(frontier.begin(), frontier.end(), rng);
        int cur = frontier.front();
        frontier.pop_front();
        PlabicGraph g = found[cur].graph;
        PlabicInfo info = analyze(g);
        for (const auto& lab : square_faces(g, info)) {
            PlabicGraph h = square_move(g, info, lab);
            PlabicInfo hi = analyze(h);
            std::vector<Partition> fresh;
            std::set_difference(hi.labels.begin(), hi.labels.end(), info.labels.begin(), info.labels.end(), std::back_inserter(fresh));
            if (fresh.size() != 1) throw std::logic_error("square move changed more than one label");
            auto [it, inserted] = index.emplace(hi.labels, static_cast<int>(found.size()));
            if (inserted) {
                std::vector<Partition> path = found[cur].path;
                path.push_back(lab);
                found.push_back({hi.labels, std::move(h), std::move(path), std::nullopt, false, {}});
                frontier.push_back(it->second);
            }
            moves.push_back({cur, it->second, lab, fresh[0]});
        }
    }
    // deterministic order by key
    std::vector<int> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return found[a].key < found[b].key; });
    std::vector<int> where(found.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) where[order[i]] = i;
    for (int i : order) rep.classes.push_back(std::move(found[i]));
    for (auto& m : moves) {
        m.from = where[m.from];
        m.to = where[m.to];
    }
    std::sort(moves.begin(), moves.end(), [](const MoveEdge& a, const MoveEdge& b) {
        return std::tie(a.from, a.old_label) < std::tie(b.from, b.old_label);
    });
    rep.moves = std::move(moves);
    rep.rec_index = where[0];
    return rep;
}

inline QPolytope gamma_of(const PlabicGraph& g, const Q& r = 1) {
    return QPolytope(gamma_polytope(marsh_scott_expansion(g), r));
}

template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

inline CensusReport census(const GridShape& s, const CensusOptions& opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    CensusReport rep = enumerate_classes(s, opt);
    rep.threads = opt.threads;
    if (opt.gamma) {
        parallel_for(static_cast<int>(rep.classes.size()), opt.threads, [&](int i) {
            auto& c = rep.classes[i];
            c.gamma = gamma_of(c.graph);
            c.integral = c.gamma->is_integral();
            c.nonintegral = c.gamma->nonintegral_vertices();
        });
        for (const auto& c : rep.classes) (c.integral ? rep.integral : rep.nonintegral)++;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// Replays the recorded path from the rectangles graph.
inline PlabicGraph replay_path(const GridShape& s, const std::vector<Partition>& path) {
    PlabicGraph g = build_rectangles(s);
    for (const auto& lab : path) g = square_move(g, lab);
    return g;
}

// Mutation steps along the recorded path.
inline std::vector<MutationStep> path_steps(const GridShape& s, const std::vector<Partition>& path) {
    std::vector<MutationStep> steps;
    PlabicGraph g = build_rectangles(s);
    for (const auto& lab : path) {
        PlabicInfo info = analyze(g);
        PlabicGraph h = square_move(g, info, lab);
        PlabicInfo hi = analyze(h);
        std::vector<Partition> fresh;
        std::set_difference(hi.labels.begin(), hi.labels.end(), info.labels.begin(), info.labels.end(), std::back_inserter(fresh));
        steps.push_back(MutationStep::make(info.quiver, lab, fresh.at(0)));
        g = std::move(h);
    }
    return steps;
}

// Gamma of the rectangles graph carried along the path by tropical mutation.
inline QPolytope transported_gamma(const GridShape& s, const std::vector<Partition>& path) {
    QPolytope P = gamma_of(build_rectangles(s));
    for (const auto& st : path_steps(s, path)) P = trop_mutate_polytope(P, st);
    return P;
}

// Valuations (strongly minimal terms) of all degree-r Plucker monomials, by additivity.
inline std::set<IVec> degree_r_valuations(const NetworkChart& c, int r) {
    std::set<IVec> base;
    for (const auto& lam : all_partitions(c.shape())) {
        auto v = val_min(c, lam);
        base.insert(IVec(v.begin(), v.end()));
    }
    std::set<IVec> cur;
    cur.insert(IVec(c.dim(), 0));
    for (int t = 0; t < r; ++t) {
        std::set<IVec> next;
        for (const auto& a : cur)
            for (const auto& b : base) {
                IVec s(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
                next.insert(std::move(s));
            }
        cur = std::move(next);
    }
    return cur;
}

struct ValuationScan {
    std::set<IVec> scanned;
    std::set<IVec> lattice;
    std::vector<IVec> missing;  // lattice points of r Gamma not reached by the scan
    bool contained = true;      // scan inside Lattice(r Gamma)
};

inline ValuationScan degree_r_valuation_scan(const NetworkChart& c, const QPolytope& gamma, int r) {
    ValuationScan s;
    s.scanned = degree_r_valuations(c, r);
    auto L = lattice_points(gamma, r);
    s.lattice = std::set<IVec>(L.begin(), L.end());
    for (const auto& v : s.scanned)
        if (!s.lattice.count(v)) s.contained = false;
    for (const auto& v : s.lattice)
        if (!s.scanned.count(v)) s.missing.push_back(v);
    return s;
}

}  // namespace nokit
