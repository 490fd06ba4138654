#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "census.hpp"
#include "charts.hpp"
#include "field.hpp"
#include "mirror.hpp"
#include "partitions.hpp"
#include "plabic.hpp"
#include "polyhedra.hpp"

namespace nokit {

struct Check {
    int id = 0;  // acceptance criterion number, 0 for ad hoc checks
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0;
};

// ---------------------------------------------------------------- golden data

// val_G(P_J) on G_rec for P_{3,5}; columns (3,3),(2,2),(1,1),(3),(2),(1)
struct GoldenRow {
    Subset J;
    std::vector<int> val;
};

inline const std::vector<Partition>& dynkin_columns() {
    static const std::vector<Partition> cols = {Partition{3, 3}, Partition{2, 2}, Partition{1, 1},
                                                Partition{3}, Partition{2}, Partition{1}};
    return cols;
}

inline const std::vector<GoldenRow>& dynkin_table() {
    static const std::vector<GoldenRow> rows = {
        {{1, 2}, {0, 0, 0, 0, 0, 0}}, {{1, 3}, {1, 0, 0, 0, 0, 0}}, {{1, 4}, {1, 1, 0, 0, 0, 0}},
        {{1, 5}, {1, 1, 1, 0, 0, 0}}, {{2, 3}, {1, 0, 0, 1, 0, 0}}, {{2, 4}, {1, 1, 0, 1, 0, 0}},
        {{2, 5}, {1, 1, 1, 1, 0, 0}}, {{3, 4}, {2, 1, 0, 1, 1, 0}}, {{3, 5}, {2, 1, 1, 1, 1, 0}},
        {{4, 5}, {2, 2, 1, 1, 1, 1}},
    };
    return rows;
}

// B~ = B + M for G_rec of P_{3,5}; rows and columns in this label order.
// x_mu = prod_nu (P_nu / P_max)^{B~[mu][nu]}
inline const std::vector<Partition>& twist_labels() {
    static const std::vector<Partition> l = {Partition{1}, Partition{2}, Partition{3}, Partition{3, 3},
                                             Partition{2, 2}, Partition{1, 1}, Partition()};
    return l;
}

inline const std::vector<std::vector<int>>& twist_matrix() {
    static const std::vector<std::vector<int>> m = {
        {0, 1, 0, 0, -1, 1, -1}, {-1, 0, 1, -1, 1, 0, 0}, {0, -1, 1, 0, 0, 0, 0}, {0, 1, -1, 0, -1, 0, 0},
        {1, -1, 0, 0, 1, -1, 0}, {-1, 0, 0, 0, 0, 1, 0},  {1, 0, 0, 0, 0, 0, 0},
    };
    return m;
}

// Class G^1 of P_{3,6} and its half-integral vertex, listed in the order of the published table.
inline ClassKey g1_key() { return parse_key("0;1,1;2;1,1,1;2,1;3;2,2,2;3,3;3,3,2;3,3,3"); }
inline ClassKey g2_key() { return parse_key("0;1,1,1;3;2,2,1;3,1,1;3,2;2,2,2;3,2,1;3,3;3,3,3"); }

inline const std::vector<std::pair<Partition, Q>>& g1_vertex_table() {
    static const std::vector<std::pair<Partition, Q>> t = {
        {Partition{3, 3, 3}, Q(3, 2)}, {Partition{3, 3, 2}, Q(3, 2)}, {Partition{2, 2, 2}, Q(1)},
        {Partition{1, 1, 1}, Q(1, 2)}, {Partition{3, 3}, Q(1)},       {Partition{2, 1}, Q(1, 2)},
        {Partition{1, 1}, Q(1, 2)},    {Partition{3}, Q(1, 2)},       {Partition{2}, Q(1, 2)},
    };
    return t;
}

// ---------------------------------------------------------------- helpers

inline std::string shape_str(const GridShape& s) { return "P(" + std::to_string(s.k) + "," + std::to_string(s.n) + ")"; }

inline std::string vec_str(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + q_str(v[i]);
    return s + ")";
}

inline std::string vec_str(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

struct VerifyOptions {
    int threads = 1;
    std::uint64_t seed = 20240601;
    bool deep = false;
};

// Per-class valuation tables, indexed by partition in all_partitions order.
struct ClassValuations {
    std::vector<Partition> coords;
    std::vector<ValuationVector> vmin;
    std::vector<ValuationVector> vmax;
};

// Caches censuses and valuation tables so suites can share them.
class Verifier {
public:
    explicit Verifier(VerifyOptions opt = {}) : opt_(opt) {}

    const VerifyOptions& options() const { return opt_; }

    const CensusReport& census_of(const GridShape& s) {
        auto key = std::make_pair(s.k, s.n);
        auto it = census_.find(key);
        if (it != census_.end()) return *it->second;
        CensusOptions co;
        co.threads = opt_.threads;
        co.seed = opt_.seed;
        co.deep = opt_.deep;
        auto rep = std::make_unique<CensusReport>(census(s, co));
        return *census_.emplace(key, std::move(rep)).first->second;
    }

    const std::vector<ClassValuations>& valuations_of(const GridShape& s) {
        auto key = std::make_pair(s.k, s.n);
        auto it = vals_.find(key);
        if (it != vals_.end()) return it->second;
        const auto& rep = census_of(s);
        std::vector<ClassValuations> out(rep.classes.size());
        auto lams = all_partitions(s);
        parallel_for(static_cast<int>(rep.classes.size()), opt_.threads, [&](int i) {
            NetworkChart c = make_chart(rep.classes[i].graph);
            Matrix<Poly> A = boundary_matrix(c);
            out[i].coords = c.coords;
            for (const auto& lam : lams) {
                Poly p = flow_polynomial(c, A, partition_to_south_steps(lam, s));
                out[i].vmin.push_back(val_min_of(p, "P_" + lam.str()));
                out[i].vmax.push_back(val_max_of(p, "P_" + lam.str()));
            }
        });
        return vals_.emplace(key, std::move(out)).first->second;
    }

private:
    VerifyOptions opt_;
    std::map<std::pair<int, int>, std::unique_ptr<CensusReport>> census_;
    std::map<std::pair<int, int>, std::vector<ClassValuations>> vals_;
};

// Runs body, timing it and turning exceptions into failures.
inline Check run_check(int id, const std::string& name, const std::function<void(Check&)>& body) {
    Check c;
    c.id = id;
    c.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

// ---------------------------------------------------------------- properties

inline Check check_golden_table(int id = 1) {
    return run_check(id, "golden valuation table on G_rec of P(3,5)", [](Check& c) {
        GridShape s(3, 5);
        NetworkChart ch = make_chart(build_rectangles(s));
        int bad = 0;
        std::string first;
        for (const auto& row : dynkin_table()) {
            auto v = val_min_of(flow_polynomial(ch, row.J), "P_" + subset_str(row.J));
            std::vector<int> got;
            for (const auto& col : dynkin_columns()) got.push_back(v.at(ch.coord_index(col)));
            if (got != row.val) {
                if (!bad++) first = "P_" + subset_str(row.J) + " got " + vec_str(got) + " want " + vec_str(row.val);
            }
        }
        c.pass = bad == 0;
        c.detail = c.pass ? "10 rows x 6 columns match" : std::to_string(bad) + " rows differ; first " + first;
    });
}

inline Check check_census_36(Verifier& V, int id = 2) {
    return run_check(id, "census of P(3,6): 34 classes, 2 non-integral, G1 vertex", [&](Check& c) {
        GridShape s(3, 6);
        auto t0 = std::chrono::steady_clock::now();
        const auto& rep = V.census_of(s);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream d;
        d << rep.classes.size() << " classes, " << rep.integral << " integral, " << rep.nonintegral << " non-integral";
        bool ok = rep.classes.size() == 34 && rep.nonintegral == 2;
        int g1 = rep.find(g1_key());
        if (g1 < 0) {
            ok = false;
            d << "; class G1 not found";
        } else {
            const auto& rec = rep.classes[g1];
            QVec want(rec.gamma->dim());
            for (const auto& [lab, x] : g1_vertex_table()) want.at(detail::coord_pos(rec.gamma->h.coords, lab)) = x;
            bool match = rec.nonintegral.size() == 1 && rec.nonintegral[0] == want;
            QVec shown;
            if (!rec.nonintegral.empty())
                for (const auto& [lab, x] : g1_vertex_table()) shown.push_back(rec.nonintegral[0][detail::coord_pos(rec.gamma->h.coords, lab)]);
            d << "; G1 vertex in table order " << (shown.empty() ? std::string("none") : vec_str(shown));
            ok = ok && match;
        }
        if (V.options().threads == 1 && secs > 120) {
            ok = false;
            d << "; over the 2 min budget";
        }
        d << "; " << secs << " s";
        c.pass = ok;
        c.detail = d.str();
    });
}

inline Check check_census_37(Verifier& V, int id = 3) {
    return run_check(id, "census of P(4,7) (Gr(3,7)): 259 classes, 216 integral, 43 non-integral", [&](Check& c) {
        GridShape s(4, 7);
        const auto& rep = V.census_of(s);
        std::ostringstream d;
        d << rep.classes.size() << " classes, " << rep.integral << " integral, " << rep.nonintegral << " non-integral (expected 259/216/43); "
          << rep.seconds << " s";
        c.pass = rep.classes.size() == 259 && rep.integral == 216 && rep.nonintegral == 43 && rep.seconds <= 3600;
        c.detail = d.str();
    });
}

inline Check check_lattice_counts(Verifier& V, const std::vector<GridShape>& shapes, int r_max = 3, int id = 4) {
    return run_check(id, "lattice counts equal GT pattern counts; Lattice(Gamma) = MaxDiag valuations", [&](Check& c) {
        std::ostringstream d;
        bool ok = true;
        for (const auto& s : shapes) {
            const auto& rep = V.census_of(s);
            auto lams = all_partitions(s);
            for (int r = 1; r <= r_max && ok; ++r) {
                long long want = gt_pattern_count(s, r);
                for (const auto& rec : rep.classes) {
                    auto L = lattice_points(*rec.gamma, r);
                    if (static_cast<long long>(L.size()) != want) {
                        ok = false;
                        d << shape_str(s) << " class " << key_str(rec.key) << " r=" << r << ": " << L.size() << " points, want " << want << "; ";
                        break;
                    }
                    if (r == 1) {
                        std::set<IVec> got(L.begin(), L.end()), exp;
                        for (const auto& lam : lams) {
                            auto v = maxdiag_valuation(lam, rec.gamma->h.coords);
                            exp.insert(IVec(v.begin(), v.end()));
                        }
                        if (got != exp) {
                            ok = false;
                            d << shape_str(s) << " class " << key_str(rec.key) << ": r=1 lattice points differ from MaxDiag valuations; ";
                            break;
                        }
                    }
                }
            }
            if (ok) d << shape_str(s) << " " << rep.classes.size() << " classes ok; ";
        }
        c.pass = ok;
        c.detail = d.str();
    });
}

inline Check check_volume(Verifier& V, const std::vector<GridShape>& shapes, int id = 5) {
    return run_check(id, "volume of Gamma equals the product formula", [&](Check& c) {
        std::ostringstream d;
        bool ok = true;
        for (const auto& s : shapes) {
            Q want = gamma_volume_formula(s);
            int bad = 0;
            for (const auto& rec : V.census_of(s).classes) {
                Q got = volume(*rec.gamma);
                if (got != want) {
                    if (!bad++) d << shape_str(s) << " class " << key_str(rec.key) << " volume " << q_str(got) << "; ";
                }
            }
            ok = ok && bad == 0;
            d << shape_str(s) << " " << q_str(want) << (bad ? " FAILED" : " ok") << "; ";
        }
        c.pass = ok;
        c.detail = d.str();
    });
}

inline Check check_dual_construction(Verifier& V, const std::vector<GridShape>& shapes, int id = 6) {
    return run_check(id, "Marsh-Scott Gamma equals Gamma_rec transported by tropical mutation", [&](Check& c) {
        std::ostringstream d;
        bool ok = true;
        for (const auto& s : shapes) {
            const auto& rep = V.census_of(s);
            std::vector<char> same(rep.classes.size(), 0);
            parallel_for(static_cast<int>(rep.classes.size()), V.options().threads, [&](int i) {
                same[i] = same_polytope(transported_gamma(s, rep.classes[i].path), *rep.classes[i].gamma);
            });
            int bad = 0;
            for (std::size_t i = 0; i < same.size(); ++i)
                if (!same[i] && !bad++) d << shape_str(s) << " class " << key_str(rep.classes[i].key) << " differs; ";
            ok = ok && bad == 0;
            d << shape_str(s) << " " << rep.classes.size() - bad << "/" << rep.classes.size() << " agree; ";
        }
        c.pass = ok;
        c.detail = d.str();
    });
}

inline Check check_maxdiag(Verifier& V, const std::vector<GridShape>& shapes, int id = 7) {
    return run_check(id, "val_min and val_max match the MaxDiag formulas", [&](Check& c) {
        std::ostringstream d;
        bool ok = true;
        for (const auto& s : shapes) {
            const auto& rep = V.census_of(s);
            const auto& vals = V.valuations_of(s);
            auto lams = all_partitions(s);
            int bad = 0;
            for (std::size_t i = 0; i < vals.size(); ++i)
                for (std::size_t l = 0; l < lams.size(); ++l) {
                    bool lo = vals[i].vmin[l] == maxdiag_valuation(lams[l], vals[i].coords);
                    bool hi = vals[i].vmax[l] == highest_valuation(lams[l], vals[i].coords, s);
                    if ((!lo || !hi) && !bad++)
                        d << shape_str(s) << " class " << key_str(rep.classes[i].key) << " P_" << lams[l].str() << (lo ? " val_max" : " val_min")
                          << " differs; ";
                }
            ok = ok && bad == 0;
            d << shape_str(s) << " " << vals.size() * lams.size() << " pairs" << (bad ? " FAILED" : " ok") << "; ";
        }
        c.pass = ok;
        c.detail = d.str();
    });
}

inline Check check_mutation_transport(Verifier& V, const GridShape& s, int id = 8) {
    return run_check(id, "tropical mutation carries valuations and lattice points across every square move", [&](Check& c) {
        const auto& rep = V.census_of(s);
        const auto& vals = V.valuations_of(s);
        std::vector<std::set<IVec>> lat(rep.classes.size());
        for (std::size_t i = 0; i < rep.classes.size(); ++i) {
            auto L = lattice_points(*rep.classes[i].gamma, 1);
            lat[i] = std::set<IVec>(L.begin(), L.end());
        }
        int bad = 0;
        std::ostringstream d;
        for (const auto& m : rep.moves) {
            PlabicInfo info = analyze(rep.classes[m.from].graph);
            auto step = MutationStep::make(info.quiver, m.old_label, m.new_label);
            bool ok = true;
            for (std::size_t l = 0; l < vals[m.from].vmin.size(); ++l)
                if (trop_mutate_point(step, vals[m.from].vmin[l]) != vals[m.to].vmin[l]) ok = false;
            std::set<IVec> image;
            for (const auto& p : lat[m.from]) image.insert(trop_mutate_point(step, p));
            if (image != lat[m.to]) ok = false;
            if (!ok && !bad++) d << "move at " << m.old_label.str() << " from " << key_str(rep.classes[m.from].key) << " fails; ";
        }
        c.pass = bad == 0 && !rep.moves.empty();
        d << shape_str(s) << " " << rep.moves.size() - bad << "/" << rep.moves.size() << " moves ok";
        c.detail = d.str();
    });
}

inline Check check_gt(const std::vector<GridShape>& shapes, const std::vector<int>& rs, int id = 9) {
    return run_check(id, "F(Gamma^r of G_rec) equals the GT polytope; |det F| = 1", [&](Check& c) {
        std::ostringstream d;
        bool ok = true;
        int count = 0;
        for (const auto& s : shapes) {
            Q det = determinant(gt_map_matrix(s));
            if (abs(det) != 1) {
                ok = false;
                d << shape_str(s) << " det F = " << q_str(det) << "; ";
            }
            auto X = marsh_scott_expansion(build_rectangles(s));
            for (int r : rs) {
                QPolytope G(gamma_polytope(X, Q(r)));
                QPolytope F(gt_map_polytope(s, G.h));
                QPolytope T(gt_polytope(s, Q(r)));
                if (canonical_facets(F) != canonical_facets(T)) {
                    ok = false;
                    d << shape_str(s) << " r=" << r << " facets differ; ";
                }
                ++count;
            }
        }
        c.pass = ok;
        d << count << " (shape, r) pairs checked";
        c.detail = d.str();
    });
}

inline Check check_puiseux(const std::vector<GridShape>& shapes, int id = 10) {
    return run_check(id, "lowest t-exponent of p_mu(x_lambda(t)) equals MaxDiag(mu \\ lambda)", [&](Check& c) {
        std::ostringstream d;
        int pairs = 0, bad = 0;
        for (const auto& s : shapes)
            for (const auto& lam : all_partitions(s)) {
                auto w = puiseux_witness(lam, s);
                for (const auto& mu : all_partitions(s)) {
                    ++pairs;
                    if (w.lowest.at(mu) != max_diag(mu, lam) && !bad++)
                        d << shape_str(s) << " lambda " << lam.str() << " mu " << mu.str() << " exponent " << w.lowest.at(mu) << "; ";
                }
            }
        c.pass = bad == 0;
        d << pairs - bad << "/" << pairs << " pairs ok";
        c.detail = d.str();
    });
}

inline Check check_translation(Verifier& V, const std::vector<GridShape>& shapes, int id = 11) {
    return run_check(id, "Gamma(r_1..r_n) = Gamma^{sum r} + v_D; Gamma^{-1} empty; Gamma^0 a point", [&](Check& c) {
        std::ostringstream d;
        d << "seed " << V.options().seed << "; ";
        std::mt19937_64 rng(V.options().seed);
        std::uniform_int_distribution<int> pick(-2, 3);
        bool ok = true;
        for (const auto& s : shapes) {
            std::vector<std::vector<Q>> rvecs;
            while (rvecs.size() < 3) {
                std::vector<Q> r(s.n);
                int sum = 0;
                for (auto& x : r) sum += (x = pick(rng)).get_num().get_si();
                if (sum >= 0) rvecs.push_back(r);
            }
            int bad = 0;
            for (const auto& rec : V.census_of(s).classes) {
                auto T = gamma_system(marsh_scott_expansion(rec.graph));
                for (const auto& rv : rvecs) {
                    Q sum = 0;
                    for (const auto& x : rv) sum += x;
                    QPolytope A(gamma_polytope(T, rv));
                    QPolytope B(gamma_polytope(T, r_vector(s, sum)));
                    QVec t = translation_vector(rv, T.coords, s);
                    std::vector<QVec> moved;
                    for (auto v : B.verts) {
                        for (std::size_t i = 0; i < v.size(); ++i) v[i] += t[i];
                        moved.push_back(std::move(v));
                    }
                    std::sort(moved.begin(), moved.end());
                    if (moved != A.verts && !bad++) d << shape_str(s) << " class " << key_str(rec.key) << " translation fails; ";
                }
                QPolytope neg(gamma_polytope(T, r_vector(s, -1)));
                QPolytope zero(gamma_polytope(T, r_vector(s, 0)));
                if ((!neg.empty() || zero.verts.size() != 1) && !bad++) d << shape_str(s) << " class " << key_str(rec.key) << " degenerate cases fail; ";
            }
            ok = ok && bad == 0;
            d << shape_str(s) << (bad ? " FAILED" : " ok") << "; ";
        }
        c.pass = ok;
        c.detail = d.str();
    });
}

inline Check check_twist(std::uint64_t seed, int points = 20, int id = 12) {
    return run_check(id, "left twist diagram closes on G_rec of P(3,5)", [&](Check& c) {
        GridShape s(3, 5);
        NetworkChart ch = make_chart(build_rectangles(s));
        const auto& labels = twist_labels();
        const auto& BM = twist_matrix();
        FpRng rng(seed);
        int ok = 0, tried = 0;
        while (tried < points) {
            Matrix<Fp> A(s.rows(), std::vector<Fp>(s.n, Fp(0)));
            for (auto& row : A)
                for (auto& x : row) x = rng.any();
            try {
                Matrix<Fp> T = left_twist(A);
                std::vector<Fp> P;
                for (const auto& l : labels) P.push_back(minor(A, zero_based(partition_to_south_steps(l, s))));
                Fp pmax = minor(A, zero_based(partition_to_south_steps(max_partition(s), s)));
                if (is_zero(pmax) || std::any_of(P.begin(), P.end(), [](const Fp& v) { return is_zero(v); })) continue;
                for (auto& v : P) v = v / pmax;
                std::vector<Fp> x(ch.dim());
                for (std::size_t r = 0; r < labels.size(); ++r) {
                    if (labels[r].empty()) continue;
                    Fp v(1);
                    for (std::size_t j = 0; j < labels.size(); ++j) {
                        int e = BM[r][j];
                        if (e > 0) v = v * P[j].pow(e);
                        else if (e < 0) v = v / P[j].pow(-e);
                    }
                    x.at(ch.coord_index(labels[r])) = v;
                }
                ++tried;
                ok += projectively_equal(plucker_vector(boundary_matrix_at(ch, x), s), plucker_vector(T, s));
            } catch (const not_in_open_cell&) {
            }
        }
        c.pass = ok == points;
        c.detail = std::to_string(ok) + "/" + std::to_string(points) + " points agree mod 2^61-1; seed " + std::to_string(seed);
    });
}

inline Check check_witness(Verifier& V, int id = 13) {
    return run_check(id, "val of (P124 P356 - P123 P456)/Pmax^2 halved equals the G1 vertex", [&](Check& c) {
        GridShape s(3, 6);
        const auto& rep = V.census_of(s);
        int i = rep.find(g1_key());
        if (i < 0) throw std::runtime_error("class G1 not found");
        const auto& rec = rep.classes[i];
        NetworkChart ch = make_chart(rec.graph);
        Matrix<Poly> A = boundary_matrix(ch);
        auto P = [&](const Subset& J) { return flow_polynomial(ch, A, J); };
        Poly f = P({1, 2, 4}) * P({3, 5, 6}) - P({1, 2, 3}) * P({4, 5, 6});
        Poly pmax = P({1, 2, 3});
        if (!(pmax == Poly::constant(ch.dim(), 1))) throw std::logic_error("P_max is not 1 in the network chart");
        auto m = strongly_min_term(f);
        if (!m) throw std::runtime_error("f has no strongly minimal term");
        QVec half;
        for (auto e : m->exps) half.push_back(Q(e, 2));
        for (auto& x : half) x.canonicalize();
        bool lattice_excludes = true;
        for (const auto& p : lattice_points(*rec.gamma, 1)) {
            QVec q;
            for (auto x : p) q.emplace_back(static_cast<long>(x));
            if (q == half) lattice_excludes = false;
        }
        c.pass = rec.nonintegral.size() == 1 && half == rec.nonintegral[0] && lattice_excludes;
        c.detail = "val(f)/2 = " + vec_str(half) + (rec.nonintegral.empty() ? std::string(" no non-integral vertex") : " vertex " + vec_str(rec.nonintegral[0]));
    });
}

// ---------------------------------------------------------------- suites

inline const std::vector<GridShape>& criterion_shapes() {
    static const std::vector<GridShape> s = {GridShape(2, 4), GridShape(3, 5), GridShape(2, 5), GridShape(3, 6)};
    return s;
}

inline std::vector<GridShape> shapes_up_to(int n_max) {
    std::vector<GridShape> out;
    for (int n = 2; n <= n_max; ++n)
        for (int k = 1; k < n; ++k) out.emplace_back(k, n);
    return out;
}

// The thirteen acceptance criteria; 3 runs only with options.deep.
inline std::vector<Check> acceptance_suite(Verifier& V) {
    const auto& S = criterion_shapes();
    std::vector<Check> out;
    out.push_back(check_golden_table());
    out.push_back(check_census_36(V));
    if (V.options().deep) {
        out.push_back(check_census_37(V));
    } else {
        Check c;
        c.id = 3;
        c.name = "census of P(4,7) (Gr(3,7)): 259 classes, 216 integral, 43 non-integral";
        c.skipped = true;
        c.detail = "needs --deep";
        out.push_back(c);
    }
    out.push_back(check_lattice_counts(V, S));
    out.push_back(check_volume(V, S));
    out.push_back(check_dual_construction(V, {GridShape(3, 5), GridShape(3, 6)}));
    out.push_back(check_maxdiag(V, S));
    out.push_back(check_mutation_transport(V, GridShape(3, 6)));
    out.push_back(check_gt(shapes_up_to(6), {1, 2}));
    out.push_back(check_puiseux({GridShape(3, 5), GridShape(2, 5)}));
    out.push_back(check_translation(V, S));
    out.push_back(check_twist(V.options().seed));
    out.push_back(check_witness(V));
    return out;
}

// Property checks for one shape; full adds r = 3 lattice counts and the shape's golden data.
inline std::vector<Check> shape_suite(Verifier& V, const GridShape& s, bool full) {
    std::vector<Check> out;
    out.push_back(check_lattice_counts(V, {s}, full ? 3 : 2));
    out.push_back(check_volume(V, {s}));
    out.push_back(check_dual_construction(V, {s}));
    out.push_back(check_maxdiag(V, {s}));
    out.push_back(check_mutation_transport(V, s));
    out.push_back(check_gt({s}, {1, 2}));
    out.push_back(check_translation(V, {s}));
    if (full) {
        out.push_back(check_puiseux({s}));
        if (s.k == 3 && s.n == 5) {
            out.push_back(check_golden_table());
            out.push_back(check_twist(V.options().seed));
        }
        if (s.k == 3 && s.n == 6) {
            out.push_back(check_census_36(V));
            out.push_back(check_witness(V));
        }
        if (s.k == 4 && s.n == 7) out.push_back(check_census_37(V));
    }
    for (auto& c : out) c.id = 0;
    return out;
}

}  // namespace nokit
