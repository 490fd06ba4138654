#include <gtest/gtest.h>

#include <set>

#include "nokit/charts.hpp"
#include "nokit/field.hpp"
#include "nokit/plabic.hpp"

using namespace nokit;

namespace {

bool same_graph(const PlabicGraph& a, const PlabicGraph& b) {
    return a.shape == b.shape && a.color == b.color && a.edges == b.edges && a.rot == b.rot;
}

std::vector<GridShape> small_shapes() {
    std::vector<GridShape> out;
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n; ++k) out.emplace_back(k, n);
    return out;
}

// Plucker coordinates of a random point of the Grassmannian, keyed by partition.
std::map<Partition, Fp> random_pluckers(const GridShape& s, FpRng& rng) {
    Matrix<Fp> A(s.rows(), std::vector<Fp>(s.n));
    for (auto& row : A)
        for (auto& x : row) x = rng.any();
    std::map<Partition, Fp> P;
    for (const auto& lam : all_partitions(s)) P[lam] = minor(A, zero_based(partition_to_south_steps(lam, s)));
    return P;
}

// p_v p_v' = prod over arrows in + prod over arrows out
bool exchange_holds(const Quiver& q, const Partition& v, const Partition& fresh, const std::map<Partition, Fp>& P) {
    int iv = q.index_of(v);
    Fp in(1), out(1);
    for (int j = 0; j < q.size(); ++j) {
        int b = q.b[j][iv];
        if (b > 0) in = in * P.at(q.labels[j]).pow(b);
        if (b < 0) out = out * P.at(q.labels[j]).pow(-b);
    }
    return P.at(v) * P.at(fresh) == in + out;
}

}  // namespace

TEST(Rectangles, LabelsAreRectangles) {
    GridShape s(3, 5);
    PlabicInfo info = analyze(build_rectangles(s));
    std::vector<Partition> want = {Partition(), Partition{1}, Partition{1, 1}, Partition{2}, Partition{3}, Partition{2, 2}, Partition{3, 3}};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(info.labels, want);
}

TEST(Rectangles, FiveNineGrid) {
    GridShape s(5, 9);
    PlabicGraph g = build_rectangles(s);
    PlabicInfo info = analyze(g);
    EXPECT_EQ(static_cast<int>(info.labels.size()), s.dim() + 1);
    for (const auto& p : info.labels) {
        if (p.empty()) continue;
        EXPECT_EQ(Partition::rectangle(p.num_rows(), p.row(0)), p);
    }
    EXPECT_EQ(trip_permutation(g), pi_kn(s));
    EXPECT_EQ(perfect_orientation(g).sources, (Subset{1, 2, 3, 4}));
}

TEST(Rectangles, FaceCountTripsAndFrozenLabels) {
    for (const auto& s : small_shapes()) {
        PlabicGraph g = build_rectangles(s);
        PlabicInfo info = analyze(g);
        EXPECT_EQ(static_cast<int>(info.labels.size()), s.dim() + 1);
        EXPECT_EQ(trip_permutation(g), pi_kn(s));
        std::set<Partition> frozen, mus;
        for (int i = 0; i < info.quiver.size(); ++i)
            if (info.quiver.frozen[i]) frozen.insert(info.quiver.labels[i]);
        for (int i = 0; i < s.n; ++i) mus.insert(frozen_mu(i, s));
        EXPECT_EQ(frozen, mus);
    }
}

TEST(Trips, PermutationOfThreeFive) { EXPECT_EQ(pi_kn(GridShape(3, 5)), (std::vector<int>{3, 4, 5, 1, 2})); }

TEST(Quiver, ExchangeRowsOnThreeFive) {
    PlabicInfo info = analyze(build_rectangles(GridShape(3, 5)));
    std::vector<Partition> cols = {Partition{1}, Partition{2}, Partition{3}, Partition{3, 3}, Partition{2, 2}, Partition{1, 1}, Partition()};
    std::vector<int> row1, row2;
    for (const auto& c : cols) {
        row1.push_back(info.quiver.at(Partition{1}, c));
        row2.push_back(info.quiver.at(Partition{2}, c));
    }
    EXPECT_EQ(row1, (std::vector<int>{0, 1, 0, 0, -1, 1, -1}));
    EXPECT_EQ(row2, (std::vector<int>{-1, 0, 1, -1, 1, 0, 0}));
}

TEST(Quiver, SkewSymmetricAndMutableCount) {
    PlabicInfo info = analyze(build_rectangles(GridShape(3, 6)));
    const Quiver& q = info.quiver;
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j) EXPECT_EQ(q.b[i][j], -q.b[j][i]);
    EXPECT_EQ(info.mutable_labels().size(), 4u);
    EXPECT_THROW(q.mutate(q.index_of(Partition())), std::domain_error);
}

TEST(SquareMove, PreservesTripsAndMutatesQuiver) {
    for (const auto& s : {GridShape(3, 5), GridShape(3, 6), GridShape(2, 6), GridShape(4, 7)}) {
        PlabicGraph g = build_rectangles(s);
        PlabicInfo info = analyze(g);
        for (const auto& lab : square_faces(g, info)) {
            PlabicGraph h = square_move(g, info, lab);
            PlabicInfo hi = analyze(h);
            EXPECT_EQ(hi.perm, info.perm);
            std::vector<Partition> fresh;
            std::set_difference(hi.labels.begin(), hi.labels.end(), info.labels.begin(), info.labels.end(), std::back_inserter(fresh));
            ASSERT_EQ(fresh.size(), 1u);
            Quiver want = info.quiver.mutate(info.quiver.index_of(lab)).relabel(info.quiver.index_of(lab), fresh[0]);
            EXPECT_EQ(hi.quiver, want) << "move at " << lab.str();
            PlabicGraph back = square_move(h, hi, fresh[0]);
            EXPECT_EQ(analyze(back).labels, info.labels);
        }
    }
}

TEST(SquareMove, NewLabelSatisfiesTheExchangeRelation) {
    // every square move of P(3,6): the trip-derived label and no other satisfies the exchange binomial
    GridShape s(3, 6);
    FpRng rng(404);
    std::vector<std::map<Partition, Fp>> pts;
    for (int t = 0; t < 20; ++t) pts.push_back(random_pluckers(s, rng));
    std::map<std::vector<Partition>, PlabicGraph> seen;
    std::vector<PlabicGraph> todo = {build_rectangles(s)};
    seen[analyze(todo[0]).labels] = todo[0];
    int moves = 0;
    while (!todo.empty()) {
        PlabicGraph g = todo.back();
        todo.pop_back();
        PlabicInfo info = analyze(g);
        for (const auto& lab : square_faces(g, info)) {
            PlabicGraph h = square_move(g, info, lab);
            PlabicInfo hi = analyze(h);
            std::vector<Partition> fresh;
            std::set_difference(hi.labels.begin(), hi.labels.end(), info.labels.begin(), info.labels.end(), std::back_inserter(fresh));
            ASSERT_EQ(fresh.size(), 1u);
            int matches = 0;
            for (const auto& cand : all_partitions(s)) {
                bool all = true;
                for (const auto& P : pts) all = all && exchange_holds(info.quiver, lab, cand, P);
                if (all) {
                    ++matches;
                    EXPECT_EQ(cand, fresh[0]);
                }
            }
            EXPECT_EQ(matches, 1);
            ++moves;
            if (seen.emplace(hi.labels, h).second) todo.push_back(h);
        }
    }
    EXPECT_EQ(seen.size(), 34u);
    EXPECT_EQ(moves, 120);
}

TEST(SquareMove, RejectsNonSquareFaces) {
    PlabicGraph g = build_rectangles(GridShape(3, 5));
    EXPECT_THROW(square_move(g, Partition{3, 3}), move_error);
    EXPECT_THROW(square_move(g, Partition{2, 1}), std::out_of_range);
}

TEST(Normalize, IdempotentAndInvariant) {
    for (const auto& s : small_shapes()) {
        PlabicGraph g = build_rectangles(s);
        PlabicGraph h = normalize(g);
        EXPECT_TRUE(same_graph(normalize(h), h));
        EXPECT_EQ(trip_permutation(h), trip_permutation(g));
        EXPECT_EQ(analyze(h).labels, analyze(g).labels);
    }
}

TEST(Validate, RejectsBrokenRotation) {
    PlabicGraph g = build_rectangles(GridShape(2, 4));
    g.rot[g.n()].push_back(0);
    EXPECT_THROW(g.validate(), structure_error);
}

TEST(Orientation, SourcesAndAcyclic) {
    for (const auto& s : small_shapes()) {
        PlabicGraph g = build_rectangles(s);
        PerfectOrientation O = perfect_orientation(g);
        Subset I;
        for (int i = 1; i <= s.rows(); ++i) I.push_back(i);
        EXPECT_EQ(O.sources, I);
        EXPECT_EQ(enumerate_matchings(g, I).size(), 1u);
        EXPECT_EQ(static_cast<int>(O.topo.size()), g.num_vertices());
    }
}

TEST(Matchings, CountsOnThreeFive) {
    PlabicGraph g = build_rectangles(GridShape(3, 5));
    EXPECT_EQ(enumerate_matchings(g, {1, 3}).size(), 1u);
    EXPECT_EQ(enumerate_matchings(g, {2, 4}).size(), 2u);
    EXPECT_TRUE(enumerate_matchings(g, {1, 2, 3}).empty());
}

TEST(Matchings, LatticeHasUniqueExtremes) {
    for (const auto& s : {GridShape(3, 5), GridShape(3, 6), GridShape(2, 5)}) {
        PlabicGraph g = build_rectangles(s);
        PlabicInfo info = analyze(g);
        for (const auto& lam : all_partitions(s)) {
            auto L = matchings_with_boundary(g, info, partition_to_south_steps(lam, s));
            ASSERT_FALSE(L.elements.empty());
            EXPECT_GE(L.min, 0);
            EXPECT_GE(L.max, 0);
            for (const auto& m : L.elements) {
                EXPECT_TRUE(is_matching(g, m));
                EXPECT_EQ(matching_boundary(g, m), partition_to_south_steps(lam, s));
            }
        }
    }
}

TEST(Matchings, CountEqualsFlowCount) {
    for (const auto& s : {GridShape(3, 5), GridShape(3, 6)}) {
        NetworkChart c = make_chart(build_rectangles(s));
        for (const auto& lam : all_partitions(s)) {
            Poly p = flow_polynomial(c, lam);
            mpz_class flows = 0;
            for (const auto& [e, k] : p.terms()) flows += k;
            EXPECT_EQ(flows, mpz_class(static_cast<unsigned long>(enumerate_matchings(c.graph, partition_to_south_steps(lam, s)).size())));
        }
    }
}
