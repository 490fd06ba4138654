#include <gtest/gtest.h>

#include <random>
#include <set>

#include "nokit/census.hpp"
#include "nokit/mirror.hpp"
#include "nokit/polyhedra.hpp"
#include "nokit/verify.hpp"

using namespace nokit;

namespace {

std::vector<Partition> dummy_coords(int d) {
    std::vector<Partition> c;
    for (int i = 1; i <= d; ++i) c.push_back(Partition{i});
    return c;
}

// 0 <= x_i <= 1
HPolytope cube(int d) {
    HPolytope H;
    H.coords = dummy_coords(d);
    for (int i = 0; i < d; ++i) {
        QVec a(d, 0);
        a[i] = 1;
        H.ineqs.push_back({a, 0});
        a[i] = -1;
        H.ineqs.push_back({a, 1});
    }
    return H;
}

// x_i >= 0, sum x_i <= 1
HPolytope simplex(int d) {
    HPolytope H;
    H.coords = dummy_coords(d);
    for (int i = 0; i < d; ++i) {
        QVec a(d, 0);
        a[i] = 1;
        H.ineqs.push_back({a, 0});
    }
    H.ineqs.push_back({QVec(d, -1), 1});
    return H;
}

}  // namespace

TEST(Vertices, Cube) {
    QPolytope P(cube(3));
    EXPECT_EQ(P.verts.size(), 8u);
    EXPECT_EQ(volume(P), 1);
    EXPECT_EQ(lattice_points(P, 2).size(), 27u);
    EXPECT_EQ(canonical_facets(P).size(), 6u);
}

TEST(Vertices, SimplexVolume) {
    Q fact = 1;
    for (int d = 1; d <= 5; ++d) {
        fact *= d;
        QPolytope P(simplex(d));
        EXPECT_EQ(P.verts.size(), static_cast<std::size_t>(d + 1));
        EXPECT_EQ(volume(P), 1 / fact);
    }
}

TEST(Vertices, RedundantAndEmpty) {
    HPolytope H = cube(2);
    H.ineqs.push_back({QVec{1, 1}, 5});
    QPolytope P(H);
    EXPECT_EQ(P.verts.size(), 4u);
    EXPECT_EQ(canonical_facets(P).size(), 4u);
    HPolytope E = cube(2);
    E.ineqs.push_back({QVec{-1, 0}, Q(-2)});
    EXPECT_TRUE(QPolytope(E).empty());
}

TEST(Vertices, UnboundedThrows) {
    HPolytope H;
    H.coords = dummy_coords(2);
    H.ineqs.push_back({QVec{1, 0}, 0});
    H.ineqs.push_back({QVec{0, 1}, 0});
    EXPECT_THROW(vertices(H), unbounded_error);
}

TEST(Vertices, HullRoundTrip) {
    QPolytope P(simplex(3));
    QPolytope Q2(hull(P.h.coords, P.verts));
    EXPECT_TRUE(same_polytope(P, Q2));
    EXPECT_EQ(canonical_facets(P), canonical_facets(Q2));
}

TEST(Lattice, HalfIntegralTriangle) {
    // vertices (0,0), (1,0), (0,1/2)
    HPolytope H;
    H.coords = dummy_coords(2);
    H.ineqs = {{QVec{1, 0}, 0}, {QVec{0, 1}, 0}, {QVec{-1, -2}, 1}};
    QPolytope P(H);
    EXPECT_FALSE(P.is_integral());
    EXPECT_EQ(P.nonintegral_vertices().size(), 1u);
    EXPECT_EQ(lattice_points(P, 1).size(), 2u);
    EXPECT_EQ(lattice_points(P, 2).size(), 4u);
    EXPECT_EQ(volume(P), Q(1, 4));
    EXPECT_THROW(lattice_points(P, -1), std::invalid_argument);
}

TEST(GT, PatternCounts) {
    EXPECT_EQ(gt_pattern_count(GridShape(2, 4), 1), 6);
    EXPECT_EQ(gt_pattern_count(GridShape(2, 4), 2), 20);
    EXPECT_EQ(gt_pattern_count(GridShape(3, 5), 1), 10);
    EXPECT_EQ(gt_pattern_count(GridShape(3, 5), 2), 50);
    EXPECT_EQ(gt_pattern_count(GridShape(3, 6), 0), 1);
    for (const auto& s : {GridShape(2, 4), GridShape(3, 5), GridShape(2, 5), GridShape(3, 6)})
        for (int r = 0; r <= 3; ++r) EXPECT_EQ(static_cast<long long>(lattice_points(QPolytope(gt_polytope(s, r)), 1).size()), gt_pattern_count(s, r));
}

TEST(GT, MapIsUnimodular) {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> d(-5, 5);
    for (const auto& s : {GridShape(3, 5), GridShape(3, 6), GridShape(4, 7), GridShape(2, 6)}) {
        EXPECT_EQ(abs(determinant(gt_map_matrix(s))), 1);
        for (int t = 0; t < 10; ++t) {
            QVec v(s.dim());
            for (auto& x : v) x = Q(d(rng), 1 + std::abs(d(rng)));
            for (auto& x : v) x.canonicalize();
            EXPECT_EQ(gt_map_F_inv(s, gt_map_F(s, v)), v);
            EXPECT_EQ(gt_map_F(s, gt_map_F_inv(s, v)), v);
        }
    }
}

TEST(GT, RectanglesGammaMapsOntoGT) {
    Check c = check_gt({GridShape(3, 5), GridShape(2, 5), GridShape(3, 6)}, {1, 2, 3});
    EXPECT_TRUE(c.pass) << c.detail;
}

TEST(Volume, RectanglesGammaMatchesFormula) {
    for (const auto& s : {GridShape(2, 4), GridShape(3, 5), GridShape(2, 5), GridShape(3, 6)}) {
        QPolytope P(gamma_polytope(rectangles_superpotential(s)));
        EXPECT_EQ(volume(P), gamma_volume_formula(s));
    }
}

TEST(IDP, RectanglesAndG1) {
    auto rep = census(GridShape(3, 6));
    int rec = rep.rec_index;
    EXPECT_EQ(idp_r(*rep.classes[rec].gamma), std::optional<int>(1));
    int g1 = rep.find(g1_key());
    ASSERT_GE(g1, 0);
    auto r = idp_r(*rep.classes[g1].gamma);
    EXPECT_TRUE(!r || *r > 1);
}
