#include <gtest/gtest.h>

#include "nokit/charts.hpp"
#include "nokit/verify.hpp"

using namespace nokit;

namespace {

NetworkChart rec35() { return make_chart(build_rectangles(GridShape(3, 5))); }

Poly x(const NetworkChart& c, const Partition& p) { return Poly::variable(c.dim(), c.coord_index(p)); }

Poly one(const NetworkChart& c) { return Poly::constant(c.dim(), 1); }

std::vector<Fp> random_point(std::size_t d, FpRng& rng) {
    std::vector<Fp> v(d);
    for (auto& a : v) a = rng.nonzero();
    return v;
}

}  // namespace

TEST(Chart, BoundaryMatrixEntries) {
    NetworkChart c = rec35();
    Matrix<Poly> A = boundary_matrix(c);
    EXPECT_EQ(A[0][0], one(c));
    EXPECT_EQ(A[0][1], Poly(c.dim()));
    EXPECT_EQ(A[1][2], x(c, Partition{3, 3}));
    EXPECT_EQ(A[0][3], Poly(c.dim()) - x(c, Partition{3}) * x(c, Partition{3, 3}) * x(c, Partition{2, 2}) * (one(c) + x(c, Partition{2})));
}

TEST(Chart, SomeFlowPolynomials) {
    NetworkChart c = rec35();
    EXPECT_EQ(flow_polynomial(c, Subset{1, 2}), one(c));
    EXPECT_EQ(flow_polynomial(c, Subset{1, 3}), x(c, Partition{3, 3}));
    EXPECT_EQ(flow_polynomial(c, Subset{3, 4}), x(c, Partition{2}) * x(c, Partition{3}) * x(c, Partition{2, 2}) * x(c, Partition{3, 3}).pow(2));
    Poly m = x(c, Partition{3}) * x(c, Partition{2, 2}) * x(c, Partition{3, 3});
    EXPECT_EQ(flow_polynomial(c, Subset{2, 4}), m + m * x(c, Partition{2}));
    EXPECT_EQ(flow_polynomial(c, Subset{2, 5}).num_terms(), 3u);
}

TEST(Chart, GoldenValuationTable) {
    Check r = check_golden_table();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Chart, MinMaxDifferByOneCoordinate) {
    NetworkChart c = rec35();
    Partition lam = south_steps_to_partition({2, 4}, c.shape());
    auto lo = val_min(c, lam);
    auto hi = val_max(c, lam);
    ValuationVector d(c.dim(), 0);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = hi[i] - lo[i];
    ValuationVector e(c.dim(), 0);
    e[c.coord_index(Partition{2})] = 1;
    EXPECT_EQ(d, e);
}

TEST(Chart, ThreeTermPluckerRelation) {
    NetworkChart c = rec35();
    auto P = [&](const Subset& J) { return flow_polynomial(c, J); };
    EXPECT_EQ(P({1, 3}) * P({2, 4}), P({1, 2}) * P({3, 4}) + P({1, 4}) * P({2, 3}));
    EXPECT_EQ(P({1, 4}) * P({3, 5}), P({1, 3}) * P({4, 5}) + P({1, 5}) * P({3, 4}));
    FpRng rng(8);
    for (int t = 0; t < 20; ++t) {
        auto pt = random_point(c.dim(), rng);
        auto A = boundary_matrix_at(c, pt);
        auto m = [&](const Subset& J) { return minor(A, zero_based(J)); };
        EXPECT_EQ(m({2, 4}) * m({3, 5}), m({2, 3}) * m({4, 5}) + m({2, 5}) * m({3, 4}));
        EXPECT_EQ(eval_mod_p(P({2, 4}), pt), m({2, 4}));
    }
}

TEST(Chart, LaplaceAgreesWithMatchings) {
    for (const auto& s : {GridShape(3, 5), GridShape(2, 5), GridShape(3, 6), GridShape(4, 7)}) {
        PlabicGraph g = build_rectangles(s);
        PlabicInfo info = analyze(g);
        std::vector<PlabicGraph> graphs = {g};
        for (const auto& lab : square_faces(g, info)) graphs.push_back(square_move(g, info, lab));
        for (const auto& h : graphs) {
            NetworkChart c = make_chart(h);
            Matrix<Poly> A = boundary_matrix(c);
            for (const auto& lam : all_partitions(s)) {
                Subset J = partition_to_south_steps(lam, s);
                EXPECT_EQ(laplace_minor(A, zero_based(J), Poly(c.dim())), flow_polynomial_by_matchings(c, J));
            }
        }
    }
}

TEST(Chart, FlipUpMultipliesByFaceVariable) {
    for (const auto& s : {GridShape(3, 5), GridShape(3, 6), GridShape(2, 5)}) {
        NetworkChart c = make_chart(build_rectangles(s));
        for (const auto& lam : all_partitions(s)) {
            Subset J = partition_to_south_steps(lam, s);
            auto L = matchings_with_boundary(c.graph, c.info, J);
            for (const auto& cv : L.covers) {
                Exponent a = flow_weight(c, L.elements[cv.lower]), b = flow_weight(c, L.elements[cv.upper]);
                Exponent d(c.dim(), 0);
                for (std::size_t i = 0; i < d.size(); ++i) d[i] = b[i] - a[i];
                Exponent e(c.dim(), 0);
                e[c.coord_index(cv.face)] = 1;
                EXPECT_EQ(d, e);
            }
            EXPECT_EQ(flow_weight(c, L.elements[L.min]), val_min(c, lam));
            EXPECT_EQ(flow_weight(c, L.elements[L.max]), val_max(c, lam));
        }
    }
}

TEST(Chart, MaxDiagFormulasOnRectangles) {
    for (const auto& s : {GridShape(3, 5), GridShape(3, 6), GridShape(2, 6), GridShape(4, 7)}) {
        NetworkChart c = make_chart(build_rectangles(s));
        for (const auto& lam : all_partitions(s)) {
            EXPECT_EQ(val_min(c, lam), maxdiag_valuation(lam, c.coords));
            EXPECT_EQ(val_max(c, lam), highest_valuation(lam, c.coords, s));
        }
    }
}

TEST(Puiseux, LowestExponentIsMaxDiag) {
    for (const auto& s : {GridShape(3, 5), GridShape(2, 5), GridShape(3, 6), GridShape(2, 6)})
        for (const auto& lam : all_partitions(s)) {
            auto w = puiseux_witness(lam, s);
            for (const auto& mu : all_partitions(s)) EXPECT_EQ(w.lowest.at(mu), max_diag(mu, lam)) << lam.str() << " " << mu.str();
        }
}

TEST(Puiseux, LargerExample) {
    GridShape s(5, 12);
    Partition lam{4, 3, 3, 3, 2, 1}, mu{5, 5, 5, 2, 2, 2, 2};
    EXPECT_EQ(max_diag(mu, lam), 2);
    auto w = puiseux_witness(lam, s);
    EXPECT_EQ(w.lowest.at(mu), 2);
    EXPECT_EQ(w.lowest.at(lam), 0);
}

TEST(Twist, DiagramClosesOnThreeFive) {
    Check r = check_twist(77, 20);
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Twist, RejectsPointsOutsideTheOpenCell) {
    Matrix<mpq_class> A = {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}};
    EXPECT_THROW(left_twist(A), not_in_open_cell);
}

TEST(XMutation, AgreesWithTheMovedChart) {
    GridShape s(3, 6);
    PlabicGraph g = build_rectangles(s);
    NetworkChart c = make_chart(g);
    FpRng rng(21);
    for (const auto& nu : square_faces(g, c.info)) {
        PlabicGraph h = square_move(g, c.info, nu);
        NetworkChart d = make_chart(h);
        Partition fresh;
        for (const auto& p : d.coords)
            if (c.coord_index(p) < 0) fresh = p;
        for (int t = 0; t < 5; ++t) {
            auto pt = random_point(c.dim(), rng);
            auto moved = x_mutate(c.info.quiver, c.coords, pt, nu);
            std::vector<Fp> y(d.dim());
            for (std::size_t i = 0; i < c.dim(); ++i) {
                Partition p = c.coords[i] == nu ? fresh : c.coords[i];
                y[d.coord_index(p)] = moved[i];
            }
            EXPECT_TRUE(projectively_equal(plucker_vector(boundary_matrix_at(c, pt), s), plucker_vector(boundary_matrix_at(d, y), s)))
                << "mutation at " << nu.str();
        }
    }
}
