#include <gtest/gtest.h>

#include "nokit/io.hpp"

using namespace nokit;

TEST(Json, GraphRoundTrip) {
    for (const auto& s : {GridShape(3, 5), GridShape(3, 6), GridShape(1, 2)}) {
        PlabicGraph g = build_rectangles(s);
        json j = graph_json(g);
        PlabicGraph h = graph_from_json(json::parse(j.dump()));
        EXPECT_EQ(h.color, g.color);
        EXPECT_EQ(h.edges, g.edges);
        EXPECT_EQ(h.rot, g.rot);
        EXPECT_EQ(analyze(h).labels, analyze(g).labels);
        EXPECT_EQ(j["faces"].size(), static_cast<std::size_t>(analyze(g).em.num_faces()));
    }
}

TEST(Json, BadGraphRejected) {
    json j = graph_json(build_rectangles(GridShape(2, 4)));
    j["vertices"][0]["color"] = "green";
    EXPECT_THROW(graph_from_json(j), std::invalid_argument);
}

TEST(Json, PolytopeRoundTrip) {
    QPolytope P(gamma_polytope(rectangles_superpotential(GridShape(3, 5))));
    json j = polytope_json(P, 1);
    EXPECT_EQ(j["lattice"].size(), 10u);
    QPolytope Q2(hpolytope_from_json(json::parse(j.dump())));
    EXPECT_TRUE(same_polytope(P, Q2));
    EXPECT_EQ(Q2.h.coords, P.h.coords);
}

TEST(Json, RationalsAsStrings) {
    QVec v = {Q(3, 2), Q(-1), Q(0)};
    json j = qvec_json(v);
    EXPECT_EQ(j.dump(), "[\"3/2\",\"-1\",\"0\"]");
    EXPECT_EQ(qvec_from_json(j), v);
}

TEST(Json, CensusReport) {
    auto r = census(GridShape(3, 5));
    json j = census_json(r);
    EXPECT_EQ(j["schema_version"], kSchemaVersion);
    EXPECT_EQ(j["class_count"], 5);
    EXPECT_EQ(j["integral"], 5);
    EXPECT_EQ(j["classes"].size(), 5u);
    EXPECT_EQ(j["moves"].size(), r.moves.size());
    EXPECT_FALSE(j["classes"][0].contains("graph"));
    EXPECT_TRUE(census_json(r, true)["classes"][0].contains("graph"));
}
