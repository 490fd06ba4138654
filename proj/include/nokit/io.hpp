#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "census.hpp"
#include "mirror.hpp"
#include "partitions.hpp"
#include "plabic.hpp"
#include "polyhedra.hpp"
#include "verify.hpp"

namespace nokit {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "0.1.0";

inline json shape_json(const GridShape& s) { return {{"k", s.k}, {"n", s.n}}; }

inline json labels_json(const std::vector<Partition>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.str());
    return a;
}

inline json qvec_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(q_str(x));
    return a;
}

inline QVec qvec_from_json(const json& a) {
    QVec v;
    for (const auto& x : a) v.emplace_back(x.get<std::string>());
    for (auto& x : v) x.canonicalize();
    return v;
}

// ---------------------------------------------------------------- graphs

inline json graph_json(const PlabicGraph& g) {
    PlabicInfo info = analyze(g);
    json vs = json::array();
    for (int v = 0; v < g.num_vertices(); ++v)
        vs.push_back({{"id", v}, {"color", color_name(g.color[v])}, {"boundary", g.is_boundary(v) ? json(v + 1) : json(nullptr)}});
    json faces = json::array();
    for (int f = 0; f < info.em.num_faces(); ++f) faces.push_back({{"face", f}, {"label", info.face_label[f].str()}});
    return {{"shape", shape_json(g.shape)}, {"vertices", vs}, {"edges", g.edges}, {"rotation", g.rot}, {"faces", faces}};
}

inline Color color_from_name(const std::string& s) {
    if (s == "boundary") return Color::boundary;
    if (s == "black") return Color::black;
    if (s == "white") return Color::white;
    throw std::invalid_argument("unknown color " + s);
}

inline PlabicGraph graph_from_json(const json& j) {
    PlabicGraph g;
    g.shape = GridShape(j.at("shape").at("k").get<int>(), j.at("shape").at("n").get<int>());
    for (const auto& v : j.at("vertices")) g.color.push_back(color_from_name(v.at("color").get<std::string>()));
    g.edges = j.at("edges").get<std::vector<std::array<int, 2>>>();
    g.rot = j.at("rotation").get<std::vector<std::vector<int>>>();
    g.validate();
    return g;
}

// ---------------------------------------------------------------- polytopes

inline json polytope_json(const QPolytope& P, std::optional<long long> lattice_r = std::nullopt) {
    json ineqs = json::array();
    for (const auto& h : P.h.ineqs) {
        QVec row = h.a;
        row.push_back(h.b);
        ineqs.push_back(qvec_json(row));
    }
    json verts = json::array();
    for (const auto& v : P.verts) verts.push_back(qvec_json(v));
    json j = {{"coords", labels_json(P.h.coords)}, {"ineqs", ineqs}, {"vertices", verts}};
    if (lattice_r) j["lattice"] = lattice_points(P, *lattice_r);
    return j;
}

inline HPolytope hpolytope_from_json(const json& j) {
    HPolytope H;
    for (const auto& c : j.at("coords")) H.coords.push_back(Partition::parse(c.get<std::string>()));
    for (const auto& row : j.at("ineqs")) {
        QVec v = qvec_from_json(row);
        Ineq h;
        h.b = v.back();
        v.pop_back();
        h.a = std::move(v);
        H.ineqs.push_back(std::move(h));
    }
    return H;
}

inline json trop_system_json(const TropSystem& T) {
    json terms = json::array();
    for (const auto& t : T.terms) {
        QVec row = t.form.a;
        row.push_back(t.form.c);
        terms.push_back({{"forms", json::array({qvec_json(row)})}, {"shift_index", t.slot}});
    }
    return {{"coords", labels_json(T.coords)}, {"terms", terms}};
}

// ---------------------------------------------------------------- census

inline json class_json(const ClassRecord& c, bool with_graph) {
    json j = {{"key", key_str(c.key)}, {"path", labels_json(c.path)}};
    if (c.gamma) {
        j["integral"] = c.integral;
        j["vertex_count"] = c.gamma->verts.size();
        json ni = json::array();
        for (const auto& v : c.nonintegral) ni.push_back(qvec_json(v));
        j["nonintegral_vertices"] = ni;
    }
    if (with_graph) j["graph"] = graph_json(c.graph);
    return j;
}

inline json census_json(const CensusReport& r, bool with_graphs = false) {
    json classes = json::array();
    for (const auto& c : r.classes) classes.push_back(class_json(c, with_graphs));
    json moves = json::array();
    for (const auto& m : r.moves) moves.push_back({{"from", m.from}, {"to", m.to}, {"at", m.old_label.str()}, {"new", m.new_label.str()}});
    return {
        {"schema_version", kSchemaVersion},
        {"tool", {{"name", "nokit"}, {"version", kVersion}}},
        {"shape", shape_json(r.shape)},
        {"class_count", r.classes.size()},
        {"integral", r.integral},
        {"nonintegral", r.nonintegral},
        {"rectangles_class", r.rec_index},
        {"run", {{"seed", r.seed}, {"threads", r.threads}, {"seconds", r.seconds}}},
        {"classes", classes},
        {"moves", moves},
    };
}

inline json check_json(const Check& c) {
    return {{"id", c.id}, {"name", c.name}, {"status", c.skipped ? "skip" : c.pass ? "pass" : "fail"}, {"detail", c.detail}, {"seconds", c.seconds}};
}

}  // namespace nokit
