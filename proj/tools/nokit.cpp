// nokit: plabic censuses, superpotential polytopes and valuation checks from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nokit/io.hpp"
#include "nokit/nokit.hpp"

namespace {

using namespace nokit;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeArgs {
    int k = 0;
    int n = 0;
    bool deep = false;
    bool force = false;
    int threads = 1;

    GridShape shape() const {
        if (k < 1 || n <= k) throw usage_error("need 1 <= k < n");
        return GridShape(k, n);
    }
};

void add_shape(CLI::App* cmd, ShapeArgs& a) {
    cmd->add_option("--k", a.k, "columns of the partition grid (partitions fit in (n-k) x k)")->required();
    cmd->add_option("--n", a.n, "number of boundary vertices")->required();
    cmd->add_flag("--deep", a.deep, "allow shapes with up to 12 coordinates");
    cmd->add_flag("--force", a.force, "lift the size guard entirely");
    cmd->add_option("--threads", a.threads, "worker threads")->check(CLI::Range(1, 256));
}

// "rec" names the rectangles graph; anything else is a key like 0;1;1,1;2
PlabicGraph find_class(const ShapeArgs& a, const std::string& key) {
    GridShape s = a.shape();
    if (key == "rec") return build_rectangles(s);
    CensusOptions opt;
    opt.gamma = false;
    opt.deep = a.deep;
    opt.force = a.force;
    auto rep = enumerate_classes(s, opt);
    ClassKey k;
    try {
        k = parse_key(key);
    } catch (const std::exception& e) {
        throw usage_error("bad class key '" + key + "': " + e.what());
    }
    int i = rep.find(k);
    if (i < 0) throw usage_error("no class with key '" + key + "' (" + std::to_string(rep.classes.size()) + " classes)");
    return rep.classes[i].graph;
}

std::vector<Q> parse_rvec(const std::string& s, int n) {
    std::vector<Q> r;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            Q x(tok);
            x.canonicalize();
            r.push_back(x);
        } catch (const std::exception&) {
            throw usage_error("bad r-vector entry '" + tok + "'");
        }
    }
    if (static_cast<int>(r.size()) != n) throw usage_error("r-vector needs " + std::to_string(n) + " entries");
    return r;
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw usage_error("cannot write " + out);
    f << j.dump(2) << "\n";
}

int run_census(const ShapeArgs& a, const std::string& out, bool graphs, bool shuffle, std::uint64_t seed) {
    CensusOptions opt;
    opt.deep = a.deep;
    opt.force = a.force;
    opt.threads = a.threads;
    opt.shuffle = shuffle;
    opt.seed = seed;
    auto rep = census(a.shape(), opt);
    emit(census_json(rep, graphs), out);
    if (!out.empty())
        std::cout << "P(" << a.k << "," << a.n << "): " << rep.classes.size() << " classes, " << rep.integral << " integral, " << rep.nonintegral
                  << " non-integral (" << rep.seconds << " s)\n";
    return kOk;
}

int run_polytope(const ShapeArgs& a, const std::string& key, const std::string& r, const std::string& rvec, bool lattice, const std::string& out) {
    GridShape s = a.shape();
    PlabicGraph g = find_class(a, key);
    TropSystem T = gamma_system(marsh_scott_expansion(g));
    std::vector<Q> rv;
    if (!rvec.empty()) {
        rv = parse_rvec(rvec, s.n);
    } else {
        Q rr;
        try {
            rr = Q(r);
            rr.canonicalize();
        } catch (const std::exception&) {
            throw usage_error("bad r '" + r + "'");
        }
        rv = r_vector(s, rr);
    }
    QPolytope P(gamma_polytope(T, rv));
    json j = polytope_json(P, lattice ? std::optional<long long>(1) : std::nullopt);
    j["shape"] = shape_json(s);
    j["class"] = key_str(analyze(g).labels);
    j["r"] = qvec_json(rv);
    j["integral"] = P.is_integral();
    j["volume"] = q_str(volume(P));
    emit(j, out);
    return kOk;
}

int run_valuations(const ShapeArgs& a, const std::string& key, bool use_max, const std::string& out) {
    GridShape s = a.shape();
    NetworkChart c = make_chart(find_class(a, key));
    Matrix<Poly> A = boundary_matrix(c);
    json vals = json::object();
    for (const auto& lam : all_partitions(s)) {
        Poly p = flow_polynomial(c, A, partition_to_south_steps(lam, s));
        vals[lam.str()] = use_max ? val_max_of(p, "P_" + lam.str()) : val_min_of(p, "P_" + lam.str());
    }
    json j = {{"shape", shape_json(s)}, {"class", key_str(c.info.labels)}, {"mode", use_max ? "max" : "min"}, {"coords", labels_json(c.coords)}, {"valuations", vals}};
    emit(j, out);
    return kOk;
}

int run_verify(const ShapeArgs& a, const std::string& suite, std::uint64_t seed, const std::string& out) {
    GridShape s = a.shape();
    check_census_guard(s, a.deep, a.force);
    VerifyOptions vo;
    vo.threads = a.threads;
    vo.seed = seed;
    vo.deep = a.deep || a.force;
    Verifier V(vo);
    auto checks = shape_suite(V, s, suite == "full");
    bool ok = true;
    json arr = json::array();
    for (const auto& c : checks) {
        std::cout << (c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << c.detail << "\n";
        ok = ok && (c.pass || c.skipped);
        arr.push_back(check_json(c));
    }
    if (!out.empty()) emit({{"shape", shape_json(s)}, {"suite", suite}, {"seed", seed}, {"checks", arr}}, out);
    return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nokit: Newton-Okounkov bodies and superpotential polytopes for Grassmannians"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(nokit::kVersion));

    ShapeArgs sa;
    std::string out, key = "rec", r = "1", rvec, suite = "core";
    bool graphs = false, shuffle = false, use_max = false, lattice = false;
    std::uint64_t seed = VerifyOptions{}.seed;

    auto* census_cmd = app.add_subcommand("census", "enumerate move-equivalence classes and their polytopes");
    add_shape(census_cmd, sa);
    census_cmd->add_option("--out", out, "write the JSON report here");
    census_cmd->add_flag("--graphs", graphs, "include a representative graph per class");
    census_cmd->add_flag("--shuffle", shuffle, "randomize the BFS frontier");
    census_cmd->add_option("--seed", seed, "seed for --shuffle");

    auto* poly_cmd = app.add_subcommand("polytope", "superpotential polytope of one class");
    add_shape(poly_cmd, sa);
    poly_cmd->add_option("--class", key, "class key (labels joined by ';') or 'rec'");
    auto* r_opt = poly_cmd->add_option("--r", r, "scale r, integer or p/q");
    poly_cmd->add_option("--rvec", rvec, "r_1,...,r_n")->excludes(r_opt);
    poly_cmd->add_flag("--lattice", lattice, "list lattice points");
    poly_cmd->add_option("--out", out, "write JSON here");

    auto* val_cmd = app.add_subcommand("valuations", "valuations of all Plucker coordinates in one chart");
    add_shape(val_cmd, sa);
    val_cmd->add_option("--class", key, "class key or 'rec'");
    val_cmd->add_flag("--max", use_max, "use strongly maximal terms");
    val_cmd->add_option("--out", out, "write JSON here");

    auto* verify_cmd = app.add_subcommand("verify", "run the property suites for one shape");
    add_shape(verify_cmd, sa);
    verify_cmd->add_option("--suite", suite, "core or full")->check(CLI::IsMember({"core", "full"}));
    verify_cmd->add_option("--seed", seed, "seed for randomized checks");
    verify_cmd->add_option("--out", out, "write JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*census_cmd) return run_census(sa, out, graphs, shuffle, seed);
        if (*poly_cmd) return run_polytope(sa, key, r, rvec, lattice, out);
        if (*val_cmd) return run_valuations(sa, key, use_max, out);
        if (*verify_cmd) return run_verify(sa, suite, seed, out);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const census_guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}
