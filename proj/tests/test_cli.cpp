#include "dstrat/adjacency.hpp"
#include "dstrat/cli.hpp"
#include "dstrat/ddecomp.hpp"
#include "dstrat/theory_config.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = dstrat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / ("dstrat_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

const std::vector<std::vector<std::string>> kCommands = {
    {"classify", "--theory", "hurwitz", "--poly", "1,0,1"},
    {"classify", "--theory", "schur", "--poly", "1,2,3", "--ambient", "4", "--roots"},
    {"theory-info", "--theory", "aperiodicity"},
    {"strata", "components", "--theory", "poles:1+i,-1", "--index", "2,0,1"},
    {"strata", "betti", "--theory", "schur", "--index", "0,2,0"},
    {"strata", "homotopy", "--theory", "fenichel", "--index", "2,1,0"},
    {"strata", "pi1", "--theory", "annulus:0.5,2", "--index", "0,3,0"},
    {"strata", "local", "--theory", "hurwitz", "--index", "1,0,0", "--ambient", "3"},
    {"strata", "circle", "--index", "1,2,1"},
    {"adjacency", "--theory", "hurwitz", "--n", "2"},
    {"adjacency", "--theory", "poles:1+i,-1", "--dot"},
    {"local-adjacency", "--theory", "schur", "--n", "2"},
    {"adjacent", "--theory", "aperiodicity", "--from", "0,0,2", "--to", "1,1,0"},
    {"ddecomp", "--theory", "hurwitz", "--base", "0,0,1", "--gen", "0,1", "--gen", "1", "--res", "32"},
    {"curve", "--poly", "x^2+y^2-1", "--orbit", "--radial", "0.5"},
    {"duality", "--theory", "hurwitz", "--values", "1,-2,1+i"},
    {"poset", "--r", "2", "--n", "3", "--q", "2", "--elements"},
    {"validate", "--theory", "schur", "--res", "64"},
};

}  // namespace

TEST_CASE("documented examples") {
    auto r = run({"classify", "--theory", "hurwitz", "--poly", "1,0,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "(0,2,0)\n");

    // Sym^2 of a circle is a Moebius band: b1 = 1.
    r = run({"strata", "betti", "--theory", "schur", "--index", "0,2,0", "--u", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    r = run({"adjacent", "--theory", "hurwitz", "--from", "1,0,1", "--to", "0,2,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "yes\ns -> ss x1\nun -> ss x1\n");
    const auto g = dstrat::base_adjacency(dstrat::builtin_theory("hurwitz"));
    CHECK(dstrat::brute_force_adjacent(g, {1, 0, 1}, {0, 2, 0}));

    r = run({"adjacent", "--theory", "hurwitz", "--from", "0,2,0", "--to", "1,0,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "no\n");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"classify", "--theory", "hurwitz", "--poly", "1", "--bogus"}).code == 2);
    CHECK(run({"classify", "--poly", "1,1"}).code == 2);
    CHECK(run({"strata", "volume", "--theory", "hurwitz", "--index", "1,0,0"}).code == 2);
    CHECK(run({"strata", "betti", "--index", "1,0,0"}).code == 2);

    auto r = run({"classify", "--theory", "hurwitz", "--poly", "0,0"});
    CHECK(r.code == 1);
    CHECK(r.err.find("zero polynomial") != std::string::npos);
    CHECK(run({"classify", "--theory", "no_such_theory", "--poly", "1,1"}).code == 1);
    CHECK(run({"classify", "--theory", "hurwitz", "--poly", "1,1", "--ambient", "0"}).code == 1);
    CHECK(run({"adjacent", "--theory", "hurwitz", "--from", "1,0", "--to", "1,0,0"}).code == 1);
    CHECK(run({"poset", "--r", "1", "--n", "1", "--q", "2"}).code == 1);

    r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("classify") != std::string::npos);
}

TEST_CASE("output is deterministic and JSON round-trips") {
    for (const auto& args : kCommands) {
        CAPTURE(args.front());
        const Result a = run(args), b = run(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());

        auto with_json = args;
        with_json.push_back("--json");
        const Result j = run(with_json);
        REQUIRE(j.code == 0);
        const auto parsed = nlohmann::json::parse(j.out);
        CHECK(parsed.dump(2) + "\n" == j.out);
        CHECK(run(with_json).out == j.out);
    }
}

TEST_CASE("monic flag and theory files") {
    auto r = run({"classify", "--theory", "hurwitz", "--monic", "--poly", "1,1", "--ambient", "2"});
    CHECK(r.code == 1);
    r = run({"classify", "--theory", "hurwitz", "--poly", "1,1", "--ambient", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "(1,1,0)\n");

    TempDir dir;
    // A file named like a built-in shadows it, with a warning.
    auto t = dstrat::builtin_theory("schur");
    t.name = "schur_from_file";
    const auto path = dir.path / "hurwitz";
    std::ofstream(path) << dstrat::theory_to_json(t).dump();
    const auto cwd = std::filesystem::current_path();
    std::filesystem::current_path(dir.path);
    r = run({"classify", "--theory", "hurwitz", "--poly", "0.25,1"});
    std::filesystem::current_path(cwd);
    CHECK(r.code == 0);
    CHECK(r.out == "(1,0,0)\n");  // root -1/4 is inside the unit disk, not in the left half-plane
    CHECK(r.err.find("warning:") != std::string::npos);

    r = run({"theory-info", "--theory", path.string(), "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["name"] == "schur_from_file");
}

TEST_CASE("ddecomp exports match the library") {
    TempDir dir;
    for (const char* ext : {"pgm", "csv", "json"}) {
        const auto out = dir.path / (std::string("routh.") + ext);
        const auto r = run({"ddecomp", "--theory", "hurwitz", "--base", "0,0,1", "--gen", "0,1", "--gen", "1", "--window",
                            "-2,2,-2,2", "--res", "40", "--threads", "2", "--out", out.string()});
        REQUIRE(r.code == 0);
        const auto m = dstrat::scan(dstrat::builtin_theory("hurwitz"),
                                    dstrat::make_affine_family({0, 0, 1}, {{0, 1}, {1}}), {-2, 2, -2, 2}, 40);
        CHECK(slurp(out) == dstrat::export_map(m, ext));
    }

    // Diagonal pencil from matrix files: eigenvalues -1 + h1 and 1 - h1.
    std::ofstream(dir.path / "a0.csv") << "-1,0\n0,1\n";
    std::ofstream(dir.path / "a1.csv") << "1,0\n0,-1\n";
    const auto r = run({"ddecomp", "--theory", "hurwitz", "--matrix", (dir.path / "a0.csv").string(), "--matrix",
                        (dir.path / "a1.csv").string(), "--window", "-3,3", "--res", "6", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["ny"] == 1);
    // Away from h = 1 there is one stable and one unstable root, and no cell
    // centre lands on h = 1.
    CHECK(j["regions"].size() == 1u);
    CHECK(j["regions"][0]["index"] == nlohmann::json::array({1, 0, 1}));

    CHECK(run({"ddecomp", "--theory", "hurwitz", "--gen", "1", "--res", "4", "--out",
               (dir.path / "x.png").string()}).code == 1);
    CHECK(run({"ddecomp", "--theory", "hurwitz", "--base", "1", "--res", "4"}).code == 1);
}
