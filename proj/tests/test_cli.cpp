#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "treeirr/cli.hpp"
#include "treeirr/formats.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = treeirr::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("indices on an edge-list path from stdin") {
    auto r = run_cli({"indices", "--format", "edgelist"}, "0 1\n1 2\n2 3\n");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["irr"] == 2);
    CHECK(j["sigma"] == 2);
    CHECK(j["irr_t"] == 4);
    CHECK(j["sigma_t"] == 4);
    CHECK(j["m1"] == 10);
    CHECK(j["m2"] == 8);
    CHECK(j["forgotten"] == 18);
    CHECK(j["n"] == 4);
    CHECK(j["m"] == 3);
}

TEST_CASE("indices output matches across equivalent formats") {
    auto from_edges = run_cli({"indices", "--format", "edgelist"}, "0 1\n1 2\n2 3\n");
    auto from_g6 = run_cli({"indices", "--format", "graph6"}, "Ch\n");
    CHECK(from_edges.code == 0);
    CHECK(from_g6.code == 0);
    CHECK(from_edges.out == from_g6.out);
}

TEST_CASE("indices handles multiple graph6 lines") {
    auto r = run_cli({"indices"}, "Ch\nCh\n");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
}

TEST_CASE("gen star/path/cat/fib") {
    CHECK(run_cli({"gen", "star", "--n", "5"}).out == "Ds_\n");
    CHECK(run_cli({"gen", "path", "--n", "4", "--out", "-"}).out == "Ch\n");
    auto cat = run_cli({"gen", "cat", "--spine", "2,3,2", "--out", "edgelist"});
    CHECK(cat.code == 0);
    CHECK(cat.out.find("0 1") != std::string::npos);

    auto fib = run_cli({"gen", "fib", "--n", "10", "--fib-convention", "paper", "--out", "-"});
    REQUIRE(fib.code == 0);
    auto idx = run_cli({"indices"}, fib.out);
    REQUIRE(idx.code == 0);
    json j = json::parse(idx.out);
    CHECK(j["n"] == 222);
    CHECK(j["irr"] == 12318);
    CHECK(j["max_degree"] == 89);

    CHECK(run_cli({"gen", "fib", "--n", "10"}).code == 2);  // missing convention
    CHECK(run_cli({"gen", "nope", "--n", "4"}).code == 1);
}

TEST_CASE("gen fib spine degrees are the paper-convention fibonacci numbers") {
    auto fib = run_cli({"gen", "fib", "--n", "10", "--fib-convention", "paper"});
    treeirr::Graph g = treeirr::parse_graph6(fib.out.substr(0, fib.out.size() - 1));
    std::vector<int> spine;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= 2) spine.push_back(g.degree(v));
    std::sort(spine.begin(), spine.end());
    CHECK(spine == std::vector<int>{3, 5, 8, 13, 21, 34, 55, 89});
}

TEST_CASE("enumerate writes one graph6 line per tree") {
    auto r = run_cli({"enumerate", "--n", "7", "--out", "-"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
    auto capped = run_cli({"enumerate", "--n", "7", "--max-degree", "2", "--out", "-"});
    CHECK(std::count(capped.out.begin(), capped.out.end(), '\n') == 1);
}

TEST_CASE("extremal prints the documented JSON object") {
    auto r = run_cli({"extremal", "--n", "6", "--index", "irr", "--objective", "max"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["value"] == 20);
    CHECK(j["exhaustive"] == true);
    CHECK(j.contains("witness_graph6"));
    auto idx = run_cli({"indices"}, j["witness_graph6"].get<std::string>() + "\n");
    json w = json::parse(idx.out);
    CHECK(w["max_degree"] == 5);  // the star
}

TEST_CASE("degseq check, realize, majorize") {
    auto chk = run_cli({"degseq", "check", "3,1,1,1"});
    json cj = json::parse(chk.out);
    CHECK(cj["graphical"] == true);
    CHECK(cj["tree_realizable"] == true);

    auto bad = run_cli({"degseq", "check", "3,3,1,1"});
    CHECK(json::parse(bad.out)["graphical"] == false);

    auto real = run_cli({"degseq", "realize", "3,2,1,1,1", "--as", "tree"});
    REQUIRE(real.code == 0);
    auto idx = run_cli({"indices"}, real.out);
    CHECK(json::parse(idx.out)["n"] == 5);

    CHECK(run_cli({"degseq", "realize", "1,1,1"}).code == 2);  // odd degree sum

    auto maj = run_cli({"degseq", "majorize", "3,1,1,1", "2,2,1,1"});
    json mj = json::parse(maj.out);
    CHECK(mj["a_majorizes_b"] == true);
    CHECK(mj["b_majorizes_a"] == false);
}

TEST_CASE("check-claims single claim to stdout report") {
    auto r = run_cli({"check-claims", "--n-min", "4", "--n-max", "9", "--claims", "C31",
                      "--report", "-"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["claims"].size() == 1);
    CHECK(j["claims"][0]["id"] == "C31");
    CHECK(j["claims"][0]["fails"] == 0);

    auto forced = run_cli({"check-claims", "--n-min", "4", "--n-max", "5", "--json"});
    CHECK(json::parse(forced.out).contains("claims"));
}

TEST_CASE("check-claims exit discipline") {
    // C9 fails, so --fail-on-counterexample exits 3
    auto r = run_cli({"check-claims", "--n-min", "4", "--n-max", "6", "--claims", "C9",
                      "--fail-on-counterexample"});
    CHECK(r.code == 3);
    auto ok = run_cli({"check-claims", "--n-min", "4", "--n-max", "6", "--claims", "C31",
                       "--fail-on-counterexample"});
    CHECK(ok.code == 0);
    CHECK(run_cli({"check-claims", "--n-max", "99"}).code == 1);
    CHECK(run_cli({"check-claims", "--claims", "C99"}).code == 1);
    CHECK(run_cli({"bogus-subcommand"}).code == 1);
}

TEST_CASE("identical argv and seed give byte-identical report bodies") {
    std::vector<std::string> argv{"check-claims", "--n-min", "4", "--n-max", "6",
                                  "--seed", "7", "--report", "-", "--workers", "2"};
    auto a = run_cli(argv);
    auto b = run_cli(argv);
    REQUIRE(a.code == 0);
    json ja = json::parse(a.out), jb = json::parse(b.out);
    CHECK(ja["claims"].dump() == jb["claims"].dump());
    CHECK(ja["seed"] == 7);
}

TEST_CASE("file outputs for enumerate and check-claims --csv") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "treeirr_cli_test";
    fs::create_directories(dir);
    fs::path g6_path = dir / "trees.g6";
    auto r = run_cli({"enumerate", "--n", "6", "--out", g6_path.string()});
    REQUIRE(r.code == 0);
    std::ifstream f(g6_path);
    std::string line;
    int lines = 0;
    while (std::getline(f, line)) ++lines;
    CHECK(lines == 6);

    fs::path csv_path = dir / "claims.csv";
    auto c = run_cli({"check-claims", "--n-min", "4", "--n-max", "5", "--claims", "C31",
                      "--csv", csv_path.string()});
    REQUIRE(c.code == 0);
    std::ifstream cf(csv_path);
    std::string header;
    std::getline(cf, header);
    CHECK(header == "id,domain_size,holds,fails,vacuous");
    fs::remove_all(dir);

    CHECK(run_cli({"enumerate", "--n", "6", "--out", "/nonexistent_dir/x.g6"}).code == 2);
}

TEST_CASE("malformed input exits 2") {
    CHECK(run_cli({"indices"}, "not graph6 at all\n").code == 2);
    CHECK(run_cli({"indices", "--format", "edgelist"}, "0 zebra\n").code == 2);
    CHECK(run_cli({"indices", "nonexistent_file.g6"}).code == 2);
}
