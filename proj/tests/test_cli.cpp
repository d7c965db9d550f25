// Drives the built command-line binary end to end: exit codes, sidecar
// round-trips, and deterministic re-runs. Each invocation is a real
// subprocess so the external contract is what gets exercised.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = NETCURV_CLI_PATH;
const std::string kData = NETCURV_DATA_DIR;

fs::path fresh_dir() {
    static int counter = 0;
    const fs::path dir =
        fs::temp_directory_path() /
        ("netcurv_cli_" +
         std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()) + "_" +
         std::to_string(counter++));
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args, const fs::path& log) {
    const std::string cmd = kCli + " " + args + " > " + log.string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    return rc < 0 ? rc : (rc & 0xff00) >> 8;  // POSIX wait status -> exit code
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("generate writes a loadable edge list and a sidecar that reproduces it") {
    const fs::path dir = fresh_dir();
    REQUIRE(run("generate family=ws n=60 k=4 beta=0.3 seed=5 --out " + (dir / "a").string(),
                dir / "a.log") == 0);
    const auto sidecar = nlohmann::json::parse(slurp(dir / "a" / "graph.json"));
    CHECK(sidecar.at("seed").get<uint64_t>() == 5);
    CHECK(sidecar.at("edges").get<int>() == 120);  // ws keeps n*k/2 edges
    const std::string spec_text = sidecar.at("spec").at("text").get<std::string>();

    REQUIRE(run("generate " + spec_text + " --out " + (dir / "b").string(), dir / "b.log") == 0);
    CHECK(slurp(dir / "a" / "graph.txt") == slurp(dir / "b" / "graph.txt"));
    fs::remove_all(dir);
}

TEST_CASE("compute emits edge and vertex tables for a real network") {
    const fs::path dir = fresh_dir();
    REQUIRE(run("compute --input " + kData + "/zachary.txt --metrics or,fr,degree --out " +
                    dir.string(),
                dir / "run.log") == 0);
    const std::string edges = slurp(dir / "edges.csv");
    const std::string vertices = slurp(dir / "vertices.csv");
    CHECK(edges.rfind("u,v,or,fr", 0) == 0);
    CHECK(vertices.rfind("vertex,or,fr,degree", 0) == 0);
    // 78 edges + header, 34 vertices + header
    CHECK(std::count(edges.begin(), edges.end(), '\n') == 79);
    CHECK(std::count(vertices.begin(), vertices.end(), '\n') == 35);
    const std::string log = slurp(dir / "run.log");
    CHECK(log.find(" s") != std::string::npos);  // per-metric wall clock lines
    fs::remove_all(dir);
}

TEST_CASE("correlate is deterministic for a fixed seed") {
    const fs::path dir = fresh_dir();
    const std::string args = "correlate --family er --n 200 --p 0.03 --samples 4 --seed 9 "
                             "--scope edge --metrics or,fr,afr --out ";
    REQUIRE(run(args + (dir / "x").string(), dir / "x.log") == 0);
    REQUIRE(run(args + (dir / "y").string() + " --threads 3", dir / "y.log") == 0);
    const std::string csv = slurp(dir / "x" / "correlations_edge.csv");
    CHECK(csv == slurp(dir / "y" / "correlations_edge.csv"));
    CHECK(csv.find("family=er n=200 p=0.03 seed=9,edge,or,fr,") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("robustness writes one curve per strategy starting at the intact efficiency") {
    const fs::path dir = fresh_dir();
    REQUIRE(run("robustness --input " + kData + "/zachary.txt --steps 5 --strategies "
                "random,fr_increasing --out " + dir.string(),
                dir / "run.log") == 0);
    const std::string csv = slurp(dir / "robustness.csv");
    CHECK(csv.rfind("strategy,fraction,efficiency", 0) == 0);
    CHECK(csv.find("random,0,") != std::string::npos);
    CHECK(csv.find("fr_increasing,0,") != std::string::npos);
    CHECK(csv.find(",1,0\n") != std::string::npos);  // everything removed -> no efficiency left
    fs::remove_all(dir);
}

TEST_CASE("correlate accepts a file input without an explicit sample count") {
    const fs::path dir = fresh_dir();
    CHECK(run("correlate --input " + kData + "/zachary.txt --scope edge --metrics fr,afr --out " +
                  dir.string(),
              dir / "ok.log") == 0);
    CHECK(run("correlate --input " + kData + "/zachary.txt --samples 5 --out " + dir.string(),
              dir / "bad.log") == 1);  // an ensemble needs a generator
    fs::remove_all(dir);
}

TEST_CASE("usage problems exit 1, data problems exit 2") {
    const fs::path dir = fresh_dir();
    CHECK(run("compute --family er --n 100", dir / "1.log") == 1);       // missing p
    CHECK(run("compute --input " + kData + "/zachary.txt --idleness 0.25 --out " + dir.string(),
              dir / "2.log") == 1);
    CHECK(run("compute --metrics or --out " + dir.string(), dir / "3.log") == 1);  // no network
    CHECK(run("reproduce-table V", dir / "4.log") == 1);
    CHECK(run("compute --input " + (dir / "missing.txt").string() + " --out " + dir.string(),
              dir / "5.log") == 2);
    CHECK(run("--help", dir / "6.log") == 0);
    fs::remove_all(dir);
}

TEST_CASE("reproduce-table computes the bundled row and skips absent datasets with a notice") {
    const fs::path dir = fresh_dir();
    REQUIRE(run("reproduce-table II --samples 1 --seed 4 --data-dir " + kData + " --out " +
                    dir.string(),
                dir / "run.log") == 0);
    const std::string csv = slurp(dir / "table_II.csv");
    CHECK(csv.rfind("network,metric_a,metric_b,published,computed,abs_diff", 0) == 0);
    CHECK(csv.find("Zachary karate club,or,fr,0.24,") != std::string::npos);
    CHECK(csv.find("Jazz musicians") == std::string::npos);  // dataset not bundled
    const std::string log = slurp(dir / "run.log");
    CHECK(log.find("row skipped") != std::string::npos);
    CHECK(log.find("published") != std::string::npos);
    fs::remove_all(dir);
}
