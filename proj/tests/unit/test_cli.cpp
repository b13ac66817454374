#include "doctest.h"

#include "oscillab/cli/manifest.hpp"
#include "oscillab/cli/plot.hpp"
#include "oscillab/cli/run.hpp"
#include "oscillab/core/error.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace oscillab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("oscillab-test-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void put(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

const char* kSkew = R"({"group":{"d":2},"torus_block":[["1","0"],["1","1"]],"translation":{"torus":["1/5","0"]}})";

}  // namespace

TEST_CASE("map-analyze exit codes and certificates") {
    TempDir t;
    put(t / "skew.json", kSkew);
    const auto ok = run({"map-analyze", "--map", t / "skew.json", "--out", t / "a", "--quiet"});
    CHECK(ok.code == 0);
    const Json rep = Json::parse(slurp(t / "a/map_analysis.json"));
    CHECK(rep["doubled"]["certificate"]["nu"] == 1);
    CHECK(rep["doubled"]["certificate"]["kappa"] == 2);
    CHECK(rep["certificate"]["kappa"] == 1);
    CHECK(fs::exists(t / "a/manifest.json"));

    put(t / "cat.json", R"({"group":{"d":2},"torus_block":[["2","1"],["1","1"]]})");
    const auto bad = run({"map-analyze", "--map", t / "cat.json", "--out", t / "b"});
    CHECK(bad.code == 1);
    REQUIRE(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
    const Json diag = Json::parse(bad.err);
    CHECK(diag["error"] == "PositiveEntropy");
    CHECK(diag["detail"] == Json::array({"1", "-3", "1"}));
    CHECK(std::string(diag["message"]).find("x^2 - 3x + 1") != std::string::npos);
    CHECK(Json::parse(slurp(t / "b/map_analysis.json")).contains("positive_entropy"));
}

TEST_CASE("usage and config errors exit with 2") {
    TempDir t;
    const auto missing = run({"sum", "--grid", "1000,2,8", "--out", t.path.string()});
    CHECK(missing.code == 2);
    CHECK(Json::parse(missing.err)["error"] == "UsageError");
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"sum", "--seq", "mobius:N=100", "--phase", "0", "--out", t.path.string()}).code == 2);  // no N or grid
    CHECK(run({"sum", "--seq", "mobius:N=100", "--phase", "0", "--N", "10", "--backend", "fast"}).code == 2);
    CHECK(run({"map-analyze", "--map", t / "nope.json", "--out", t.path.string()}).code == 2);
    put(t / "cfg.json", R"({"subcommand":"gowers","seq":"rademacher:N=16,seed=1","kk":2})");
    const auto cfg = run({"--config", t / "cfg.json", "--out", t.path.string()});
    CHECK(cfg.code == 2);
    CHECK(Json::parse(cfg.err)["error"] == "ConfigError");
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("domain errors exit with 1") {
    TempDir t;
    CHECK(run({"po-verify", "--seq", "mobius:N=100", "--p", "9", "--phase", "0", "--N", "100", "--out", t.path.string()}).code == 1);
    CHECK(run({"sum", "--seq", "mobius:N=100", "--phase", "0", "--N", "1000", "--out", t.path.string()}).code == 1);
    CHECK(run({"gowers", "--seq", "rademacher:N=4096,seed=1", "--k", "3", "--out", t.path.string()}).code == 1);
}

TEST_CASE("sum writes the CSV contract") {
    TempDir t;
    const auto r = run({"sum", "--seq", "mobius:N=100000", "--phase", "0", "--grid", "10000,10,2", "--out", t.path.string()});
    REQUIRE(r.code == 0);
    const std::string csv = slurp(t / "sum.csv");
    CHECK(csv == r.out);
    std::istringstream in(csv);
    std::string header, first, second;
    std::getline(in, header);
    std::getline(in, first);
    std::getline(in, second);
    CHECK(header == "N,re,im,modulus,err_bound");
    CHECK(first.rfind("10000,-0.0023,0,0.0023,", 0) == 0);  // M(10^4) = -23
    CHECK(second.rfind("100000,-0.00048", 0) == 0);          // M(10^5) = -48
}

TEST_CASE("outputs do not depend on the thread count and replay reproduces them") {
    TempDir t;
    put(t / "skew.json", kSkew);
    put(t / "sc.json", R"({"map":"skew.json","point":{"torus":["1/7","2/7"]},"characters":[{"torus":[1,2]},{"torus":[3,-1]}],
        "polynomials":[["0","1"],["0","0","1"]],"weights":"rademacher:N=90000,seed=5","grid":"1000,3,5"})");
    const std::vector<std::vector<std::string>> runs{
        {"sum", "--seq", "rademacher:N=90000,seed=3", "--phase", "0,sqrt(2),1/3", "--backend", "float", "--grid", "1000,3,5", "--plot"},
        {"oscillate", "--seq", "rademacher:N=90000,seed=3", "--grid", "1000,3,5", "--order", "2", "--random-phases", "16"},
        {"erg-avg", "--scenario", t / "sc.json"},
        {"reduce", "--scenario", t / "sc.json", "--m-count", "20"},
    };
    for (std::size_t i = 0; i < runs.size(); ++i) {
        INFO(runs[i][0]);
        const std::string one = t / ("one" + std::to_string(i)), eight = t / ("eight" + std::to_string(i));
        auto a = runs[i], b = runs[i];
        a.insert(a.end(), {"--out", one, "--threads", "1", "--quiet"});
        b.insert(b.end(), {"--out", eight, "--threads", "8", "--quiet"});
        REQUIRE(run(a).code == 0);
        REQUIRE(run(b).code == 0);
        const auto m1 = cli::load_manifest(one + "/manifest.json");
        const auto m8 = cli::load_manifest(eight + "/manifest.json");
        REQUIRE(m1.outputs.size() == m8.outputs.size());
        for (std::size_t k = 0; k < m1.outputs.size(); ++k) CHECK(m1.outputs[k].sha256 == m8.outputs[k].sha256);
        CHECK(m1.config == m8.config);

        const auto rp = run({"replay", "--manifest", one + "/manifest.json", "--threads", "8", "--out", t / ("replay" + std::to_string(i))});
        CHECK(rp.code == 0);
        CHECK(Json::parse(rp.out)["match"] == true);
    }
}

TEST_CASE("replay notices changed outputs") {
    TempDir t;
    REQUIRE(run({"gowers", "--seq", "rademacher:N=32,seed=1", "--out", t / "g", "--quiet"}).code == 0);
    auto m = cli::load_manifest(t / "g/manifest.json");
    m.outputs[0].sha256 = std::string(64, '0');
    cli::write_atomic(t / "g/manifest.json", cli::to_json(m).dump());
    const auto rp = run({"replay", "--manifest", t / "g/manifest.json", "--quiet"});
    CHECK(rp.code == 1);
    CHECK(Json::parse(rp.err)["error"] == "Mismatch");
}

TEST_CASE("config files drive runs like flags") {
    TempDir t;
    put(t / "cfg.json", R"({"subcommand":"gowers","seq":"rademacher:N=64,seed=2","k":3})");
    REQUIRE(run({"--config", t / "cfg.json", "--out", t / "a", "--quiet"}).code == 0);
    REQUIRE(run({"gowers", "--seq", "rademacher:N=64,seed=2", "--k", "3", "--out", t / "b", "--quiet"}).code == 0);
    CHECK(slurp(t / "a/gowers.json") == slurp(t / "b/gowers.json"));
    CHECK(cli::load_manifest(t / "a/manifest.json").config == cli::load_manifest(t / "b/manifest.json").config);
}

TEST_CASE("sha256 and atomic writes") {
    CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(cli::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    TempDir t;
    cli::write_atomic(t / "x/y.txt", "hello");
    CHECK(slurp(t / "x/y.txt") == "hello");
    CHECK_FALSE(fs::exists(t / "x/y.txt.tmp"));
    CHECK(cli::sha256_file(t / "x/y.txt") == cli::sha256_hex("hello"));
}

TEST_CASE("plots") {
    auto profile = [](std::vector<std::pair<std::size_t, double>> pts) {
        expsum::SumProfile p;
        for (auto [n, v] : pts) {
            expsum::SumResult r;
            r.N = n;
            r.value = v;
            p.grid.push_back(n);
            p.results.push_back(r);
        }
        return p;
    };
    auto count = [](const std::string& s, const std::string& what) {
        std::size_t c = 0;
        for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++c;
        return c;
    };
    const std::string one = cli::render_plot(profile({{1000, 0.01}}));
    CHECK(count(one, "<circle") == 1);
    CHECK(count(one, "<polyline") == 0);
    CHECK(one.find("href") == std::string::npos);

    const std::string flat = cli::render_plot(profile({{100, 1}, {1000, 1}, {10000, 1}}));
    CHECK(count(flat, "<circle") == 3);
    // every marker at the same height
    std::set<std::string> heights;
    for (auto pos = flat.find("cy=\""); pos != std::string::npos; pos = flat.find("cy=\"", pos + 1))
        heights.insert(flat.substr(pos + 4, flat.find('"', pos + 4) - pos - 4));
    CHECK(heights.size() == 1);

    const auto decay = profile({{10000, 0.0023}, {100000, 0.00048}, {1000000, 0.000212}, {2000000, 0}});
    CHECK(cli::render_plot(decay, "mu") == cli::render_plot(decay, "mu"));
    CHECK(cli::render_plot(decay, "a<b").find("a&lt;b") != std::string::npos);
    CHECK_THROWS_AS(cli::render_plot(expsum::SumProfile{}), Error);

    TempDir t;
    cli::emit_plot(decay, t / "p.svg");
    CHECK(slurp(t / "p.svg") == cli::render_plot(decay));
}

TEST_CASE("OSCILLAB_THREADS") {
    ::setenv("OSCILLAB_THREADS", "6", 1);
    CHECK(cli::default_threads() == 6);
    ::setenv("OSCILLAB_THREADS", "zero", 1);
    CHECK(cli::default_threads() == 1);
    ::unsetenv("OSCILLAB_THREADS");
    CHECK(cli::default_threads() == 1);
}
