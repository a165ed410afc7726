#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ecosim/cli.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"ecosim"};
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    return ecosim::cli_main(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::path("cli_test_tmp") / name;
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("run writes deterministic outputs") {
    const fs::path first = fresh_dir("run_a");
    const fs::path second = fresh_dir("run_b");
    REQUIRE(run_cli({"run", "--seed", "42", "--out", first.string(), "--svg"}) == 0);
    REQUIRE(run_cli({"run", "--seed", "42", "--out", second.string(), "--svg"}) == 0);

    for (const char* name :
         {"weeks.csv", "accounts.csv", "metadata.json", "weekly_sales.svg", "government_account.svg",
          "commercial_bank_account.svg", "compliance.svg", "weekly_loans.svg"}) {
        CAPTURE(name);
        REQUIRE(fs::exists(first / name));
        CHECK(slurp(first / name) == slurp(second / name));
    }

    const std::string meta = slurp(first / "metadata.json");
    CHECK(meta.find("\"seed\": 42") != std::string::npos);
    CHECK(meta.find("\"artifact_version\"") != std::string::npos);
}

TEST_CASE("run accepts a config file and a mode override") {
    const fs::path dir = fresh_dir("run_cfg");
    fs::create_directories(dir);
    const fs::path cfg = dir / "params.json";
    std::ofstream(cfg) << R"({"W": 9, "N": 4})";

    const fs::path out = fresh_dir("run_cfg_out");
    REQUIRE(run_cli({"run", "--config", cfg.string(), "--seed", "1", "--out", out.string(),
                     "--mode", "market"}) == 0);
    const std::string weeks = slurp(out / "weeks.csv");
    CHECK(std::count(weeks.begin(), weeks.end(), '\n') == 10); // header + 9 weeks
    const std::string meta = slurp(out / "metadata.json");
    CHECK(meta.find("\"price_mode\": \"market\"") != std::string::npos);
}

TEST_CASE("a bad config exits 1 and names the offending key") {
    const fs::path dir = fresh_dir("bad_cfg");
    fs::create_directories(dir);
    const fs::path cfg = dir / "bad.json";
    std::ofstream(cfg) << R"({"moood": 7})";
    CHECK(run_cli({"run", "--config", cfg.string(), "--seed", "1", "--out", (dir / "out").string()}) == 1);

    std::ofstream(cfg, std::ios::trunc) << R"({"tax": 1.9})";
    CHECK(run_cli({"run", "--config", cfg.string(), "--seed", "1", "--out", (dir / "out").string()}) == 1);
}

TEST_CASE("bad flags exit 1, missing output path exits 2") {
    CHECK(run_cli({"run", "--bogus"}) == 1);
    CHECK(run_cli({"frobnicate"}) == 1);
    CHECK(run_cli({}) == 1);

    const fs::path dir = fresh_dir("blocked");
    fs::create_directories(dir);
    std::ofstream(dir / "file") << "x";
    CHECK(run_cli({"run", "--seed", "1", "--out", (dir / "file" / "sub").string()}) == 2);
}

TEST_CASE("ensemble writes per-seed and summary tables") {
    const fs::path out = fresh_dir("ens");
    REQUIRE(run_cli({"ensemble", "--seeds", "12", "--base-seed", "100", "--out", out.string()}) == 0);
    const std::string per_seed = slurp(out / "ensemble.csv");
    CHECK(std::count(per_seed.begin(), per_seed.end(), '\n') == 13);
    CHECK(per_seed.find("\n100,") != std::string::npos);
    CHECK(per_seed.find("\n111,") != std::string::npos);
    REQUIRE(fs::exists(out / "ensemble_summary.csv"));
    REQUIRE(fs::exists(out / "metadata.json"));
}

TEST_CASE("sweep writes one row per value") {
    const fs::path out = fresh_dir("sweep");
    REQUIRE(run_cli({"sweep", "--param", "loanlimit", "--values", "-5,-15", "--seeds", "10",
                     "--base-seed", "7", "--out", out.string()}) == 0);
    const std::string table = slurp(out / "sweep.csv");
    CHECK(std::count(table.begin(), table.end(), '\n') == 3);
    CHECK(table.find("loanlimit,-5") != std::string::npos);
    CHECK(table.find("loanlimit,-15") != std::string::npos);

    CHECK(run_cli({"sweep", "--param", "loanlimit", "--values", "-5,oops", "--seeds", "4",
                   "--base-seed", "7", "--out", out.string()}) == 1);
}
