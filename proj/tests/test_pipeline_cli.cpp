/// @file test_pipeline_cli.cpp
/// @brief Config parsing, exit codes, report layout and byte-level determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wallflow/errors.hpp"
#include "wallflow/pipeline.hpp"

using namespace wallflow;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("wallflow_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

json small_config() {
    return {{"grid", {{"k_min", 1e-4}, {"k_max", 32.0}, {"k_nodes_per_side", 48}, {"t_max", 24.0}, {"t_nodes", 64}}},
            {"x_nodes", {{"n_per_side", 32}}},
            {"checks", "none"}};
}

fs::path write_config(const fs::path& dir, const json& j) {
    const fs::path p = dir / "config.json";
    std::ofstream(p) << j.dump(2);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("config parsing is strict") {
    const PipelineConfig d = PipelineConfig::from_json(json::object());
    CHECK(d.alpha == 3.5);
    CHECK(d.checks == "fast");
    CHECK(d.grid.k_nodes_per_side == 256);
    CHECK(d.force.epsilon == 1e-3);

    const PipelineConfig back = PipelineConfig::from_json(small_config());
    CHECK(PipelineConfig::from_json(back.to_json()).to_json() == back.to_json());

    CHECK_THROWS_AS(PipelineConfig::from_json({{"gird", json::object()}}), ConfigError);
    CHECK_THROWS_AS(PipelineConfig::from_json({{"grid", {{"tmax", 3.0}}}}), ConfigError);
    CHECK_THROWS_AS(PipelineConfig::from_json({{"alpha", 3.0}}), ConfigError);
    CHECK_THROWS_AS(PipelineConfig::from_json({{"alpha", "3.5"}}), ConfigError);
    CHECK_THROWS_AS(PipelineConfig::from_json({{"checks", "some"}}), ConfigError);
    CHECK_THROWS_AS(PipelineConfig::from_json({{"force", {{"y0", 0.5}}}}), ConfigError);
    CHECK_THROWS_AS(PipelineConfig::from_json({{"stages", {{"derivative", false}}}}), ConfigError);
    CHECK_THROWS_AS(PipelineConfig::load("/nonexistent/wallflow.json"), ConfigError);
}

TEST_CASE("exit code 3 on config errors") {
    const fs::path dir = scratch("bad");
    std::ostringstream log;
    std::ofstream(dir / "broken.json") << "{ \"grid\": ";
    CHECK(run((dir / "broken.json").string(), "", "", log) == kExitConfig);
    CHECK(run(write_config(dir, {{"unknown", 1}}).string(), "", "", log) == kExitConfig);
    CHECK(run(write_config(dir, small_config()).string(), "", "most", log) == kExitConfig);
    CHECK(log.str().find("config error") != std::string::npos);
}

TEST_CASE("zero forcing gives zero fields and passing checks") {
    json j = small_config();
    j["force"] = {{"epsilon", 0.0}};
    j["checks"] = "fast";
    const fs::path dir = scratch("zero");
    std::ostringstream log;
    const int rc = run(write_config(dir, j).string(), (dir / "out").string(), "", log);
    INFO(log.str());
    CHECK(rc == kExitOk);

    const json sum = json::parse(slurp(dir / "out" / "summary.json"));
    CHECK(sum["all_pass"] == true);
    std::set<std::string> names;
    for (const auto& c : sum["checks"]) {
        CHECK(c["pass"] == true);
        CHECK(names.insert(c["name"].get<std::string>()).second);
    }
    CHECK(names.count("reality"));
    CHECK(names.count("dk_vs_fd"));
    CHECK(names.count("bound:sgk3_a3_r2_b0.5_g0_d2"));

    std::ifstream omega(dir / "out" / "fields" / "omega.csv");
    std::string line;
    std::getline(omega, line);
    CHECK(line == "k,t,re,im");
    std::size_t rows = 0;
    while (std::getline(omega, line)) {
        ++rows;
        const auto a = line.find(',', line.find(',') + 1);
        CHECK(line.substr(a + 1) == "0,0");
    }
    CHECK(rows == 96 * 64);
}

TEST_CASE("exit code 2 with iterate log when the forcing is too strong") {
    json j = small_config();
    j["force"] = {{"epsilon", 5e3}};
    const fs::path dir = scratch("diverge");
    std::ostringstream log;
    CHECK(run(write_config(dir, j).string(), (dir / "out").string(), "", log) == kExitNoConvergence);
    CHECK(log.str().find("iterate sup norms") != std::string::npos);
    const json sum = json::parse(slurp(dir / "out" / "summary.json"));
    CHECK(sum["exit_code"] == kExitNoConvergence);
    CHECK(sum["all_pass"] == false);
    CHECK_FALSE(fs::exists(dir / "out" / "fields"));
}

TEST_CASE("repeated runs are byte-identical") {
    const fs::path dir = scratch("det");
    const fs::path cfg = write_config(dir, small_config());
    std::ostringstream log;
    REQUIRE(run(cfg.string(), (dir / "a").string(), "", log) == kExitOk);
    REQUIRE(run(cfg.string(), (dir / "b").string(), "", log) == kExitOk);
    std::size_t compared = 0;
    for (const auto& e : fs::recursive_directory_iterator(dir / "a")) {
        if (!e.is_regular_file()) continue;
        const fs::path rel = fs::relative(e.path(), dir / "a");
        INFO(rel.string());
        CHECK(slurp(e.path()) == slurp(dir / "b" / rel));
        ++compared;
    }
    CHECK(compared >= 15);
    CHECK(fs::exists(dir / "a" / "decay.csv"));
    CHECK(fs::exists(dir / "a" / "fields" / "omega_x.csv"));
}

TEST_CASE("command-line driver") {
    const fs::path dir = scratch("cli");
    const fs::path cfg = write_config(dir, small_config());
    const std::string exe = WALLFLOW_SOLVE_EXE;
    auto status = [](const std::string& cmd) {
        const int s = std::system((cmd + " 2>/dev/null").c_str());
        return WEXITSTATUS(s);
    };
    CHECK(status(exe + " --config " + cfg.string() + " --out " + (dir / "out").string() + " --checks none") == 0);
    CHECK(fs::exists(dir / "out" / "summary.json"));
    CHECK(status(exe + " --config " + cfg.string() + " --checks sometimes") == kExitConfig);
    CHECK(status(exe + " --out " + dir.string()) == kExitConfig);
    CHECK(status(exe + " --config " + (dir / "missing.json").string()) == kExitConfig);
}
