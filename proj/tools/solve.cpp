/// @file solve.cpp
/// @brief Command-line driver: solve --config <path> [--out <dir>] [--checks all|fast|none].
///        WALLFLOW_THREADS sets the OpenMP thread count.
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "wallflow/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

int main(int argc, char** argv) {
    CLI::App app{"Steady wall-bounded flow: spectral solve, derivative solve and decay certificate"};
    std::string config, out, checks;
    app.add_option("--config", config, "JSON configuration file")->required();
    app.add_option("--out", out, "output directory for summary.json and CSV reports");
    app.add_option("--checks", checks, "check suite override")->check(CLI::IsMember({"all", "fast", "none"}));
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : wallflow::kExitConfig;
    }
#ifdef _OPENMP
    if (const char* t = std::getenv("WALLFLOW_THREADS")) {
        const int n = std::atoi(t);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
    return wallflow::run(config, out, checks, std::cerr);
}
