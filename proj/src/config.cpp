#include "wallflow/config.hpp"

#include <fstream>
#include <set>

#include "wallflow/errors.hpp"

namespace wallflow {

namespace {

using nlohmann::json;

void only(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw ConfigError(where + ": unknown key '" + it.key() + "'");
}

template <class T>
void get(const json& j, const char* key, T& out, const std::string& where) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(where + "." + key + ": wrong type");
    }
}

}  // namespace

PipelineConfig PipelineConfig::from_json(const json& j) {
    PipelineConfig c;
    only(j, "config", {"grid", "force", "solver", "alpha", "x_nodes", "stages", "checks", "write_fields"});
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        only(g, "grid", {"k_min", "k_max", "k_nodes_per_side", "t_max", "t_nodes"});
        get(g, "k_min", c.grid.k_min, "grid");
        get(g, "k_max", c.grid.k_max, "grid");
        get(g, "k_nodes_per_side", c.grid.k_nodes_per_side, "grid");
        get(g, "t_max", c.grid.t_max, "grid");
        get(g, "t_nodes", c.grid.t_nodes, "grid");
    }
    if (j.contains("force")) {
        const auto& f = j["force"];
        only(f, "force", {"x0", "x1", "y0", "y1", "epsilon", "amp1", "amp2", "smoothness"});
        get(f, "x0", c.force.x0, "force");
        get(f, "x1", c.force.x1, "force");
        get(f, "y0", c.force.y0, "force");
        get(f, "y1", c.force.y1, "force");
        get(f, "epsilon", c.force.epsilon, "force");
        get(f, "amp1", c.force.amp1, "force");
        get(f, "amp2", c.force.amp2, "force");
        get(f, "smoothness", c.force.smoothness, "force");
    }
    if (j.contains("solver")) {
        const auto& s = j["solver"];
        only(s, "solver", {"tol", "max_iter", "relaxation", "d_tol", "d_max_iter"});
        get(s, "tol", c.solver.tol, "solver");
        get(s, "max_iter", c.solver.max_iter, "solver");
        get(s, "relaxation", c.solver.relaxation, "solver");
        get(s, "d_tol", c.solver.d_tol, "solver");
        get(s, "d_max_iter", c.solver.d_max_iter, "solver");
    }
    get(j, "alpha", c.alpha, "config");
    if (j.contains("x_nodes")) {
        const auto& x = j["x_nodes"];
        only(x, "x_nodes", {"n_per_side", "x_min", "x_max_factor"});
        get(x, "n_per_side", c.x_nodes.n_per_side, "x_nodes");
        get(x, "x_min", c.x_nodes.x_min, "x_nodes");
        get(x, "x_max_factor", c.x_nodes.x_max_factor, "x_nodes");
    }
    if (j.contains("stages")) {
        const auto& s = j["stages"];
        only(s, "stages", {"derivative", "certificate", "pressure"});
        get(s, "derivative", c.derivative, "stages");
        get(s, "certificate", c.certificate, "stages");
        get(s, "pressure", c.pressure, "stages");
    }
    get(j, "checks", c.checks, "config");
    get(j, "write_fields", c.write_fields, "config");
    c.validate();
    return c;
}

PipelineConfig PipelineConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return from_json(j);
}

void PipelineConfig::validate() const {
    if (!(grid.k_min > 0.0) || !(grid.k_max > grid.k_min)) throw ConfigError("grid: need 0 < k_min < k_max");
    if (!(grid.t_max > 1.0)) throw ConfigError("grid: need t_max > 1");
    if (grid.k_nodes_per_side < 8 || grid.t_nodes < 8) throw ConfigError("grid: need at least 8 nodes per axis");
    force.validate();
    if (!(solver.tol > 0.0) || solver.max_iter < 1) throw ConfigError("solver: need tol > 0, max_iter >= 1");
    if (!(solver.d_tol > 0.0) || solver.d_max_iter < 1) throw ConfigError("solver: need d_tol > 0, d_max_iter >= 1");
    if (!(solver.relaxation > 0.0) || solver.relaxation > 1.0) throw ConfigError("solver: relaxation in (0, 1]");
    if (!(alpha > 3.0)) throw ConfigError("alpha must exceed 3");
    if (x_nodes.n_per_side < 2 || !(x_nodes.x_min > 0.0) || !(x_nodes.x_max_factor > 0.0))
        throw ConfigError("x_nodes: need n_per_side >= 2, positive x_min and x_max_factor");
    if (checks != "all" && checks != "fast" && checks != "none")
        throw ConfigError("checks must be one of all, fast, none");
    if (certificate && !derivative) throw ConfigError("stages: certificate needs derivative");
}

nlohmann::json PipelineConfig::to_json() const {
    return {{"grid",
             {{"k_min", grid.k_min},
              {"k_max", grid.k_max},
              {"k_nodes_per_side", grid.k_nodes_per_side},
              {"t_max", grid.t_max},
              {"t_nodes", grid.t_nodes}}},
            {"force",
             {{"x0", force.x0},
              {"x1", force.x1},
              {"y0", force.y0},
              {"y1", force.y1},
              {"epsilon", force.epsilon},
              {"amp1", force.amp1},
              {"amp2", force.amp2},
              {"smoothness", force.smoothness}}},
            {"solver",
             {{"tol", solver.tol},
              {"max_iter", solver.max_iter},
              {"relaxation", solver.relaxation},
              {"d_tol", solver.d_tol},
              {"d_max_iter", solver.d_max_iter}}},
            {"alpha", alpha},
            {"x_nodes", {{"n_per_side", x_nodes.n_per_side}, {"x_min", x_nodes.x_min}, {"x_max_factor", x_nodes.x_max_factor}}},
            {"stages", {{"derivative", derivative}, {"certificate", certificate}, {"pressure", pressure}}},
            {"checks", checks},
            {"write_fields", write_fields}};
}

}  // namespace wallflow
