#include "subord/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace subord {

void RunConfig::validate() const {
    if (grid.angles <= 0 || grid.radii.empty())
        throw std::invalid_argument("config: grid resolutions must be positive");
    for (double r : grid.radii)
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("config: grid radii must lie in (0,1)");
    if (search.theta_points <= 0 || search.m_points <= 0)
        throw std::invalid_argument("config: search resolutions must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("config: tolerance must be positive");
    if (degree < 4) throw std::invalid_argument("config: truncation degree too small");
}

nlohmann::ordered_json RunConfig::to_json() const {
    nlohmann::ordered_json j;
    j["angles"] = grid.angles;
    j["radii"] = grid.radii;
    j["theta_points"] = search.theta_points;
    j["m_points"] = search.m_points;
    j["m_span"] = search.m_span;
    j["seed"] = seed;
    j["degree"] = degree;
    j["threads"] = threads;
    j["tol"] = tol;
    return j;
}

void RunConfig::apply_json(const nlohmann::json& j) {
    if (j.contains("angles")) grid.angles = j["angles"].get<int>();
    if (j.contains("radii")) grid.radii = j["radii"].get<std::vector<double>>();
    if (j.contains("theta_points")) search.theta_points = j["theta_points"].get<int>();
    if (j.contains("m_points")) search.m_points = j["m_points"].get<int>();
    if (j.contains("m_span")) search.m_span = j["m_span"].get<double>();
    if (j.contains("seed")) seed = j["seed"].get<std::uint64_t>();
    if (j.contains("degree")) degree = j["degree"].get<int>();
    if (j.contains("threads")) threads = j["threads"].get<int>();
    if (j.contains("tol")) tol = j["tol"].get<double>();
}

RunConfig RunConfig::load(const std::string& config_path) {
    RunConfig cfg;
    std::string path = config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("SUBORD_CONFIG")) path = env;
    }
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("config: cannot open " + path);
        nlohmann::json j;
        in >> j;
        cfg.apply_json(j);
    }
    cfg.validate();
    return cfg;
}

}  // namespace subord
