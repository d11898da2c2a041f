#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "subord/admissibility.hpp"
#include "subord/subordination.hpp"

namespace subord {

/// Run-wide knobs shared by every CLI command. Layering: defaults, then the
/// config file (--config flag or SUBORD_CONFIG env), then flags.
struct RunConfig {
    EvalGrid grid;
    SearchConfig search = SearchConfig::defaults();
    std::uint64_t seed = 1;
    int degree = 64;
    int threads = 0;
    double tol = 1e-9;
    std::string out_path;

    void validate() const;

    nlohmann::ordered_json to_json() const;
    void apply_json(const nlohmann::json& j);

    /// Defaults + config file (explicit path, else SUBORD_CONFIG).
    static RunConfig load(const std::string& config_path);
};

}  // namespace subord
