#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "siet/constellation.hpp"
#include "siet/harvester.hpp"
#include "siet/typespace.hpp"

namespace siet {

/// How the code type is specified in a run configuration.
struct TypeSpec {
    enum class Kind { Uniform, Explicit, Family };
    Kind kind = Kind::Uniform;
    std::vector<double> probs; // Explicit
    double lambda = 0.0;       // Family
};

/// One fully parsed run configuration. Field validation happens in the
/// owning modules; this layer only maps JSON to domain values and reports
/// violations with their field path.
struct RunConfig {
    Constellation constellation;
    double sigma2 = 1.0;
    std::int64_t n = 1;
    double delta = 0.0;
    HarvesterModel harvester;
    TypeSpec type;
    std::optional<double> B;
    std::int64_t trials = 100'000;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> messages; // codebook size for simulate/validate
};

Constellation constellation_from_json(const nlohmann::json& j, const std::string& field);
HarvesterModel harvester_from_json(const nlohmann::json& j, const std::string& field);
TypeSpec type_spec_from_json(const nlohmann::json& j, const std::string& field);

RunConfig run_config_from_json(const nlohmann::json& j);
RunConfig load_run_config(const std::filesystem::path& path);

/// Materializes the configured type for this constellation (resolving the
/// family parameter against the harvester energy ordering when needed).
InputType resolve_type(const RunConfig& cfg);

} // namespace siet
