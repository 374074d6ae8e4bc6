#include "siet/config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "siet/errors.hpp"
#include "siet/frontier.hpp"

namespace siet {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const std::string& field) {
    if (!j.is_object()) throw ConfigError(field, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ConfigError(field + "." + key, "missing required field");
    return *it;
}

double number_at(const json& j, const std::string& field) {
    if (!j.is_number()) throw ConfigError(field, "expected a number");
    return j.get<double>();
}

std::int64_t integer_at(const json& j, const std::string& field) {
    if (!j.is_number_integer()) throw ConfigError(field, "expected an integer");
    return j.get<std::int64_t>();
}

} // namespace

Constellation constellation_from_json(const json& j, const std::string& field) {
    if (!j.is_object()) throw ConfigError(field, "expected an object");
    try {
        if (j.contains("preset")) {
            const std::string preset = j.at("preset").get<std::string>();
            if (preset.rfind("qam", 0) != 0) {
                throw ConfigError(field + ".preset", "unknown preset '" + preset + "'");
            }
            const unsigned order = static_cast<unsigned>(std::stoul(preset.substr(3)));
            const double half = j.contains("half_spacing")
                                    ? number_at(j.at("half_spacing"), field + ".half_spacing")
                                    : 1.0;
            return make_rect_qam(order, half);
        }
        if (!j.contains("symbols")) {
            throw ConfigError(field, "needs either 'preset' or 'symbols'");
        }
        const json& arr = j.at("symbols");
        if (!arr.is_array() || arr.empty()) {
            throw ConfigError(field + ".symbols", "expected a nonempty array of [re, im] pairs");
        }
        std::vector<Complex> symbols;
        symbols.reserve(arr.size());
        double max_mag = 0.0;
        for (const json& entry : arr) {
            if (!entry.is_array() || entry.size() != 2) {
                throw ConfigError(field + ".symbols", "each symbol must be an [re, im] pair");
            }
            symbols.emplace_back(entry[0].get<double>(), entry[1].get<double>());
            max_mag = std::max(max_mag, std::abs(symbols.back()));
        }
        const double peak = j.contains("peak_power")
                                ? number_at(j.at("peak_power"), field + ".peak_power")
                                : max_mag;
        return Constellation(std::move(symbols), peak);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(field, e.what());
    }
}

HarvesterModel harvester_from_json(const json& j, const std::string& field) {
    try {
        const double k2 = number_at(require(j, "k2", field), field + ".k2");
        const double k4 = number_at(require(j, "k4", field), field + ".k4");
        const double h = j.contains("h_mag") ? number_at(j.at("h_mag"), field + ".h_mag") : 1.0;
        return HarvesterModel(k2, k4, h);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(field, e.what());
    }
}

TypeSpec type_spec_from_json(const json& j, const std::string& field) {
    TypeSpec spec;
    if (j.is_string()) {
        if (j.get<std::string>() != "uniform") {
            throw ConfigError(field, "unknown type spec '" + j.get<std::string>() + "'");
        }
        spec.kind = TypeSpec::Kind::Uniform;
        return spec;
    }
    if (!j.is_object()) throw ConfigError(field, "expected \"uniform\" or an object");
    const std::string kind = require(j, "kind", field).get<std::string>();
    if (kind == "uniform") {
        spec.kind = TypeSpec::Kind::Uniform;
    } else if (kind == "explicit") {
        spec.kind = TypeSpec::Kind::Explicit;
        const json& probs = require(j, "probs", field);
        if (!probs.is_array()) throw ConfigError(field + ".probs", "expected an array");
        spec.probs = probs.get<std::vector<double>>();
    } else if (kind == "family") {
        spec.kind = TypeSpec::Kind::Family;
        spec.lambda = number_at(require(j, "lambda", field), field + ".lambda");
    } else {
        throw ConfigError(field + ".kind", "expected uniform, explicit or family");
    }
    return spec;
}

RunConfig run_config_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("<root>", "expected a JSON object");
    RunConfig cfg{
        constellation_from_json(require(j, "constellation", "<root>"), "constellation"),
        1.0,
        1,
        0.0,
        harvester_from_json(require(j, "harvester", "<root>"), "harvester"),
        TypeSpec{},
        std::nullopt,
        100'000,
        1,
        std::nullopt,
    };
    cfg.sigma2 = number_at(require(j, "sigma2", "<root>"), "sigma2");
    if (!(cfg.sigma2 > 0.0)) throw ConfigError("sigma2", "must be positive");
    cfg.n = integer_at(require(j, "n", "<root>"), "n");
    if (cfg.n < 1) throw ConfigError("n", "must be >= 1");
    cfg.delta = number_at(require(j, "delta", "<root>"), "delta");
    if (!(cfg.delta >= 0.0) || !(cfg.delta < 1.0)) throw ConfigError("delta", "must lie in [0, 1)");
    cfg.type = j.contains("type") ? type_spec_from_json(j.at("type"), "type") : TypeSpec{};
    if (j.contains("B")) {
        cfg.B = number_at(j.at("B"), "B");
        if (!(*cfg.B >= 0.0)) throw ConfigError("B", "must be nonnegative");
    }
    if (j.contains("trials")) {
        cfg.trials = integer_at(j.at("trials"), "trials");
        if (cfg.trials < 1) throw ConfigError("trials", "must be >= 1");
    }
    if (j.contains("seed")) {
        const std::int64_t seed = integer_at(j.at("seed"), "seed");
        cfg.seed = static_cast<std::uint64_t>(seed);
    }
    if (j.contains("M")) {
        const std::int64_t m = integer_at(j.at("M"), "M");
        if (m < 1) throw ConfigError("M", "must be >= 1");
        cfg.messages = static_cast<std::uint64_t>(m);
    }
    if (cfg.type.kind == TypeSpec::Kind::Explicit &&
        cfg.type.probs.size() != cfg.constellation.size()) {
        throw ConfigError("type.probs", "length must match the constellation size");
    }
    if (cfg.type.kind == TypeSpec::Kind::Family &&
        !(cfg.type.lambda >= 0.0 && cfg.type.lambda <= 1.0)) {
        throw ConfigError("type.lambda", "must lie in [0, 1]");
    }
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("<file>", "cannot open '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("<file>", std::string("invalid JSON: ") + e.what());
    }
    return run_config_from_json(j);
}

InputType resolve_type(const RunConfig& cfg) {
    switch (cfg.type.kind) {
        case TypeSpec::Kind::Uniform:
            return InputType::uniform(cfg.constellation.size());
        case TypeSpec::Kind::Explicit:
            try {
                return InputType(cfg.type.probs);
            } catch (const std::exception& e) {
                throw ConfigError("type.probs", e.what());
            }
        case TypeSpec::Kind::Family: {
            const ChannelParams ch(cfg.sigma2);
            const auto means = expected_energy_per_symbol(cfg.constellation, ch, cfg.harvester);
            return interpolation_family(cfg.type.lambda, means);
        }
    }
    throw ConfigError("type", "unrecognized type kind");
}

} // namespace siet
