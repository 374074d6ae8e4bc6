#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "siet/bounds.hpp"
#include "siet/codec.hpp"
#include "siet/config.hpp"
#include "siet/errors.hpp"
#include "siet/frontier.hpp"
#include "siet/montecarlo.hpp"
#include "siet/report_io.hpp"

namespace {

using namespace siet;

struct CommonArgs {
    std::string config_path;
    std::string json_out;
    std::string csv_out;
    std::optional<std::uint64_t> seed;
    std::int64_t region_samples = 1'000'000;
};

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << body;
}

RunConfig load_config(const CommonArgs& args) {
    RunConfig cfg = load_run_config(args.config_path);
    if (args.seed) cfg.seed = *args.seed;
    return cfg;
}

std::uint64_t pick_message_count(const RunConfig& cfg, const SymbolCounts& counts) {
    if (cfg.messages) return *cfg.messages;
    const auto capacity = multinomial_coefficient(counts);
    const boost::multiprecision::cpp_int fallback = 256;
    return static_cast<std::uint64_t>(capacity < fallback ? capacity : fallback);
}

int run_bounds(const CommonArgs& args) {
    const RunConfig cfg = load_config(args);
    const ChannelParams ch(cfg.sigma2);
    const InputType type = resolve_type(cfg);
    const MapDetector detector(cfg.constellation, type.probs(), ch);
    const RegionProbs rp =
        region_probs(detector, RegionOptions{args.region_samples, cfg.seed, true});
    const BoundsReport report =
        theorem1_report(type, cfg.n, cfg.delta, cfg.constellation, ch, cfg.harvester, rp, cfg.B);

    const nlohmann::json j = to_json(report);
    if (!args.json_out.empty()) write_text_file(args.json_out, j.dump(2) + "\n");
    if (!args.csv_out.empty()) {
        std::ofstream csv(args.csv_out, std::ios::binary);
        write_bounds_csv(csv, report);
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_simulate(const CommonArgs& args, std::optional<double> B_flag,
                 std::optional<std::int64_t> trials_flag) {
    RunConfig cfg = load_config(args);
    if (trials_flag) cfg.trials = *trials_flag;
    if (B_flag) cfg.B = *B_flag;
    if (!cfg.B) throw ConfigError("B", "simulate needs an energy threshold (config field or --B)");

    const ChannelParams ch(cfg.sigma2);
    const InputType type = resolve_type(cfg);
    const SymbolCounts counts = rationalize(type, cfg.n);
    const HomogeneousCode code =
        build_code(counts, pick_message_count(cfg, counts), BuildMode::Sample, cfg.seed);
    const MapDetector detector(cfg.constellation, code_type(code).probs(), ch);

    SimulationOptions opt;
    opt.trials = cfg.trials;
    opt.seed = cfg.seed;
    opt.region_samples = args.region_samples;

    SimulationReport report;
    report.dep = simulate_dep(code, detector, opt);
    report.eop = simulate_eop(code, cfg.constellation, ch, cfg.harvester, *cfg.B, opt);
    report.B = *cfg.B;
    report.seed = cfg.seed;
    report.n = cfg.n;
    report.sigma2 = cfg.sigma2;
    report.messages = code.message_count();

    const nlohmann::json j = to_json(report);
    if (!args.json_out.empty()) write_text_file(args.json_out, j.dump(2) + "\n");
    if (!args.csv_out.empty()) {
        std::ofstream csv(args.csv_out, std::ios::binary);
        write_simulation_csv(csv, report);
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_frontier(const CommonArgs& args, int points, const std::string& mode,
                 std::vector<double> dep_targets) {
    const RunConfig cfg = load_config(args);
    const ChannelParams ch(cfg.sigma2);
    FrontierConfig fcfg;
    fcfg.n = cfg.n;
    fcfg.delta = cfg.delta;
    fcfg.region = RegionOptions{args.region_samples, cfg.seed, true};

    std::vector<FrontierPoint> result;
    if (mode == "sweep") {
        if (points < 2) throw ConfigError("points", "sweep needs at least two lambda points");
        std::vector<double> lambdas(static_cast<std::size_t>(points));
        for (int i = 0; i < points; ++i) {
            lambdas[static_cast<std::size_t>(i)] = static_cast<double>(i) / (points - 1);
        }
        result = sweep(lambdas, cfg.constellation, fcfg, ch, cfg.harvester);
    } else if (mode == "dep-curve") {
        if (dep_targets.empty()) {
            // log-spaced defaults covering the usual display range
            for (int i = 0; i < 12; ++i) {
                dep_targets.push_back(std::pow(10.0, -6.0 + 5.0 * i / 11.0));
            }
        }
        result = dep_energy_curve(dep_targets, cfg.constellation, fcfg, ch, cfg.harvester);
    } else {
        throw ConfigError("mode", "expected 'sweep' or 'dep-curve'");
    }

    std::ofstream csv(args.csv_out, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write '" + args.csv_out + "'");
    write_frontier_csv(csv, result);
    std::cout << "wrote " << result.size() << " points to " << args.csv_out << '\n';
    return 0;
}

int run_validate(const CommonArgs& args, std::optional<double> B_flag,
                 std::optional<std::int64_t> trials_flag) {
    RunConfig cfg = load_config(args);
    if (trials_flag) cfg.trials = *trials_flag;
    if (B_flag) cfg.B = *B_flag;
    if (!cfg.B) throw ConfigError("B", "validate needs an energy threshold (config field or --B)");

    const ChannelParams ch(cfg.sigma2);
    const InputType type = resolve_type(cfg);
    const SymbolCounts counts = rationalize(type, cfg.n);
    const HomogeneousCode code =
        build_code(counts, pick_message_count(cfg, counts), BuildMode::Sample, cfg.seed);
    const MapDetector detector(cfg.constellation, code_type(code).probs(), ch);

    SimulationOptions opt;
    opt.trials = cfg.trials;
    opt.seed = cfg.seed;
    opt.region_samples = args.region_samples;

    const ValidationLedger ledger = validate_bounds(code, detector, cfg.harvester, *cfg.B,
                                                    cfg.delta, opt);
    const nlohmann::json j = to_json(ledger);
    if (!args.json_out.empty()) write_text_file(args.json_out, j.dump(2) + "\n");
    std::cout << j.dump(2) << '\n';
    return ledger.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-blocklength information and energy transmission bounds over AWGN"};
    app.require_subcommand(1);

    CommonArgs args;
    std::optional<double> B_flag;
    std::optional<std::int64_t> trials_flag;
    int frontier_points = 21;
    std::string frontier_mode = "sweep";
    std::vector<double> dep_targets;

    const auto add_common = [&](CLI::App* sub, const char* default_csv) {
        sub->add_option("--config", args.config_path, "JSON run configuration")->required();
        sub->add_option("--out", args.json_out, "JSON report path");
        sub->add_option("--csv", args.csv_out, "CSV report path")->default_val(default_csv);
        sub->add_option("--seed", args.seed, "override the config seed");
        sub->add_option("--region-samples", args.region_samples,
                        "Monte Carlo samples per symbol for decision-region integrals");
    };

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate the bound tuple for one type");
    add_common(bounds_cmd, "report.csv");

    CLI::App* sim_cmd = app.add_subcommand("simulate", "seeded link simulation of a homogeneous code");
    add_common(sim_cmd, "report.csv");
    sim_cmd->add_option("--B", B_flag, "energy outage threshold");
    sim_cmd->add_option("--trials", trials_flag, "number of Monte Carlo trials");

    CLI::App* frontier_cmd = app.add_subcommand("frontier", "sweep the rate/energy trade-off");
    add_common(frontier_cmd, "frontier.csv");
    frontier_cmd->add_option("--points", frontier_points, "lambda grid size for sweep mode");
    frontier_cmd->add_option("--mode", frontier_mode, "sweep | dep-curve");
    frontier_cmd->add_option("--dep-targets", dep_targets, "DEP targets for dep-curve mode");

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "check the bounds against the link simulation");
    add_common(validate_cmd, "");
    validate_cmd->add_option("--B", B_flag, "energy outage threshold");
    validate_cmd->add_option("--trials", trials_flag, "number of Monte Carlo trials");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds_cmd->parsed()) return run_bounds(args);
        if (sim_cmd->parsed()) return run_simulate(args, B_flag, trials_flag);
        if (frontier_cmd->parsed()) return run_frontier(args, frontier_points, frontier_mode, dep_targets);
        if (validate_cmd->parsed()) return run_validate(args, B_flag, trials_flag);
    } catch (const siet::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const siet::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
