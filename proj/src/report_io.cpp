#include "siet/report_io.hpp"

#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

namespace siet {

namespace {

using nlohmann::json;

const char* method_name(RegionMethod m) {
    switch (m) {
        case RegionMethod::ClosedForm: return "closed-form";
        case RegionMethod::Quadrature: return "quadrature";
        case RegionMethod::MonteCarlo: return "monte-carlo";
    }
    return "unknown";
}

} // namespace

std::string format_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json to_json(const BoundsReport& r) {
    json j{
        {"schema_version", kReportSchemaVersion},
        {"rate_ub_exact", r.rate_ub_exact},
        {"rate_ub_stirling", r.rate_ub_stirling},
        {"energy_rate_ub", r.energy_rate_ub},
        {"dep_lb", r.dep_lb},
        {"inputs",
         {{"type", r.type},
          {"n", r.n},
          {"delta", r.delta},
          {"sigma2", r.sigma2},
          {"harvester", {{"k2", r.k2}, {"k4", r.k4}, {"h_mag", r.h_mag}}}}},
        {"diagnostics",
         {{"dep_lb_raw", r.dep_lb_raw},
          {"dep_support_mismatch", r.dep_support_mismatch},
          {"rate_gap_stirling_minus_exact", r.rate_ub_stirling - r.rate_ub_exact},
          {"region_method", method_name(r.region_method)},
          {"region_est_error", r.region_est_error}}},
    };
    if (r.B) {
        j["inputs"]["B"] = *r.B;
        j["eop_lb"] = *r.eop_lb;
    } else {
        j["eop_lb"] = nullptr;
    }
    return j;
}

void write_bounds_csv(std::ostream& os, const BoundsReport& r) {
    os << "n,delta,sigma2,k2,k4,h_mag,rate_ub_exact,rate_ub_stirling,energy_rate_ub,dep_lb,eop_lb\n";
    os << r.n << ',' << format_sig12(r.delta) << ',' << format_sig12(r.sigma2) << ','
       << format_sig12(r.k2) << ',' << format_sig12(r.k4) << ',' << format_sig12(r.h_mag) << ','
       << format_sig12(r.rate_ub_exact) << ',' << format_sig12(r.rate_ub_stirling) << ','
       << format_sig12(r.energy_rate_ub) << ',' << format_sig12(r.dep_lb) << ','
       << (r.eop_lb ? format_sig12(*r.eop_lb) : std::string{}) << '\n';
}

json to_json(const ValidationLedger& ledger) {
    json checks = json::array();
    for (const auto& c : ledger.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"margin", c.margin}});
    }
    return json{
        {"schema_version", kReportSchemaVersion},
        {"checks", checks},
        {"all_pass", ledger.all_pass()},
        {"dep_hat", ledger.dep.dep_hat},
        {"dep_stderr", ledger.dep.dep_stderr},
        {"analytic_dep", ledger.dep.analytic_dep},
        {"dep_mc_skipped", ledger.dep.mc_skipped},
        {"dep_bound", ledger.dep_bound},
        {"eop_hat", ledger.eop.eop_hat},
        {"eop_stderr", ledger.eop.eop_stderr},
        {"eop_bound", ledger.eop_bound},
        {"code_rate", ledger.rate},
        {"rate_bound", ledger.rate_bound},
        {"B", ledger.B},
        {"delta_target", ledger.delta_target},
    };
}

json to_json(const SimulationReport& r) {
    return json{
        {"schema_version", kReportSchemaVersion},
        {"dep_hat", r.dep.dep_hat},
        {"dep_stderr", r.dep.dep_stderr},
        {"analytic_dep", r.dep.analytic_dep},
        {"dep_mc_skipped", r.dep.mc_skipped},
        {"eop_hat", r.eop.eop_hat},
        {"eop_stderr", r.eop.eop_stderr},
        {"trials", r.dep.trials},
        {"seed", r.seed},
        {"B", r.B},
        {"inputs", {{"n", r.n}, {"sigma2", r.sigma2}, {"messages", r.messages}}},
    };
}

void write_simulation_csv(std::ostream& os, const SimulationReport& r) {
    os << "trials,seed,B,dep_hat,dep_stderr,analytic_dep,dep_mc_skipped,eop_hat,eop_stderr\n";
    os << r.dep.trials << ',' << r.seed << ',' << format_sig12(r.B) << ','
       << format_sig12(r.dep.dep_hat) << ',' << format_sig12(r.dep.dep_stderr) << ','
       << format_sig12(r.dep.analytic_dep) << ',' << (r.dep.mc_skipped ? 1 : 0) << ','
       << format_sig12(r.eop.eop_hat) << ',' << format_sig12(r.eop.eop_stderr) << '\n';
}

void write_frontier_csv(std::ostream& os, std::span<const FrontierPoint> points) {
    if (points.empty()) return;
    const std::size_t L = points.front().type.size();
    os << "lambda";
    for (std::size_t l = 1; l <= L; ++l) os << ",p_" << l;
    os << ",rate_ub_exact,rate_ub_stirling,energy_ub,dep_lb,delta";
    const bool with_targets = points.front().dep_target.has_value();
    if (with_targets) os << ",dep_target,feasible";
    os << '\n';
    for (const auto& pt : points) {
        os << format_sig12(pt.lambda);
        for (double p : pt.type) os << ',' << format_sig12(p);
        os << ',' << format_sig12(pt.rate_ub_exact) << ',' << format_sig12(pt.rate_ub_stirling)
           << ',' << format_sig12(pt.energy_ub) << ',' << format_sig12(pt.dep_lb) << ','
           << format_sig12(pt.delta);
        if (with_targets) {
            os << ',' << format_sig12(pt.dep_target.value_or(0.0)) << ',' << (pt.feasible ? 1 : 0);
        }
        os << '\n';
    }
}

} // namespace siet
