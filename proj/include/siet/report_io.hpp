#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "siet/bounds.hpp"
#include "siet/frontier.hpp"
#include "siet/montecarlo.hpp"

namespace siet {

inline constexpr int kReportSchemaVersion = 1;

/// All floats in reports are rendered with 12 significant digits, '.' as the
/// decimal mark and ',' as the CSV delimiter, so repeated runs diff cleanly.
std::string format_sig12(double v);

nlohmann::json to_json(const BoundsReport& report);
void write_bounds_csv(std::ostream& os, const BoundsReport& report);

nlohmann::json to_json(const ValidationLedger& ledger);

struct SimulationReport {
    DepEstimate dep;
    EopEstimate eop;
    double B = 0.0;
    std::uint64_t seed = 0;
    std::int64_t n = 0;
    double sigma2 = 0.0;
    std::size_t messages = 0;
};

nlohmann::json to_json(const SimulationReport& report);
void write_simulation_csv(std::ostream& os, const SimulationReport& report);

void write_frontier_csv(std::ostream& os, std::span<const FrontierPoint> points);

} // namespace siet
