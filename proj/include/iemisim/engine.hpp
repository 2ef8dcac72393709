#pragma once

#include "iemisim/scenario.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace iemisim::engine {

/// Uniform-step time series of one run. v_out is the physical output
/// voltage; v_sense and i_out are the sensed feedback channels (equal to the
/// physical quantities except while a sensor attack corrupts them).
struct Series {
    std::vector<double> t;
    std::vector<double> v_out;
    std::vector<double> v_sense;
    std::vector<double> i_out;
    std::vector<double> d_mag;
    std::vector<std::uint8_t> attack_active;
    std::vector<std::string> switch_ids;
    std::vector<std::vector<double>> gate_voltage; ///< [switch][row]

    std::size_t rows() const { return t.size(); }
};

struct Event {
    double t_s = 0.0;
    std::string type;   ///< shoot_through | saturation | reverse_current
    std::string detail;
};

struct ChannelStats {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::size_t mean_samples = 0; ///< samples left after guard exclusion
};

struct WindowSummary {
    std::string label; ///< pre | during | post | w<N>
    double t0 = 0.0;
    double t1 = 0.0;
    std::map<std::string, ChannelStats> channels;
};

struct Summary {
    std::vector<WindowSummary> windows;
    std::vector<Event> events;
    double joule_heat = 0.0;     ///< trapezoidal integral of i^2 R over the run (J)
    double settling_guard = 0.0; ///< s
};

struct SimResult {
    Scenario scenario;
    Series series;
    std::vector<Event> events;
    Summary summary; ///< over the default pre/during/post windows
};

/// Deterministic fixed-step run; bitwise identical output for identical
/// scenarios. Throws DivergedError naming the first non-finite step.
SimResult run_scenario(const Scenario& scenario);

/// Per-window mean/min/max of every series channel. Means skip samples
/// within `settling_guard` after any attack edge; min/max do not.
/// Windows outside the series range throw std::out_of_range.
Summary summarize(const SimResult& result,
                  const std::vector<std::pair<double, double>>& windows);

/// Same computation on a bare series (used to recompute summaries from
/// exported CSV data).
Summary summarize_series(const Series& series, const Scenario& scenario,
                         const std::vector<std::pair<double, double>>& windows);

/// Default pre / during / post windows around the first attack, or one
/// window covering the whole run when there is none.
std::vector<std::pair<double, double>> default_windows(const Scenario& scenario);

/// One run per value of the addressed scenario field (dotted path into the
/// scenario JSON, e.g. "attacks.0.source.power"; values in SI base units).
/// Runs execute concurrently; results come back ordered by input value.
std::vector<std::pair<double, Summary>> run_sweep(const nlohmann::json& scenario_doc,
                                                  const std::string& param_path,
                                                  std::vector<double> values);

} // namespace iemisim::engine
