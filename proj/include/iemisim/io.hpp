#pragma once

#include "iemisim/engine.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <string>

namespace iemisim::io {

/// Shortest representation that parses back to the identical double.
std::string format_double(double value);

/// Header: time_s,v_out_V,v_sense_V,i_out_A,d_mag,attack_active, then one
/// vG_<id>_V column per switch. '.' decimal point, '\n' line endings,
/// round-trippable full precision.
void write_timeseries_csv(const engine::SimResult& result, std::ostream& out);

/// Parses a CSV produced by write_timeseries_csv back into a Series.
engine::Series read_timeseries_csv(std::istream& in);

nlohmann::json summary_to_json(const engine::Summary& summary,
                               const Scenario& scenario);

/// Writes timeseries.csv and summary.json into `dir` (created if missing).
/// Throws ConfigError when the directory is not writable.
void emit_results(const engine::SimResult& result, const std::string& dir);

} // namespace iemisim::io
