#pragma once

#include <string>

namespace iemisim::units {

enum class Dimension {
    Dimensionless,
    Voltage,     // base V
    Current,     // base A
    Resistance,  // base ohm
    Time,        // base s
    Frequency,   // base Hz
    Length,      // base m
    Power,       // base W
    Angle,       // base deg
    Inductance,  // base H
    Permeability // base H/m
};

/// Parses "10 ms", "72MHz", "-1 V", "0.5 ohm" or a bare number (already in
/// the base unit) into the base unit of `dim`. Throws std::invalid_argument
/// on malformed numbers or suffixes that do not belong to the dimension.
double parse_quantity(const std::string& text, Dimension dim);

const char* dimension_name(Dimension dim);

} // namespace iemisim::units
