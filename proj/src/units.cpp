#include "iemisim/units.hpp"

#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace iemisim::units {

namespace {

struct UnitEntry {
    const char* suffix;
    double factor;
};

const std::vector<UnitEntry>& table(Dimension dim) {
    static const std::vector<UnitEntry> voltage{
        {"V", 1.0}, {"mV", 1e-3}, {"uV", 1e-6}, {"kV", 1e3}};
    static const std::vector<UnitEntry> current{
        {"A", 1.0}, {"mA", 1e-3}, {"uA", 1e-6}, {"kA", 1e3}};
    static const std::vector<UnitEntry> resistance{
        {"ohm", 1.0}, {"Ohm", 1.0}, {"mohm", 1e-3}, {"kohm", 1e3}, {"Mohm", 1e6}};
    static const std::vector<UnitEntry> time{
        {"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}};
    static const std::vector<UnitEntry> frequency{
        {"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}};
    static const std::vector<UnitEntry> length{
        {"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}};
    static const std::vector<UnitEntry> power{
        {"W", 1.0}, {"mW", 1e-3}, {"uW", 1e-6}, {"kW", 1e3}};
    static const std::vector<UnitEntry> angle{
        {"deg", 1.0}, {"rad", 180.0 / std::numbers::pi}};
    static const std::vector<UnitEntry> inductance{
        {"H", 1.0}, {"mH", 1e-3}, {"uH", 1e-6}, {"nH", 1e-9}, {"pH", 1e-12}};
    static const std::vector<UnitEntry> permeability{{"H/m", 1.0}};
    static const std::vector<UnitEntry> none{};

    switch (dim) {
        case Dimension::Voltage: return voltage;
        case Dimension::Current: return current;
        case Dimension::Resistance: return resistance;
        case Dimension::Time: return time;
        case Dimension::Frequency: return frequency;
        case Dimension::Length: return length;
        case Dimension::Power: return power;
        case Dimension::Angle: return angle;
        case Dimension::Inductance: return inductance;
        case Dimension::Permeability: return permeability;
        case Dimension::Dimensionless: return none;
    }
    return none;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

} // namespace

const char* dimension_name(Dimension dim) {
    switch (dim) {
        case Dimension::Voltage: return "voltage";
        case Dimension::Current: return "current";
        case Dimension::Resistance: return "resistance";
        case Dimension::Time: return "time";
        case Dimension::Frequency: return "frequency";
        case Dimension::Length: return "length";
        case Dimension::Power: return "power";
        case Dimension::Angle: return "angle";
        case Dimension::Inductance: return "inductance";
        case Dimension::Permeability: return "permeability";
        case Dimension::Dimensionless: return "dimensionless";
    }
    return "unknown";
}

double parse_quantity(const std::string& text, Dimension dim) {
    const std::string s = trim(text);
    if (s.empty()) {
        throw std::invalid_argument("empty quantity");
    }

    const char* begin = s.c_str();
    char* numeric_end = nullptr;
    const double value = std::strtod(begin, &numeric_end);
    if (numeric_end == begin) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }

    const std::string suffix = trim(s.substr(numeric_end - begin));
    if (suffix.empty()) {
        return value; // bare number, already in the base unit
    }

    for (const auto& entry : table(dim)) {
        if (suffix == entry.suffix) {
            return value * entry.factor;
        }
    }
    throw std::invalid_argument("unit '" + suffix + "' is not a " +
                                dimension_name(dim) + " unit (in '" + text + "')");
}

} // namespace iemisim::units
