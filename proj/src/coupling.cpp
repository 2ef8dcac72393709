#include "iemisim/coupling.hpp"

#include "iemisim/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace iemisim::coupling {

AttackSource AttackSource::from_current(double peak_amps, double frequency_hz) {
    AttackSource s;
    s.amplitude_current = peak_amps;
    s.frequency = frequency_hz;
    return s;
}

AttackSource AttackSource::from_power(double watts, double frequency_hz,
                                      double resistance_ohm) {
    AttackSource s;
    s.power = watts;
    s.frequency = frequency_hz;
    s.source_resistance = resistance_ohm;
    return s;
}

double mutual_coupling_coefficient(const RadiatorGeometry& g) {
    if (!(g.mu > 0.0) || !(g.d_a > 0.0) || !(g.w > 0.0) || !(g.l > 0.0)) {
        throw std::domain_error("radiator geometry requires mu, d_a, w, l > 0");
    }
    const double coefficient =
        g.mu * (g.w / (2.0 * std::numbers::pi)) * std::log((g.d_a + g.l) / g.d_a);
    if (!std::isfinite(coefficient)) {
        throw std::domain_error("coupling coefficient is not finite");
    }
    return coefficient;
}

double resonance_gain(const CouplingChannel& channel, double frequency_hz) {
    if (!(frequency_hz > 0.0)) {
        throw std::domain_error("resonance gain requires f > 0");
    }
    const double ratio = frequency_hz / channel.resonant_frequency;
    const double detune = ratio - 1.0 / ratio;
    return channel.peak_gain /
           std::sqrt(1.0 + channel.quality_factor * channel.quality_factor * detune * detune);
}

double amplitude_from_power(const AttackSource& source) {
    if (source.amplitude_current) {
        return *source.amplitude_current;
    }
    if (source.power) {
        if (!(source.source_resistance > 0.0)) {
            throw ConfigError("attack source: source_resistance must be > 0");
        }
        return std::sqrt(2.0 * *source.power / source.source_resistance);
    }
    throw ConfigError("attack source: neither amplitude_current nor power is set");
}

double induced_amplitude(const AttackSource& source, const CouplingChannel& channel) {
    const double coefficient = mutual_coupling_coefficient(channel.geometry);
    const double gain = resonance_gain(channel, source.frequency);
    const double peak_current = amplitude_from_power(source);
    return coefficient * gain * 2.0 * std::numbers::pi * source.frequency * peak_current;
}

double induced_voltage(const AttackSource& source, const CouplingChannel& channel,
                       double t_s) {
    const double amplitude = induced_amplitude(source, channel);
    return -amplitude * std::cos(2.0 * std::numbers::pi * source.frequency * t_s);
}

} // namespace iemisim::coupling
