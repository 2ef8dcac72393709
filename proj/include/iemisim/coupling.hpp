#pragma once

#include <numbers>
#include <optional>

namespace iemisim::coupling {

inline constexpr double kVacuumPermeability = 4.0e-7 * std::numbers::pi; // H/m

/// Attacker radiator next to a rectangular victim loop. The radiator is
/// modeled as an infinitely long line current at distance d_a from the
/// loop's near edge; the loop spans w by l with l along the field gradient.
struct RadiatorGeometry {
    double mu = kVacuumPermeability; ///< permeability of the medium (H/m)
    double d_a = 0.0;                ///< radiator-to-loop distance (m)
    double w = 0.0;                  ///< loop width (m)
    double l = 0.0;                  ///< loop length (m)
};

/// Sinusoidal attack drive. Exactly one of amplitude_current / power is set;
/// power is converted through source_resistance when the amplitude is needed.
struct AttackSource {
    std::optional<double> amplitude_current; ///< peak current I_a (A)
    std::optional<double> power;             ///< forward RF power (W)
    double frequency = 0.0;                  ///< Hz
    double source_resistance = 50.0;         ///< ohm

    static AttackSource from_current(double peak_amps, double frequency_hz);
    static AttackSource from_power(double watts, double frequency_hz,
                                   double resistance_ohm = 50.0);
};

/// Coupling path from radiator to victim conductor. The geometry term is
/// exact for the line-current model; the resonance term is a calibrated
/// second-order bandpass standing in for the victim cable/trace resonance,
/// not a physical antenna model.
struct CouplingChannel {
    RadiatorGeometry geometry;
    double resonant_frequency = 0.0; ///< f_res (Hz)
    double quality_factor = 0.0;     ///< Q
    double peak_gain = 1.0;          ///< gain at f_res
};

/// Geometry coefficient G = mu * (w / 2pi) * ln((d_a + l) / d_a), in henry.
/// Throws std::domain_error on invalid geometry or a non-finite result.
double mutual_coupling_coefficient(const RadiatorGeometry& geometry);

/// Bandpass magnitude eta(f) = peak_gain / sqrt(1 + Q^2 (f/f_res - f_res/f)^2).
double resonance_gain(const CouplingChannel& channel, double frequency_hz);

/// Peak drive current: the stored amplitude, or sqrt(2 P / R) when the
/// source is specified by power. Throws ConfigError if neither is set.
double amplitude_from_power(const AttackSource& source);

/// Peak induced voltage V_i = G * eta(f) * 2 pi f * I_a.
double induced_amplitude(const AttackSource& source, const CouplingChannel& channel);

/// Induced waveform v_i(t) = -G * eta(f) * d/dt [I_a sin(2 pi f t)]
///                         = -V_i cos(2 pi f t).
double induced_voltage(const AttackSource& source, const CouplingChannel& channel,
                       double t_s);

} // namespace iemisim::coupling
