#pragma once

#include <cstdint>
#include <limits>
#include <optional>

namespace iemisim::adc {

/// Victim ADC front end: ESD clipping to the rails, ideal sampling at
/// sample_rate, quantization to `bits`, and a moving average over
/// averaging_window digitized codes per reported reading.
struct AdcConfig {
    double v_min = 0.0;        ///< lower rail (V)
    double v_max = 3.3;        ///< upper rail (V)
    int bits = 12;             ///< resolution, 4..24
    double sample_rate = 1e6;  ///< f_s (Hz)
    int averaging_window = 16; ///< samples per reported reading
    double sensor_gain = 1.0;  ///< physical units per volt; negative = inverting
    double sample_phase = 0.0; ///< fixed offset added to every sampling instant (s)

    std::int64_t max_code() const { return (std::int64_t{1} << bits) - 1; }
    double lsb() const { return (v_max - v_min) / static_cast<double>(max_code()); }
};

struct AdcReading {
    double mean_voltage = 0.0;   ///< averaged post-clipping voltage (V)
    double mean_code = 0.0;      ///< averaged quantized code
    double reported_value = 0.0; ///< mean_voltage * sensor_gain
};

/// Induced sinusoid as seen at the ADC input: v_i(t) = -amplitude cos(2 pi f t).
struct Tone {
    double amplitude = 0.0; ///< V_i >= 0 (V)
    double frequency = 0.0; ///< Hz
};

/// v_ADC = V_s + v_i; plain superposition, clipping happens later.
double compromised_input(double v_sensor, double v_induced);

/// Clamp to the input rails (ESD diode model).
double clip(double v, const AdcConfig& cfg);

/// code = round((v - v_min) / (v_max - v_min) * (2^bits - 1)).
/// Callers clip first; out-of-rail inputs are clamped to the code range.
std::int64_t quantize(double v, const AdcConfig& cfg);

/// Inverse transfer function, also valid for fractional (averaged) codes.
double code_to_voltage(double code, const AdcConfig& cfg);

/// Samples V_s (+ tone, if any) at f_s starting at window_start, clips,
/// quantizes, averages the codes and maps the average back to a voltage.
/// Throws std::out_of_range if the window extends past `horizon`.
AdcReading averaged_reading(double v_sensor, const std::optional<Tone>& tone,
                            const AdcConfig& cfg, double window_start,
                            double horizon = std::numeric_limits<double>::infinity());

/// Period average of clamp(V_s + V_i sin(theta), v_min, v_max), evaluated by
/// adaptive quadrature to 1e-9 V. Equals V_s + V_i/pi when V_s sits at the
/// lower rail and the upper rail is never reached.
double expected_clipped_mean(double v_sensor, double v_induced_amplitude,
                             const AdcConfig& cfg);

} // namespace iemisim::adc
