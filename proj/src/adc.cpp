#include "iemisim/adc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace iemisim::adc {

namespace {

// Recursive adaptive Simpson quadrature.
double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

constexpr int kMaxDepth = 48;

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    // The first few levels split unconditionally so clipping kinks cannot
    // hide between the initial sample points.
    const bool may_accept = depth < kMaxDepth - 4;
    if (depth <= 0 || (may_accept && std::abs(delta) <= 15.0 * tol)) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    return adaptive_simpson(f, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol,
                            kMaxDepth);
}

} // namespace

double compromised_input(double v_sensor, double v_induced) {
    return v_sensor + v_induced;
}

double clip(double v, const AdcConfig& cfg) {
    return std::min(std::max(v, cfg.v_min), cfg.v_max);
}

std::int64_t quantize(double v, const AdcConfig& cfg) {
    const double normalized = (v - cfg.v_min) / (cfg.v_max - cfg.v_min);
    const auto code = std::llround(normalized * static_cast<double>(cfg.max_code()));
    return std::clamp<std::int64_t>(code, 0, cfg.max_code());
}

double code_to_voltage(double code, const AdcConfig& cfg) {
    return cfg.v_min + code / static_cast<double>(cfg.max_code()) * (cfg.v_max - cfg.v_min);
}

AdcReading averaged_reading(double v_sensor, const std::optional<Tone>& tone,
                            const AdcConfig& cfg, double window_start,
                            double horizon) {
    const int window = cfg.averaging_window;
    const double sample_dt = 1.0 / cfg.sample_rate;
    const double last_sample = window_start + cfg.sample_phase + (window - 1) * sample_dt;
    if (last_sample > horizon) {
        throw std::out_of_range("averaging window extends past the simulation horizon");
    }

    const double omega = tone ? 2.0 * std::numbers::pi * tone->frequency : 0.0;
    std::int64_t code_sum = 0;
    for (int j = 0; j < window; ++j) {
        const double t = window_start + cfg.sample_phase + j * sample_dt;
        double v = v_sensor;
        if (tone) {
            v = compromised_input(v_sensor, -tone->amplitude * std::cos(omega * t));
        }
        code_sum += quantize(clip(v, cfg), cfg);
    }

    AdcReading reading;
    reading.mean_code = static_cast<double>(code_sum) / window;
    reading.mean_voltage = code_to_voltage(reading.mean_code, cfg);
    reading.reported_value = reading.mean_voltage * cfg.sensor_gain;
    return reading;
}

double expected_clipped_mean(double v_sensor, double v_induced_amplitude,
                             const AdcConfig& cfg) {
    if (v_induced_amplitude < 0.0) {
        throw std::domain_error("expected_clipped_mean requires V_i >= 0");
    }
    if (v_induced_amplitude == 0.0) {
        return clip(v_sensor, cfg);
    }
    const auto clipped = [&](double theta) {
        return clip(v_sensor + v_induced_amplitude * std::sin(theta), cfg);
    };
    const double period = 2.0 * std::numbers::pi;
    return integrate(clipped, 0.0, period, 1e-9) / period;
}

} // namespace iemisim::adc
