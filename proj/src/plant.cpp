#include "iemisim/plant.hpp"

#include "iemisim/errors.hpp"

#include <algorithm>

namespace iemisim::plant {

ControllerState controller_step(ControllerState state, double v_sense,
                                const OperatingPoint& op, double dt) {
    const double error = op.v_out_ref - v_sense;

    // Conditional integration: hold the integrator whenever the unsaturated
    // command is already pinned and the error would drive it further in.
    const double unsaturated = state.kp * error + state.ki * state.integrator;
    const bool windup_high = unsaturated >= 1.0 && error > 0.0;
    const bool windup_low = unsaturated <= 0.0 && error < 0.0;
    if (!windup_high && !windup_low) {
        state.integrator += error * dt;
    }

    state.d_mag = std::clamp(state.kp * error + state.ki * state.integrator, 0.0, 1.0);
    return state;
}

PlantState plant_step(PlantState state, double d_mag, const OperatingPoint& op,
                      double dt) {
    if (!(dt > 0.0) || dt > state.tau_p / 10.0) {
        throw ConfigError("plant step requires 0 < dt <= tau_p / 10");
    }

    const double v_cmd = d_mag * op.bus_voltage();
    const double i_before = (state.v_out - op.v_bat) / op.r_bat;

    state.v_out += dt * (v_cmd - state.v_out) / state.tau_p;
    state.i_out = (state.v_out - op.v_bat) / op.r_bat;

    // Trapezoidal accumulation keeps the total consistent with integrating
    // the recorded series.
    state.joule_heat +=
        0.5 * dt * op.r_bat * (i_before * i_before + state.i_out * state.i_out);
    return state;
}

double steady_state_current(double v_out, const OperatingPoint& op) {
    return (v_out - op.v_bat) / op.r_bat;
}

} // namespace iemisim::plant
