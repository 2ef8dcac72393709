#pragma once

namespace iemisim::plant {

/// DC operating point of the converter output stage and battery.
struct OperatingPoint {
    double v_bat = 0.0;      ///< battery EMF (V)
    double r_bat = 0.0;      ///< battery series resistance (ohm)
    double v_out_ref = 0.0;  ///< CV setpoint (V)
    double phi_grid_deg = 0; ///< grid phase angle; carried, not used at DC
    double v_p = 0.0;        ///< positive input rail (V)
    double v_n = 0.0;        ///< negative input rail (V)

    double bus_voltage() const { return v_p + v_n; }
};

/// PI constant-voltage regulator state. Anti-windup freezes the integrator
/// while the duty command is saturated and the error would push it further in.
struct ControllerState {
    double kp = 0.0;
    double ki = 0.0;          ///< 1/s
    double integrator = 0.0;  ///< accumulated error (V s)
    double d_mag = 0.0;       ///< commanded duty magnitude, clamped [0, 1]
    double update_rate = 0.0; ///< control frequency (Hz)
};

/// Averaged output stage: v_out relaxes toward d_mag * (V_p + V_n) with time
/// constant tau_p; battery current follows algebraically.
struct PlantState {
    double v_out = 0.0;      ///< output voltage (V)
    double i_out = 0.0;      ///< battery current (A)
    double joule_heat = 0.0; ///< accumulated battery dissipation (J)
    double tau_p = 0.0;      ///< output filter time constant (s)
};

ControllerState controller_step(ControllerState state, double v_sense,
                                const OperatingPoint& op, double dt);

/// Explicit step; throws ConfigError unless dt <= tau_p / 10.
PlantState plant_step(PlantState state, double d_mag, const OperatingPoint& op,
                      double dt);

double steady_state_current(double v_out, const OperatingPoint& op);

} // namespace iemisim::plant
