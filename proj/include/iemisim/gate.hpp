#pragma once

#include "iemisim/coupling.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace iemisim::gate {

/// How the driver input stage reacts to an RF tone far above its bandwidth:
/// `Instantaneous` compares the raw superposed input against the threshold at
/// each evaluation instant, `Envelope` compares against the commanded level
/// plus the tone's positive envelope (input-stage rectification).
enum class ResponseMode { Instantaneous, Envelope };

struct GateDriverConfig {
    double v_th = 2.0;         ///< input logic threshold (V)
    double v_on = 18.0;        ///< gate output when on (V)
    double v_off = -3.0;       ///< gate output when off (V)
    double logic_level = 3.3;  ///< controller logic high (V)
    ResponseMode response_mode = ResponseMode::Envelope;
    double min_dwell = 0.0;    ///< minimum output dwell time (s)
};

struct SwitchState {
    std::string id;
    bool commanded = false;
    bool actual = false;
    double gate_voltage = 0.0; ///< V_G
    double last_change_t = -1e300; ///< time of the last actual transition (s)
};

/// Complementary switch pairs of one bridge; 4 legs for the 3LAFB,
/// 6 for the unfolder.
struct BridgeTopology {
    std::vector<std::pair<std::string, std::string>> legs;

    std::size_t switch_count() const { return 2 * legs.size(); }
};

/// Throws std::invalid_argument on duplicate / self-paired switch ids.
void validate_topology(const BridgeTopology& topology);

/// Advances one switch given the commanded driver input plus the induced
/// waveform over this step. v_induced is the instantaneous value at t,
/// v_envelope the tone's positive envelope (0 when no attack is active).
SwitchState gate_response(const GateDriverConfig& cfg, SwitchState state,
                          double commanded_v_in, double v_induced,
                          double v_envelope, double t_s);

/// Smallest attack current satisfying G * eta(f) * 2 pi f * I_a > V_th.
/// Throws std::domain_error when the coupling path is degenerate (no finite
/// current can reach the threshold).
double false_turnon_threshold(const GateDriverConfig& cfg,
                              const coupling::CouplingChannel& channel,
                              double frequency_hz);

struct ShootThroughEvent {
    double t_s = 0.0;
    std::size_t leg_index = 0;
    std::string high_side;
    std::string low_side;
};

/// Legs whose two switches conduct simultaneously right now. States must
/// cover every switch of the topology; unknown or missing ids throw
/// std::invalid_argument.
std::vector<ShootThroughEvent> detect_shoot_through(
    const BridgeTopology& topology, const std::vector<SwitchState>& states,
    double t_s);

} // namespace iemisim::gate
