#include "iemisim/gate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace iemisim::gate {

void validate_topology(const BridgeTopology& topology) {
    std::unordered_set<std::string> seen;
    for (const auto& [high, low] : topology.legs) {
        if (high == low) {
            throw std::invalid_argument("bridge leg pairs a switch with itself: " + high);
        }
        if (!seen.insert(high).second) {
            throw std::invalid_argument("switch appears in more than one leg: " + high);
        }
        if (!seen.insert(low).second) {
            throw std::invalid_argument("switch appears in more than one leg: " + low);
        }
    }
}

SwitchState gate_response(const GateDriverConfig& cfg, SwitchState state,
                          double commanded_v_in, double v_induced,
                          double v_envelope, double t_s) {
    const double effective = cfg.response_mode == ResponseMode::Envelope
                                 ? commanded_v_in + v_envelope
                                 : commanded_v_in + v_induced;
    const bool want_on = effective > cfg.v_th;

    if (want_on != state.actual) {
        const bool dwell_ok = t_s - state.last_change_t >= cfg.min_dwell;
        if (dwell_ok) {
            state.actual = want_on;
            state.last_change_t = t_s;
        }
    }
    state.gate_voltage = state.actual ? cfg.v_on : cfg.v_off;
    return state;
}

double false_turnon_threshold(const GateDriverConfig& cfg,
                              const coupling::CouplingChannel& channel,
                              double frequency_hz) {
    const double coefficient = coupling::mutual_coupling_coefficient(channel.geometry);
    const double gain = coupling::resonance_gain(channel, frequency_hz);
    const double volts_per_amp =
        coefficient * gain * 2.0 * std::numbers::pi * frequency_hz;
    if (!(volts_per_amp > 0.0) || !std::isfinite(volts_per_amp)) {
        throw std::domain_error("coupling path has zero gain; no finite turn-on threshold");
    }
    return cfg.v_th / volts_per_amp;
}

std::vector<ShootThroughEvent> detect_shoot_through(
    const BridgeTopology& topology, const std::vector<SwitchState>& states,
    double t_s) {
    std::unordered_map<std::string, const SwitchState*> by_id;
    for (const auto& state : states) {
        by_id[state.id] = &state;
    }

    std::unordered_set<std::string> known;
    for (const auto& [high, low] : topology.legs) {
        known.insert(high);
        known.insert(low);
    }
    for (const auto& state : states) {
        if (!known.count(state.id)) {
            throw std::invalid_argument("switch id not in topology: " + state.id);
        }
    }

    std::vector<ShootThroughEvent> events;
    for (std::size_t leg = 0; leg < topology.legs.size(); ++leg) {
        const auto& [high, low] = topology.legs[leg];
        const auto hi = by_id.find(high);
        const auto lo = by_id.find(low);
        if (hi == by_id.end() || lo == by_id.end()) {
            throw std::invalid_argument("states do not cover leg " + high + "/" + low);
        }
        if (hi->second->actual && lo->second->actual) {
            events.push_back({t_s, leg, high, low});
        }
    }
    return events;
}

} // namespace iemisim::gate
