#pragma once

#include "iemisim/adc.hpp"
#include "iemisim/coupling.hpp"
#include "iemisim/gate.hpp"
#include "iemisim/plant.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace iemisim {

enum class AttackPoint { VoltageSensor, CurrentSensor, GateSignal };
enum class AttackMode { OffsetInjection, Waveform };

const char* to_string(AttackPoint point);
const char* to_string(AttackMode mode);

/// One attack: where it couples in, at which fidelity, and when.
/// offset_injection manipulates the reading directly (sensor units);
/// waveform derives the manipulation from the RF source, coupling channel
/// and ADC front end. Windows are half-open [t_start, t_stop).
struct AttackSpec {
    AttackPoint point = AttackPoint::VoltageSensor;
    AttackMode mode = AttackMode::OffsetInjection;
    double offset = 0.0; ///< reading offset (V or A), offset_injection mode
    std::optional<coupling::AttackSource> source;   ///< waveform mode
    std::optional<coupling::CouplingChannel> channel; ///< waveform mode
    double sensor_level = 0.0; ///< victim analog level at the ADC pin (V), waveform mode
    std::string switch_id;     ///< victim switch, gate_signal point
    double t_start = 0.0;
    double t_stop = 0.0;

    bool active(double t_s) const { return t_s >= t_start && t_s < t_stop; }
};

struct ControllerConfig {
    double kp = 0.0;
    double ki = 0.0;          ///< 1/s
    double update_rate = 0.0; ///< Hz
};

struct GateSection {
    gate::GateDriverConfig driver;
    gate::BridgeTopology topology;
    std::vector<std::string> commanded_on; ///< switches held on for the whole run
};

struct Scenario {
    std::string name;
    std::string description;
    plant::OperatingPoint operating_point;
    adc::AdcConfig adc;
    ControllerConfig controller;
    double tau_p = 0.0; ///< plant time constant (s)
    std::optional<GateSection> gate;
    std::vector<AttackSpec> attacks;
    double duration = 0.0;       ///< s
    double step = 0.0;           ///< s
    std::uint64_t seed = 0;      ///< drives optional sampling-phase jitter
    bool sample_jitter = false;  ///< randomize ADC burst phase per reading
    double settling_guard = 0.015; ///< excluded from means after attack edges (s)

    std::size_t step_count() const; ///< rows = step_count() + 1
    bool any_attack_active(double t_s) const;
};

/// Parse + unit-normalize + validate. Throws ValidationError listing every
/// violated field by dotted path.
Scenario scenario_from_json(const nlohmann::json& doc);

/// Load from a file path or, when no such file exists, from the embedded
/// fixture with that name. Throws ConfigError / ValidationError.
Scenario load_scenario(const std::string& path_or_fixture);

/// Normalized echo: all quantities in SI base units, plain numbers.
nlohmann::json scenario_to_json(const Scenario& scenario);

/// Re-runs invariant checks on an already-built scenario.
void validate_scenario(const Scenario& scenario);

} // namespace iemisim
