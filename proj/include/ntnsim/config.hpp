#pragma once

#include <string>
#include <vector>

#include "ntnsim/geometry.hpp"
#include "ntnsim/pdcp.hpp"
#include "ntnsim/phy_mac.hpp"

namespace ntnsim {

struct SatelliteConfig {
    double start_lat_deg = 0.0;
    double start_lon_deg = 0.0;
};

struct LinkBudgetConfig {
    double eirp_dbm = 78.0; // toward the user, per 10 MHz beam
    double g_rx_dbi = 0.0;
    double noise_figure_db = 7.0;
    double ambient_temperature_k = 290.0;
    double pl_gas_db = 0.0;   // negligible at S-band
    double pl_scint_db = 0.0; // negligible at S-band
};

struct ModcodConfig {
    double bler_midpoint_sinr_db = 0.0;
    double bler_slope_per_db = 1.0;
};

struct TrafficConfig {
    double cbr_packet_bytes = 32.0;
    double cbr_interval_ms = 20.0;
    std::string cbr_phase = "zero"; // zero | random
};

struct PdConfig {
    std::string mode = "harq_timer"; // off | blind | harq_timer
    double dup_timer_ms = 50.0;
};

struct ReorderConfig {
    std::string mode = "out_of_order"; // out_of_order | in_order
    double t_reordering_ms = 0.0;
    bool infinite = false;
};

struct HarqConfig {
    int max_retx = 1;
    double processing_delay_ms = 4.0;
    double slot_ms = 1.0;
};

struct WraparoundConfigFile {
    std::vector<int> ring_beams{6, 12};
    std::vector<double> ring_isolation_db{30.0, 40.0};
};

// Every scenario parameter as a typed field; unset fields take the shipped
// defaults (two-satellite rural S-band scenario).
struct ScenarioConfig {
    double simulation_time_s = 10.0;
    double warmup_s = 0.5;

    std::vector<SatelliteConfig> satellites{{62.38, 20.00}, {61.38, 20.00}};
    double orbit_altitude_m = 600e3;
    double satellite_speed_mps = 7560.0;

    double beam_target_lat_deg = 62.25;
    double beam_target_lon_deg = 25.74;
    int ue_count = 10;
    double ue_placement_radius_m = 30e3;

    std::string scenario_label = "rural";
    double bandwidth_hz = 10e6;
    int frf = 3;
    double carrier_hz = 2e9;
    std::string ue_antenna = "omnidirectional";

    WraparoundConfigFile wraparound;
    LinkBudgetConfig link_budget;
    ModcodConfig modcod;
    TrafficConfig traffic;

    double sn_offset_db = 10.0;
    double xn_delay_ms = 2.0;
    double measurement_period_ms = 200.0;

    HarqConfig harq;
    PdConfig pd;
    ReorderConfig reorder;

    std::string scheduler = "round_robin";
    int rng_runs = 80;

    std::string channel_table = "builtin:rural-sband";
    double mobility_tick_ms = 10.0;
    double los_cube_side_m = 3500.0;

    PdMode pd_mode() const;
    ReorderMode reorder_mode() const;
    DuplicationPolicy duplication_policy() const;
    WraparoundConfig wraparound_model() const;
};

// Parses and validates a config file; unknown keys are rejected and every
// violation names the offending key. Missing keys keep their defaults.
ScenarioConfig load_config(const std::string& path);

// Parse from JSON text (used by load_config and tests).
ScenarioConfig parse_config(const std::string& json_text);

std::string serialize_config(const ScenarioConfig& config);

// Invariant checks shared by load and CLI overrides. Throws
// std::invalid_argument naming the key.
void validate_config(const ScenarioConfig& config);

} // namespace ntnsim
