#include "ntnsim/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ntnsim {

using nlohmann::json;

PdMode ScenarioConfig::pd_mode() const
{
    return pd_mode_from_string(pd.mode);
}

ReorderMode ScenarioConfig::reorder_mode() const
{
    if (reorder.mode == "out_of_order") return ReorderMode::OutOfOrder;
    if (reorder.mode == "in_order") return ReorderMode::InOrder;
    throw std::invalid_argument("reorder.mode: expected out_of_order|in_order, got '" +
                                reorder.mode + "'");
}

DuplicationPolicy ScenarioConfig::duplication_policy() const
{
    return DuplicationPolicy{pd_mode(), ms_to_ns(pd.dup_timer_ms)};
}

WraparoundConfig ScenarioConfig::wraparound_model() const
{
    return WraparoundConfig{wraparound.ring_beams, wraparound.ring_isolation_db, frf};
}

namespace {

// Reads known keys from `section`, recording consumed names so leftovers
// can be rejected.
class SectionReader {
public:
    SectionReader(json section, std::string prefix)
        : section_(std::move(section)), prefix_(std::move(prefix))
    {
    }

    template <typename T>
    void get(const char* key, T& out)
    {
        consumed_.insert(key);
        if (auto it = section_.find(key); it != section_.end()) {
            try {
                out = it->get<T>();
            } catch (const json::exception&) {
                throw std::invalid_argument("config key '" + prefix_ + key +
                                            "' has the wrong type");
            }
        }
    }

    void mark(const char* key) { consumed_.insert(key); }

    json sub(const char* key)
    {
        consumed_.insert(key);
        if (auto it = section_.find(key); it != section_.end()) {
            if (!it->is_object()) {
                throw std::invalid_argument("config key '" + prefix_ + key +
                                            "' must be an object");
            }
            return *it;
        }
        return json::object();
    }

    void finish() const
    {
        for (const auto& [key, value] : section_.items()) {
            if (!consumed_.contains(key)) {
                throw std::invalid_argument("unknown config key '" + prefix_ + key + "'");
            }
        }
    }

private:
    json section_;
    std::string prefix_;
    std::set<std::string> consumed_;
};

} // namespace

ScenarioConfig parse_config(const std::string& json_text)
{
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    if (!root.is_object()) {
        throw std::invalid_argument("config root must be an object");
    }

    ScenarioConfig cfg;
    SectionReader top(root, "");

    top.get("simulation_time_s", cfg.simulation_time_s);
    top.get("warmup_s", cfg.warmup_s);
    top.get("orbit_altitude_m", cfg.orbit_altitude_m);
    top.get("satellite_speed_mps", cfg.satellite_speed_mps);
    top.get("beam_target_lat_deg", cfg.beam_target_lat_deg);
    top.get("beam_target_lon_deg", cfg.beam_target_lon_deg);
    top.get("ue_count", cfg.ue_count);
    top.get("ue_placement_radius_m", cfg.ue_placement_radius_m);
    top.get("scenario_label", cfg.scenario_label);
    top.get("bandwidth_hz", cfg.bandwidth_hz);
    top.get("frf", cfg.frf);
    top.get("carrier_hz", cfg.carrier_hz);
    top.get("ue_antenna", cfg.ue_antenna);
    top.get("sn_offset_db", cfg.sn_offset_db);
    top.get("xn_delay_ms", cfg.xn_delay_ms);
    top.get("measurement_period_ms", cfg.measurement_period_ms);
    top.get("scheduler", cfg.scheduler);
    top.get("rng_runs", cfg.rng_runs);
    top.get("channel_table", cfg.channel_table);
    top.get("mobility_tick_ms", cfg.mobility_tick_ms);
    top.get("los_cube_side_m", cfg.los_cube_side_m);

    {
        top.mark("satellites");
        if (root.contains("satellites")) {
            if (!root["satellites"].is_array()) {
                throw std::invalid_argument("config key 'satellites' must be an array");
            }
            cfg.satellites.clear();
            for (std::size_t i = 0; i < root["satellites"].size(); ++i) {
                SectionReader sat(root["satellites"][i],
                                  "satellites[" + std::to_string(i) + "].");
                SatelliteConfig sc;
                sat.get("start_lat_deg", sc.start_lat_deg);
                sat.get("start_lon_deg", sc.start_lon_deg);
                sat.finish();
                cfg.satellites.push_back(sc);
            }
        }
    }

    {
        SectionReader s(top.sub("wraparound"), "wraparound.");
        s.get("ring_beams", cfg.wraparound.ring_beams);
        s.get("ring_isolation_db", cfg.wraparound.ring_isolation_db);
        s.finish();
    }
    {
        SectionReader s(top.sub("link_budget"), "link_budget.");
        s.get("eirp_dbm", cfg.link_budget.eirp_dbm);
        s.get("g_rx_dbi", cfg.link_budget.g_rx_dbi);
        s.get("noise_figure_db", cfg.link_budget.noise_figure_db);
        s.get("ambient_temperature_k", cfg.link_budget.ambient_temperature_k);
        s.get("pl_gas_db", cfg.link_budget.pl_gas_db);
        s.get("pl_scint_db", cfg.link_budget.pl_scint_db);
        s.finish();
    }
    {
        SectionReader s(top.sub("modcod"), "modcod.");
        s.get("bler_midpoint_sinr_db", cfg.modcod.bler_midpoint_sinr_db);
        s.get("bler_slope_per_db", cfg.modcod.bler_slope_per_db);
        s.finish();
    }
    {
        SectionReader s(top.sub("traffic"), "traffic.");
        s.get("cbr_packet_bytes", cfg.traffic.cbr_packet_bytes);
        s.get("cbr_interval_ms", cfg.traffic.cbr_interval_ms);
        s.get("cbr_phase", cfg.traffic.cbr_phase);
        s.finish();
    }
    {
        SectionReader s(top.sub("harq"), "harq.");
        s.get("max_retx", cfg.harq.max_retx);
        s.get("processing_delay_ms", cfg.harq.processing_delay_ms);
        s.get("slot_ms", cfg.harq.slot_ms);
        s.finish();
    }
    {
        SectionReader s(top.sub("pd"), "pd.");
        s.get("mode", cfg.pd.mode);
        s.get("dup_timer_ms", cfg.pd.dup_timer_ms);
        s.finish();
    }
    {
        SectionReader s(top.sub("reorder"), "reorder.");
        s.get("mode", cfg.reorder.mode);
        s.get("t_reordering_ms", cfg.reorder.t_reordering_ms);
        s.get("infinite", cfg.reorder.infinite);
        s.finish();
    }

    top.finish();

    validate_config(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("config: cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const ScenarioConfig& c)
{
    json root;
    root["simulation_time_s"] = c.simulation_time_s;
    root["warmup_s"] = c.warmup_s;
    root["satellites"] = json::array();
    for (const SatelliteConfig& sat : c.satellites) {
        root["satellites"].push_back(
            {{"start_lat_deg", sat.start_lat_deg}, {"start_lon_deg", sat.start_lon_deg}});
    }
    root["orbit_altitude_m"] = c.orbit_altitude_m;
    root["satellite_speed_mps"] = c.satellite_speed_mps;
    root["beam_target_lat_deg"] = c.beam_target_lat_deg;
    root["beam_target_lon_deg"] = c.beam_target_lon_deg;
    root["ue_count"] = c.ue_count;
    root["ue_placement_radius_m"] = c.ue_placement_radius_m;
    root["scenario_label"] = c.scenario_label;
    root["bandwidth_hz"] = c.bandwidth_hz;
    root["frf"] = c.frf;
    root["carrier_hz"] = c.carrier_hz;
    root["ue_antenna"] = c.ue_antenna;
    root["wraparound"] = {{"ring_beams", c.wraparound.ring_beams},
                          {"ring_isolation_db", c.wraparound.ring_isolation_db}};
    root["link_budget"] = {{"eirp_dbm", c.link_budget.eirp_dbm},
                           {"g_rx_dbi", c.link_budget.g_rx_dbi},
                           {"noise_figure_db", c.link_budget.noise_figure_db},
                           {"ambient_temperature_k", c.link_budget.ambient_temperature_k},
                           {"pl_gas_db", c.link_budget.pl_gas_db},
                           {"pl_scint_db", c.link_budget.pl_scint_db}};
    root["modcod"] = {{"bler_midpoint_sinr_db", c.modcod.bler_midpoint_sinr_db},
                      {"bler_slope_per_db", c.modcod.bler_slope_per_db}};
    root["traffic"] = {{"cbr_packet_bytes", c.traffic.cbr_packet_bytes},
                       {"cbr_interval_ms", c.traffic.cbr_interval_ms},
                       {"cbr_phase", c.traffic.cbr_phase}};
    root["sn_offset_db"] = c.sn_offset_db;
    root["xn_delay_ms"] = c.xn_delay_ms;
    root["measurement_period_ms"] = c.measurement_period_ms;
    root["harq"] = {{"max_retx", c.harq.max_retx},
                    {"processing_delay_ms", c.harq.processing_delay_ms},
                    {"slot_ms", c.harq.slot_ms}};
    root["pd"] = {{"mode", c.pd.mode}, {"dup_timer_ms", c.pd.dup_timer_ms}};
    root["reorder"] = {{"mode", c.reorder.mode},
                       {"t_reordering_ms", c.reorder.t_reordering_ms},
                       {"infinite", c.reorder.infinite}};
    root["scheduler"] = c.scheduler;
    root["rng_runs"] = c.rng_runs;
    root["channel_table"] = c.channel_table;
    root["mobility_tick_ms"] = c.mobility_tick_ms;
    root["los_cube_side_m"] = c.los_cube_side_m;
    return root.dump(2) + "\n";
}

namespace {

void require(bool ok, const char* message)
{
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

} // namespace

void validate_config(const ScenarioConfig& c)
{
    require(c.simulation_time_s > 0.0, "simulation_time_s must be > 0");
    require(c.warmup_s >= 0.0, "warmup_s must be >= 0");
    require(c.warmup_s < c.simulation_time_s, "warmup_s must be < simulation_time_s");
    require(!c.satellites.empty(), "satellites must be non-empty");
    for (const SatelliteConfig& sat : c.satellites) {
        require(sat.start_lat_deg >= -90.0 && sat.start_lat_deg <= 90.0,
                "satellites[].start_lat_deg must be in [-90, 90]");
        require(sat.start_lon_deg >= -180.0 && sat.start_lon_deg < 180.0,
                "satellites[].start_lon_deg must be in [-180, 180)");
    }
    require(c.orbit_altitude_m > 0.0, "orbit_altitude_m must be > 0");
    require(c.satellite_speed_mps > 0.0, "satellite_speed_mps must be > 0");
    require(c.ue_count > 0, "ue_count must be > 0");
    require(c.ue_placement_radius_m > 0.0, "ue_placement_radius_m must be > 0");
    require(c.bandwidth_hz > 0.0, "bandwidth_hz must be > 0");
    require(c.frf == 1 || c.frf == 3, "frf must be 1 or 3");
    require(c.carrier_hz > 0.0, "carrier_hz must be > 0");
    require(c.wraparound.ring_beams.size() == c.wraparound.ring_isolation_db.size(),
            "wraparound.ring_beams and wraparound.ring_isolation_db must match in length");
    require(c.modcod.bler_slope_per_db > 0.0, "modcod.bler_slope_per_db must be > 0");
    require(c.traffic.cbr_packet_bytes > 0.0, "traffic.cbr_packet_bytes must be > 0");
    require(c.traffic.cbr_interval_ms > 0.0, "traffic.cbr_interval_ms must be > 0");
    require(c.traffic.cbr_phase == "zero" || c.traffic.cbr_phase == "random",
            "traffic.cbr_phase must be zero or random");
    require(c.xn_delay_ms >= 0.0, "xn_delay_ms must be >= 0");
    require(c.measurement_period_ms > 0.0, "measurement_period_ms must be > 0");
    require(c.harq.max_retx == 1, "harq.max_retx must be 1 (one retransmission)");
    require(c.harq.processing_delay_ms >= 0.0, "harq.processing_delay_ms must be >= 0");
    require(c.harq.slot_ms > 0.0, "harq.slot_ms must be > 0");
    pd_mode_from_string(c.pd.mode); // throws with the key name on bad values
    if (c.pd.mode == "harq_timer") {
        require(c.pd.dup_timer_ms > 0.0, "pd.dup_timer_ms must be > 0 in harq_timer mode");
    }
    require(c.reorder.mode == "out_of_order" || c.reorder.mode == "in_order",
            "reorder.mode must be out_of_order or in_order");
    if (!reorder_window_valid(c.reorder.t_reordering_ms / 1e3, c.reorder.infinite)) {
        throw std::invalid_argument(
            "reorder.t_reordering_ms must be 0, in (0, 3000], or infinite");
    }
    if (c.reorder.mode == "out_of_order") {
        require(!c.reorder.infinite && c.reorder.t_reordering_ms == 0.0,
                "reorder.t_reordering_ms must be 0 in out_of_order mode");
    }
    require(c.scheduler == "round_robin", "scheduler must be round_robin");
    require(c.rng_runs > 0, "rng_runs must be > 0");
    require(c.mobility_tick_ms > 0.0, "mobility_tick_ms must be > 0");
    require(c.los_cube_side_m > 0.0, "los_cube_side_m must be > 0");
}

} // namespace ntnsim
