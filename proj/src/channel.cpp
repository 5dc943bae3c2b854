#include "ntnsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ntnsim {

double fspl_db(double d_m, double f_hz)
{
    if (d_m <= 0.0 || f_hz <= 0.0) {
        throw std::domain_error("fspl: distance and frequency must be positive");
    }
    return 20.0 * std::log10(4.0 * std::numbers::pi * d_m * f_hz / kSpeedOfLightMps);
}

double total_path_loss_db(double pl_b_db, double pl_g_db, double pl_s_db)
{
    return pl_b_db + pl_g_db + pl_s_db;
}

double noise_power_dbm(const LinkBudgetParams& params)
{
    constexpr double kBoltzmann = 1.380649e-23; // J/K
    const double noise_w = kBoltzmann * params.ambient_temperature_k * params.bandwidth_hz;
    return 10.0 * std::log10(noise_w * 1e3) + params.noise_figure_db;
}

double received_power_dbm(const LinkBudgetParams& params, double pl_db)
{
    return params.eirp_dbm + params.g_rx_dbi - pl_db;
}

ChannelTable ChannelTable::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("channel table: cannot open " + path);
    }
    ChannelTable table;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        std::string scenario;
        double elevation;
        ChannelRow row;
        char comma;
        if (!std::getline(fields, scenario, ',') ||
            !(fields >> elevation >> comma >> row.p_los >> comma >>
              row.sigma_sf_los_db >> comma >> row.sigma_sf_nlos_db >> comma >> row.cl_db)) {
            throw std::runtime_error("channel table: malformed line in " + path + ": " + line);
        }
        scenario.erase(0, scenario.find_first_not_of(" \t"));
        scenario.erase(scenario.find_last_not_of(" \t") + 1);
        if (table.scenario_.empty()) {
            table.scenario_ = scenario;
        } else if (table.scenario_ != scenario) {
            throw std::runtime_error("channel table: mixed scenarios in " + path);
        }
        table.rows_[static_cast<int>(std::lround(elevation))] = row;
    }
    if (table.rows_.empty()) {
        throw std::runtime_error("channel table: no rows in " + path);
    }
    return table;
}

ChannelTable ChannelTable::rural_s_band()
{
    // Rural scenario, S-band. LOS probabilities from TR 38.811 Table
    // 6.6.1-1; sigma_SF and CL from Table 6.6.2-3.
    ChannelTable table;
    table.scenario_ = "rural";
    table.rows_ = {
        {10, {0.782, 1.79, 8.93, 19.52}},
        {20, {0.869, 1.14, 9.08, 18.17}},
        {30, {0.919, 1.14, 8.78, 18.42}},
        {40, {0.929, 0.92, 10.25, 18.28}},
        {50, {0.935, 1.42, 10.56, 18.63}},
        {60, {0.940, 1.56, 10.74, 17.68}},
        {70, {0.949, 0.85, 10.17, 16.50}},
        {80, {0.952, 0.72, 11.52, 16.30}},
        {90, {0.998, 0.72, 11.52, 16.30}},
    };
    return table;
}

ChannelTable ChannelTable::open(const std::string& spec)
{
    if (spec == "builtin:rural-sband") {
        return rural_s_band();
    }
    return load(spec);
}

const ChannelRow& ChannelTable::row(double elevation_deg) const
{
    const int decile = static_cast<int>(std::lround(elevation_deg / 10.0)) * 10;
    const auto it = rows_.find(std::clamp(decile, rows_.begin()->first, rows_.rbegin()->first));
    if (it == rows_.end()) {
        throw std::runtime_error("channel table: no row for elevation " +
                                 std::to_string(elevation_deg));
    }
    return it->second;
}

bool sample_los(double elevation_deg, const ChannelTable& table, RngStream& rng)
{
    return rng.uniform() < table.row(elevation_deg).p_los;
}

double sample_shadow_fading(double sigma_sf_db, RngStream& rng)
{
    return rng.normal(sigma_sf_db);
}

double basic_path_loss_db(const LinkState& link)
{
    return fspl_db(link.slant_m, link.carrier_hz) + link.sf_db + link.cl_db;
}

void resample_link_condition(LinkState& link, const ChannelTable& table,
                             RngStream& los_rng, RngStream& sf_rng)
{
    const ChannelRow& row = table.row(link.elevation_deg);
    link.los = sample_los(link.elevation_deg, table, los_rng);
    const double sigma = link.los ? row.sigma_sf_los_db : row.sigma_sf_nlos_db;
    link.sf_db = sample_shadow_fading(sigma, sf_rng);
    link.cl_db = link.los ? 0.0 : row.cl_db;
}

} // namespace ntnsim
