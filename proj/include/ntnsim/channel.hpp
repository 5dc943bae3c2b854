#pragma once

#include <map>
#include <string>

#include "ntnsim/geometry.hpp"
#include "ntnsim/rng.hpp"

namespace ntnsim {

// Total loss PL = PL_b + PL_g + PL_s with PL_b = FSPL + SF + CL.
struct PathLossBreakdown {
    double fspl_db = 0.0;
    double sf_db = 0.0;
    double cl_db = 0.0;
    double pl_gas_db = 0.0;
    double pl_scint_db = 0.0;

    double basic_db() const { return fspl_db + sf_db + cl_db; }
    double total_db() const { return basic_db() + pl_gas_db + pl_scint_db; }
};

// 20*log10(4*pi*d*f/c). Throws std::domain_error on non-positive inputs.
double fspl_db(double d_m, double f_hz);

double total_path_loss_db(double pl_b_db, double pl_g_db, double pl_s_db);

struct LinkBudgetParams {
    double eirp_dbm = 0.0;
    double g_rx_dbi = 0.0;
    double noise_figure_db = 0.0;
    double bandwidth_hz = 0.0;
    double ambient_temperature_k = 290.0;
};

double noise_power_dbm(const LinkBudgetParams& params);

// C = EIRP + G_Rx - PL.
double received_power_dbm(const LinkBudgetParams& params, double pl_db);

struct ChannelRow {
    double p_los = 1.0;
    double sigma_sf_los_db = 0.0;
    double sigma_sf_nlos_db = 0.0;
    double cl_db = 0.0;
};

// LOS probability, shadow-fading std, and clutter loss keyed by elevation
// decile. Lookups round to the nearest 10-degree row.
class ChannelTable {
public:
    // Line-oriented text: scenario, elevation_deg, p_los, sigma_sf_los,
    // sigma_sf_nlos, cl_db. '#' starts a comment.
    static ChannelTable load(const std::string& path);

    // Built-in rural S-band defaults (TR 38.811 tables 6.6.1-1/6.6.2-3).
    static ChannelTable rural_s_band();

    // Resolves "builtin:rural-sband" or a file path.
    static ChannelTable open(const std::string& spec);

    const ChannelRow& row(double elevation_deg) const;

    const std::string& scenario() const { return scenario_; }
    const std::map<int, ChannelRow>& rows() const { return rows_; }

    std::string scenario_;
    std::map<int, ChannelRow> rows_;
};

bool sample_los(double elevation_deg, const ChannelTable& table, RngStream& rng);

double sample_shadow_fading(double sigma_sf_db, RngStream& rng);

// Per UE-satellite link state. LOS implies zero clutter loss; SF and LOS
// are redrawn only when the anchor-cube trigger fires.
struct LinkState {
    bool los = true;
    double sf_db = 0.0;
    double cl_db = 0.0;
    double elevation_deg = 90.0;
    double slant_m = 0.0;
    double carrier_hz = 0.0;
    LosAnchor anchor;
};

double basic_path_loss_db(const LinkState& link);

// Resamples LOS/SF/CL from the table at the link's current elevation.
void resample_link_condition(LinkState& link, const ChannelTable& table,
                             RngStream& los_rng, RngStream& sf_rng);

} // namespace ntnsim
