#include "ntnsim/simulation.hpp"

#include <algorithm>
#include <cmath>

namespace ntnsim {

Simulation::Simulation(const ScenarioConfig& config, unsigned run_seed, std::ostream* trace)
    : cfg_(config),
      seed_(run_seed),
      table_(ChannelTable::open(config.channel_table)),
      placement_rng_(run_seed, "ue-placement"),
      los_rng_(run_seed, "los-draw"),
      sf_rng_(run_seed, "shadow-fading"),
      phy_rng_(run_seed, "phy-draws"),
      policy_(config.duplication_policy()),
      wraparound_(config.wraparound_model())
{
    validate_config(cfg_);
    queue_.set_trace(trace);

    t_end_ = seconds_to_ns(cfg_.simulation_time_s);
    warmup_ = seconds_to_ns(cfg_.warmup_s);
    slot_ = ms_to_ns(cfg_.harq.slot_ms);
    harq_processing_ = ms_to_ns(cfg_.harq.processing_delay_ms);
    mobility_tick_ = ms_to_ns(cfg_.mobility_tick_ms);
    measurement_period_ = ms_to_ns(cfg_.measurement_period_ms);
    t_reordering_ = ms_to_ns(cfg_.reorder.t_reordering_ms);

    budget_.eirp_dbm = cfg_.link_budget.eirp_dbm;
    budget_.g_rx_dbi = cfg_.link_budget.g_rx_dbi;
    budget_.noise_figure_db = cfg_.link_budget.noise_figure_db;
    budget_.bandwidth_hz = cfg_.bandwidth_hz;
    budget_.ambient_temperature_k = cfg_.link_budget.ambient_temperature_k;
    noise_dbm_ = noise_power_dbm(budget_);

    bler_curve_.midpoint_sinr_db = cfg_.modcod.bler_midpoint_sinr_db;
    bler_curve_.slope_per_db = cfg_.modcod.bler_slope_per_db;
    xn_.delay = ms_to_ns(cfg_.xn_delay_ms);

    for (const SatelliteConfig& sat : cfg_.satellites) {
        satellites_.push_back(SatelliteState{
            GeoPosition{sat.start_lat_deg, sat.start_lon_deg, cfg_.orbit_altitude_m},
            cfg_.satellite_speed_mps});
    }

    const GeoPosition target{cfg_.beam_target_lat_deg, cfg_.beam_target_lon_deg, 0.0};
    for (int ue = 0; ue < cfg_.ue_count; ++ue) {
        ue_positions_.push_back(place_on_disc(target, cfg_.ue_placement_radius_m, placement_rng_));
    }

    const int n_ue = cfg_.ue_count;
    const int n_cells = static_cast<int>(satellites_.size());
    bindings_.resize(n_ue);
    dup_states_.resize(n_ue);
    rx_.assign(n_ue, ReorderBuffer(cfg_.reorder_mode()));
    reorder_handles_.resize(n_ue);
    counters_.resize(n_ue);
    counted_.resize(n_ue);
    queues_.assign(n_cells, std::vector<std::deque<TransportBlock>>(n_ue));
    schedulers_.assign(n_cells, RoundRobinScheduler(n_ue));
    for (int ue = 0; ue < n_ue; ++ue) {
        bindings_[ue].ue = ue;
        CbrFlow flow;
        flow.ue = ue;
        flow.packet_bytes = static_cast<int>(cfg_.traffic.cbr_packet_bytes);
        flow.interval = ms_to_ns(cfg_.traffic.cbr_interval_ms);
        flow.next_emit = cfg_.traffic.cbr_phase == "random"
                             ? placement_rng_.uniform_int(static_cast<std::uint64_t>(flow.interval))
                             : 0;
        flows_.push_back(flow);
    }

    init_links();
}

GeoPosition Simulation::satellite_position(int sat) const
{
    return propagate(satellites_[sat], ns_to_seconds(queue_.now()));
}

void Simulation::init_links()
{
    links_.assign(cfg_.ue_count, std::vector<LinkState>(satellites_.size()));
    for (int ue = 0; ue < cfg_.ue_count; ++ue) {
        for (std::size_t sat = 0; sat < satellites_.size(); ++sat) {
            const GeoPosition sat_pos = propagate(satellites_[sat], 0.0);
            LinkState& link = links_[ue][sat];
            link.carrier_hz = cfg_.carrier_hz;
            link.elevation_deg = elevation_angle_deg(sat_pos, ue_positions_[ue]);
            link.slant_m = slant_range_m(sat_pos, ue_positions_[ue]);
            link.anchor = LosAnchor{to_ecef(sat_pos), cfg_.los_cube_side_m};
            resample_link_condition(link, table_, los_rng_, sf_rng_);
        }
    }
}

double Simulation::propagation_delay_s(int ue, int sat) const
{
    return slant_range_m(satellite_position(sat), ue_positions_[ue]) / kSpeedOfLightMps;
}

double Simulation::link_received_power_dbm(int ue, int sat) const
{
    const LinkState& link = links_[ue][sat];
    const double slant = slant_range_m(satellite_position(sat), ue_positions_[ue]);
    const double pl_b = fspl_db(slant, link.carrier_hz) + link.sf_db + link.cl_db;
    const double pl = total_path_loss_db(pl_b, cfg_.link_budget.pl_gas_db,
                                         cfg_.link_budget.pl_scint_db);
    return received_power_dbm(budget_, pl);
}

bool Simulation::counted(int ue, std::uint64_t sn) const
{
    return sn < counted_[ue].size() && counted_[ue][sn];
}

void Simulation::schedule_initial_events()
{
    // Measurement precedes traffic at t=0 so UEs attach before the first
    // SDU is submitted.
    queue_.schedule({0, EventKind::ChannelUpdate, 0, [this] { on_measurement_tick(); }});
    for (int ue = 0; ue < cfg_.ue_count; ++ue) {
        queue_.schedule({flows_[ue].next_emit, EventKind::TrafficTick, ue,
                         [this, ue] { on_traffic_tick(ue); }});
    }
    for (std::size_t cell = 0; cell < satellites_.size(); ++cell) {
        const int c = static_cast<int>(cell);
        queue_.schedule({0, EventKind::TxComplete, c, [this, c] { on_mac_slot(c); }});
    }
    queue_.schedule({mobility_tick_, EventKind::MobilityTick, 0, [this] { on_mobility_tick(); }});
}

void Simulation::on_traffic_tick(int ue)
{
    CbrFlow& flow = flows_[ue];
    const PdcpSdu sdu = cbr_emit(flow, queue_.now());
    const bool count = sdu.created_at >= warmup_;
    counted_[ue].push_back(count ? 1 : 0);
    if (count) {
        ++counters_[ue].sent;
    }
    pdcp_tx_submit(ue, sdu);
    if (flow.next_emit < t_end_) {
        queue_.schedule({flow.next_emit, EventKind::TrafficTick, ue,
                         [this, ue] { on_traffic_tick(ue); }});
    }
}

void Simulation::pdcp_tx_submit(int ue, const PdcpSdu& sdu)
{
    const McBinding& binding = bindings_[ue];
    if (binding.mn < 0) {
        return; // not yet attached; cannot happen with measurement at t=0
    }
    TransportBlock tb;
    tb.tb_id = next_tb_id_++;
    tb.ue = ue;
    tb.cell = binding.mn;
    tb.sn_leg = false;
    tb.size_bytes = sdu.size_bytes;
    tb.sdus = {{ue, sdu.sn}};
    enqueue_tb(binding.mn, tb);

    if (duplicate_on_submit(policy_, dup_states_[ue], binding.sn.has_value(), queue_.now())) {
        if (counted(ue, sdu.sn)) {
            ++counters_[ue].duplicates_created;
        }
        TransportBlock copy = tb;
        copy.tb_id = next_tb_id_++;
        copy.cell = *binding.sn;
        copy.sn_leg = true;
        const int sn_cell = *binding.sn;
        queue_.schedule({xn_arrival_time(xn_, queue_.now()), EventKind::PacketArrival, ue,
                         [this, sn_cell, copy] { enqueue_tb(sn_cell, copy); }});
    }
}

void Simulation::enqueue_tb(int cell, TransportBlock tb, bool front)
{
    if (front) {
        queues_[cell][tb.ue].push_front(std::move(tb));
    } else {
        queues_[cell][tb.ue].push_back(std::move(tb));
    }
}

void Simulation::on_mac_slot(int cell)
{
    std::vector<bool> backlogged(queues_[cell].size());
    for (std::size_t ue = 0; ue < queues_[cell].size(); ++ue) {
        backlogged[ue] = !queues_[cell][ue].empty();
    }
    if (const auto grant = schedulers_[cell].grant(backlogged)) {
        TransportBlock tb = std::move(queues_[cell][*grant].front());
        queues_[cell][*grant].pop_front();
        const TimeNs rx_time =
            queue_.now() + slot_ + seconds_to_ns(propagation_delay_s(tb.ue, cell));
        queue_.schedule({rx_time, EventKind::TxComplete, tb.ue,
                         [this, tb = std::move(tb)] { on_reception(tb); }});
    }
    if (queue_.now() + slot_ <= t_end_) {
        queue_.schedule({queue_.now() + slot_, EventKind::TxComplete, cell,
                         [this, cell] { on_mac_slot(cell); }});
    }
}

void Simulation::on_reception(TransportBlock tb)
{
    const double c_dbm = link_received_power_dbm(tb.ue, tb.cell);
    const std::vector<double> interferers = wraparound_interference_dbm(c_dbm, wraparound_);
    const double sinr = sinr_db(c_dbm, interferers, noise_dbm_);
    const double bler = bler_curve_.bler(sinr);
    const bool delivered = !phy_rng_.bernoulli(bler);

    if (delivered) {
        for (const SduRef& ref : tb.sdus) {
            ue_rx_ingest(tb.ue, ref.sn);
        }
    }
    // ACK/NACK over the control channel is error-free.
    const TimeNs feedback_due = queue_.now() +
                                seconds_to_ns(propagation_delay_s(tb.ue, tb.cell)) +
                                harq_processing_;
    queue_.schedule({feedback_due, EventKind::HarqFeedback, tb.cell,
                     [this, tb = std::move(tb), delivered] { on_harq_feedback(tb, delivered); }});
}

void Simulation::on_harq_feedback(TransportBlock tb, bool delivered)
{
    if (!delivered && !tb.sn_leg) {
        // NACK on the primary leg arms the duplication timer. SN-leg NACKs
        // do not.
        on_primary_nack(dup_states_[tb.ue], queue_.now(), policy_);
    }
    if (delivered) {
        return;
    }
    if (tb.attempt <= cfg_.harq.max_retx) {
        TransportBlock retx = std::move(tb);
        ++retx.attempt;
        const int cell = retx.cell;
        enqueue_tb(cell, std::move(retx), /*front=*/true);
    }
    // Second failure: the TB is lost on this leg.
}

void Simulation::ue_rx_ingest(int ue, std::uint64_t sn)
{
    const RxResult result = rx_[ue].ingest(sn);
    for (const std::uint64_t delivered_sn : result.delivered) {
        if (counted(ue, delivered_sn)) {
            ++counters_[ue].delivered;
        }
    }
    if (result.duplicate_discarded && counted(ue, sn)) {
        ++counters_[ue].duplicates_discarded;
    }
    apply_timer_action(ue, result.timer);
}

void Simulation::apply_timer_action(int ue, ReorderTimerAction action)
{
    if (action == ReorderTimerAction::None) {
        return;
    }
    if (reorder_handles_[ue]) {
        queue_.cancel(*reorder_handles_[ue]);
        reorder_handles_[ue].reset();
    }
    if (action == ReorderTimerAction::Start || action == ReorderTimerAction::Restart) {
        if (cfg_.reorder.infinite) {
            return; // timer armed but never expires
        }
        reorder_handles_[ue] = queue_.schedule({queue_.now() + t_reordering_,
                                                EventKind::ReorderTimerExpiry, ue,
                                                [this, ue] { on_reorder_expiry(ue); }});
    }
}

void Simulation::on_reorder_expiry(int ue)
{
    reorder_handles_[ue].reset();
    const RxResult result = rx_[ue].on_expiry();
    for (const std::uint64_t delivered_sn : result.delivered) {
        if (counted(ue, delivered_sn)) {
            ++counters_[ue].delivered;
        }
    }
    apply_timer_action(ue, result.timer);
}

void Simulation::on_mobility_tick()
{
    for (int ue = 0; ue < cfg_.ue_count; ++ue) {
        for (std::size_t sat = 0; sat < satellites_.size(); ++sat) {
            const GeoPosition sat_pos = satellite_position(static_cast<int>(sat));
            LinkState& link = links_[ue][sat];
            link.elevation_deg = elevation_angle_deg(sat_pos, ue_positions_[ue]);
            link.slant_m = slant_range_m(sat_pos, ue_positions_[ue]);
            const Ecef sat_ecef = to_ecef(sat_pos);
            if (los_resample_due(link.anchor, sat_ecef)) {
                link.anchor.anchor = sat_ecef;
                resample_link_condition(link, table_, los_rng_, sf_rng_);
            }
        }
    }
    if (queue_.now() + mobility_tick_ <= t_end_) {
        queue_.schedule({queue_.now() + mobility_tick_, EventKind::MobilityTick, 0,
                         [this] { on_mobility_tick(); }});
    }
}

void Simulation::on_measurement_tick()
{
    for (int ue = 0; ue < cfg_.ue_count; ++ue) {
        std::vector<std::pair<int, double>> cells;
        for (std::size_t sat = 0; sat < satellites_.size(); ++sat) {
            cells.emplace_back(static_cast<int>(sat),
                               rsrp_dbm(link_received_power_dbm(ue, static_cast<int>(sat))));
        }
        McBinding& binding = bindings_[ue];
        if (binding.mn < 0) {
            binding.mn = cell_select(cells);
        }
        if (!binding.sn && cells.size() > 1) {
            double serving = 0.0;
            int best_neighbor = -1;
            double best_rsrp = 0.0;
            for (const auto& [cell, rsrp] : cells) {
                if (cell == binding.mn) {
                    serving = rsrp;
                } else if (best_neighbor < 0 || rsrp > best_rsrp) {
                    best_neighbor = cell;
                    best_rsrp = rsrp;
                }
            }
            if (evaluate_a3(serving, best_rsrp, cfg_.sn_offset_db)) {
                binding.sn = best_neighbor;
                binding.established_at = queue_.now();
            }
        }
    }
    if (queue_.now() + measurement_period_ <= t_end_) {
        queue_.schedule({queue_.now() + measurement_period_, EventKind::ChannelUpdate, 0,
                         [this] { on_measurement_tick(); }});
    }
}

RunSummary Simulation::run()
{
    schedule_initial_events();
    queue_.run_until(t_end_);
    // Drain: no new traffic or grants, but in-flight receptions, feedback,
    // and reordering flushes still resolve.
    queue_.drain();

    RunSummary summary;
    summary.run_seed = seed_;
    for (int ue = 0; ue < cfg_.ue_count; ++ue) {
        UeCounters c = counters_[ue];
        c.lost = c.sent - c.delivered;
        summary.per_ue.push_back(c);
        summary.total_duplicates += c.duplicates_created;
    }
    return summary;
}

RunSummary simulate_run(const ScenarioConfig& config, unsigned run_seed, std::ostream* trace)
{
    Simulation sim(config, run_seed, trace);
    return sim.run();
}

} // namespace ntnsim
