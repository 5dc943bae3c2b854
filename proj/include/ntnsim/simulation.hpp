#pragma once

#include <deque>
#include <optional>
#include <ostream>
#include <vector>

#include "ntnsim/channel.hpp"
#include "ntnsim/config.hpp"
#include "ntnsim/event_queue.hpp"
#include "ntnsim/geometry.hpp"
#include "ntnsim/mc_control.hpp"
#include "ntnsim/pdcp.hpp"
#include "ntnsim/phy_mac.hpp"
#include "ntnsim/stats.hpp"
#include "ntnsim/traffic.hpp"

namespace ntnsim {

// One simulation run: two-satellite downlink scenario, CBR UEs in the
// center beams, PDCP duplication per the configured policy. Strictly
// single-threaded; all state lives here.
class Simulation {
public:
    Simulation(const ScenarioConfig& config, unsigned run_seed,
               std::ostream* trace = nullptr);

    RunSummary run();

    std::uint64_t dispatch_hash() const { return queue_.dispatch_hash(); }

private:
    void init_links();
    void schedule_initial_events();

    void on_traffic_tick(int ue);
    void pdcp_tx_submit(int ue, const PdcpSdu& sdu);
    void enqueue_tb(int cell, TransportBlock tb, bool front = false);
    void on_mac_slot(int cell);
    void on_reception(TransportBlock tb);
    void on_harq_feedback(TransportBlock tb, bool delivered);
    void on_mobility_tick();
    void on_measurement_tick();

    void ue_rx_ingest(int ue, std::uint64_t sn);
    void apply_timer_action(int ue, ReorderTimerAction action);
    void on_reorder_expiry(int ue);

    GeoPosition satellite_position(int sat) const;
    double propagation_delay_s(int ue, int sat) const;
    // Received power on the UE's link to `sat` with the current
    // large-scale state and fresh geometry.
    double link_received_power_dbm(int ue, int sat) const;
    bool counted(int ue, std::uint64_t sn) const;

    ScenarioConfig cfg_;
    unsigned seed_;
    EventQueue queue_;
    ChannelTable table_;

    RngStream placement_rng_;
    RngStream los_rng_;
    RngStream sf_rng_;
    RngStream phy_rng_;

    std::vector<SatelliteState> satellites_;
    std::vector<GeoPosition> ue_positions_;
    std::vector<std::vector<LinkState>> links_; // [ue][sat]
    std::vector<McBinding> bindings_;
    std::vector<DuplicationState> dup_states_;
    std::vector<CbrFlow> flows_;
    std::vector<ReorderBuffer> rx_;
    std::vector<std::optional<EventHandle>> reorder_handles_;
    std::vector<std::vector<std::deque<TransportBlock>>> queues_; // [cell][ue]
    std::vector<RoundRobinScheduler> schedulers_;
    std::vector<UeCounters> counters_;
    std::vector<std::vector<char>> counted_; // [ue][sn]

    DuplicationPolicy policy_;
    LinkBudgetParams budget_;
    WraparoundConfig wraparound_;
    BlerCurve bler_curve_;
    XnLink xn_;
    double noise_dbm_ = 0.0;

    TimeNs t_end_ = 0;
    TimeNs warmup_ = 0;
    TimeNs slot_ = 0;
    TimeNs harq_processing_ = 0;
    TimeNs mobility_tick_ = 0;
    TimeNs measurement_period_ = 0;
    TimeNs t_reordering_ = 0;
    std::uint64_t next_tb_id_ = 1;
};

RunSummary simulate_run(const ScenarioConfig& config, unsigned run_seed,
                        std::ostream* trace = nullptr);

} // namespace ntnsim
