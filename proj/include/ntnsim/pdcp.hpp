#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "ntnsim/sim_time.hpp"

namespace ntnsim {

enum class PdMode { Off, Blind, HarqTimer };

const char* to_string(PdMode mode);
PdMode pd_mode_from_string(const std::string& s);

struct DuplicationPolicy {
    PdMode mode = PdMode::Off;
    TimeNs dup_duration = ms_to_ns(50); // harq_timer mode only
};

// Per-UE transmit-side duplication state. Duplication is active at time t
// iff active_until exists and t < active_until.
struct DuplicationState {
    std::optional<TimeNs> active_until;

    bool active(TimeNs now) const { return active_until && now < *active_until; }
};

// A NACK received as HARQ feedback on the primary (MN) leg resets and
// restarts the duplication timer. Ignored outside harq_timer mode.
void on_primary_nack(DuplicationState& state, TimeNs now, const DuplicationPolicy& policy);

// Transmit-side decision: should this SDU get an SN copy? Never duplicates
// before an SN is established, regardless of policy.
bool duplicate_on_submit(const DuplicationPolicy& policy, const DuplicationState& state,
                         bool sn_established, TimeNs now);

enum class SduPath { Mn, Sn };

struct PdcpSdu {
    std::uint64_t sn = 0;
    int flow = 0;
    int size_bytes = 0;
    TimeNs created_at = 0;
    SduPath path = SduPath::Mn;
};

enum class ReorderMode { OutOfOrder, InOrder };

enum class ReorderTimerAction {
    None,
    Start,   // start the reordering timer
    Stop,    // cancel the running timer
    Restart, // cancel and start again
};

struct RxResult {
    std::vector<std::uint64_t> delivered;
    ReorderTimerAction timer = ReorderTimerAction::None;
    bool duplicate_discarded = false;
    bool discarded_late = false;
};

// Receive-side duplicate discard plus delivery. Out-of-order mode delivers
// immediately; in-order mode holds gapped SDUs behind the reordering timer
// and flushes everything below (and consecutively from) the trigger on
// expiry.
class ReorderBuffer {
public:
    ReorderBuffer() = default;
    explicit ReorderBuffer(ReorderMode mode) : mode_(mode) {}

    RxResult ingest(std::uint64_t sn);
    RxResult on_expiry();

    ReorderMode mode() const { return mode_; }
    bool timer_running() const { return timer_running_; }
    std::uint64_t timer_trigger_sn() const { return trigger_sn_; }
    std::uint64_t next_expected() const { return next_expected_; }
    std::size_t held_count() const { return held_.size(); }
    std::vector<std::uint64_t> held_sns() const { return {held_.begin(), held_.end()}; }

private:
    void deliver_run(RxResult& result);
    void update_timer(RxResult& result);

    ReorderMode mode_ = ReorderMode::OutOfOrder;
    std::uint64_t next_expected_ = 0; // delivery floor: lowest undelivered, unexpired sn
    std::uint64_t delivered_high_ = 0;
    bool any_delivered_ = false;
    std::set<std::uint64_t> held_;
    std::unordered_set<std::uint64_t> received_;
    bool timer_running_ = false;
    std::uint64_t trigger_sn_ = 0;
};

// t-Reordering validity: 0 (out-of-order), finite values up to 3 s, or
// infinity. Everything else is a configuration error.
bool reorder_window_valid(double t_reordering_s, bool infinite);

} // namespace ntnsim
