#include "ntnsim/pdcp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ntnsim {

const char* to_string(PdMode mode)
{
    switch (mode) {
    case PdMode::Off: return "off";
    case PdMode::Blind: return "blind";
    case PdMode::HarqTimer: return "harq_timer";
    }
    return "unknown";
}

PdMode pd_mode_from_string(const std::string& s)
{
    if (s == "off") return PdMode::Off;
    if (s == "blind") return PdMode::Blind;
    if (s == "harq_timer") return PdMode::HarqTimer;
    throw std::invalid_argument("pd_mode: expected off|blind|harq_timer, got '" + s + "'");
}

void on_primary_nack(DuplicationState& state, TimeNs now, const DuplicationPolicy& policy)
{
    if (policy.mode != PdMode::HarqTimer) {
        return;
    }
    // Each NACK resets and restarts the timer, overwriting any earlier
    // deadline.
    state.active_until = now + policy.dup_duration;
}

bool duplicate_on_submit(const DuplicationPolicy& policy, const DuplicationState& state,
                         bool sn_established, TimeNs now)
{
    if (!sn_established) {
        return false;
    }
    switch (policy.mode) {
    case PdMode::Off: return false;
    case PdMode::Blind: return true;
    case PdMode::HarqTimer: return state.active(now);
    }
    return false;
}

RxResult ReorderBuffer::ingest(std::uint64_t sn)
{
    RxResult result;
    if (received_.contains(sn)) {
        result.duplicate_discarded = true;
        return result;
    }
    if (sn < next_expected_) {
        // Below the delivery floor: a flush already moved past it.
        result.discarded_late = true;
        return result;
    }
    received_.insert(sn);

    if (mode_ == ReorderMode::OutOfOrder) {
        result.delivered.push_back(sn);
        delivered_high_ = any_delivered_ ? std::max(delivered_high_, sn) : sn;
        any_delivered_ = true;
        next_expected_ = std::max(next_expected_, sn + 1);
        return result;
    }

    held_.insert(sn);
    deliver_run(result);
    update_timer(result);
    return result;
}

RxResult ReorderBuffer::on_expiry()
{
    RxResult result;
    if (!timer_running_) {
        return result;
    }
    timer_running_ = false;

    // Deliver everything below the trigger, then the consecutive run
    // starting at it.
    for (auto it = held_.begin(); it != held_.end() && *it < trigger_sn_;) {
        result.delivered.push_back(*it);
        it = held_.erase(it);
    }
    next_expected_ = std::max(next_expected_, trigger_sn_);
    deliver_run(result);

    if (!result.delivered.empty()) {
        delivered_high_ = std::max(delivered_high_, result.delivered.back());
        any_delivered_ = true;
    }

    if (!held_.empty()) {
        timer_running_ = true;
        trigger_sn_ = *held_.begin();
        result.timer = ReorderTimerAction::Restart;
    }
    return result;
}

void ReorderBuffer::deliver_run(RxResult& result)
{
    while (!held_.empty() && *held_.begin() == next_expected_) {
        result.delivered.push_back(next_expected_);
        held_.erase(held_.begin());
        ++next_expected_;
    }
    if (!result.delivered.empty()) {
        delivered_high_ = any_delivered_
                              ? std::max(delivered_high_, result.delivered.back())
                              : result.delivered.back();
        any_delivered_ = true;
    }
}

void ReorderBuffer::update_timer(RxResult& result)
{
    if (timer_running_) {
        if (next_expected_ >= trigger_sn_) {
            // Everything the timer was guarding got delivered.
            if (held_.empty()) {
                timer_running_ = false;
                result.timer = ReorderTimerAction::Stop;
            } else {
                trigger_sn_ = *held_.begin();
                result.timer = ReorderTimerAction::Restart;
            }
        }
    } else if (!held_.empty()) {
        timer_running_ = true;
        trigger_sn_ = *held_.begin();
        result.timer = ReorderTimerAction::Start;
    }
}

bool reorder_window_valid(double t_reordering_s, bool infinite)
{
    if (infinite) {
        return true;
    }
    return t_reordering_s >= 0.0 && t_reordering_s <= 3.0;
}

} // namespace ntnsim
