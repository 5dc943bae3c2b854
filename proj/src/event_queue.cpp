#include "ntnsim/event_queue.hpp"

#include <iomanip>
#include <stdexcept>

namespace ntnsim {

std::string_view to_string(EventKind kind)
{
    switch (kind) {
    case EventKind::PacketArrival: return "packet-arrival";
    case EventKind::TxComplete: return "tx-complete";
    case EventKind::HarqFeedback: return "harq-feedback";
    case EventKind::DuplicationTimerExpiry: return "duplication-timer-expiry";
    case EventKind::ReorderTimerExpiry: return "reorder-timer-expiry";
    case EventKind::ChannelUpdate: return "channel-update";
    case EventKind::MobilityTick: return "mobility-tick";
    case EventKind::TrafficTick: return "traffic-tick";
    }
    return "unknown";
}

EventHandle EventQueue::schedule(Event event)
{
    if (event.fire_time < clock_) {
        throw std::logic_error("event scheduled in the past");
    }
    const EventHandle handle = next_handle_++;
    heap_.push(Entry{event.fire_time, handle});
    events_.emplace(handle, std::move(event));
    return handle;
}

void EventQueue::cancel(EventHandle handle)
{
    events_.erase(handle);
}

bool EventQueue::dispatch_next()
{
    while (!heap_.empty()) {
        const Entry top = heap_.top();
        heap_.pop();
        auto it = events_.find(top.handle);
        if (it == events_.end()) {
            continue; // cancelled
        }
        Event event = std::move(it->second);
        events_.erase(it);
        clock_ = event.fire_time;

        auto mix = [this](std::uint64_t v) {
            dispatch_hash_ ^= v;
            dispatch_hash_ *= 0x100000001b3ULL;
        };
        mix(static_cast<std::uint64_t>(event.fire_time));
        mix(static_cast<std::uint64_t>(event.kind));
        mix(static_cast<std::uint64_t>(event.target));

        if (trace_) {
            (*trace_) << std::fixed << std::setprecision(9)
                      << ns_to_seconds(event.fire_time) << ' '
                      << to_string(event.kind) << ' ' << event.target << '\n';
        }
        event.action();
        return true;
    }
    return false;
}

void EventQueue::run_until(TimeNs t_end)
{
    while (!heap_.empty()) {
        // Drop tombstoned entries so the time check sees a live event.
        if (!events_.contains(heap_.top().handle)) {
            heap_.pop();
            continue;
        }
        if (heap_.top().fire_time > t_end) {
            break;
        }
        dispatch_next();
    }
    if (t_end > clock_) {
        clock_ = t_end;
    }
}

void EventQueue::drain()
{
    while (dispatch_next()) {
    }
}

std::size_t EventQueue::pending() const
{
    return events_.size();
}

} // namespace ntnsim
