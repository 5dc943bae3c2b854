#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <queue>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ntnsim/sim_time.hpp"

namespace ntnsim {

enum class EventKind {
    PacketArrival,
    TxComplete,
    HarqFeedback,
    DuplicationTimerExpiry,
    ReorderTimerExpiry,
    ChannelUpdate,
    MobilityTick,
    TrafficTick,
};

std::string_view to_string(EventKind kind);

struct Event {
    TimeNs fire_time = 0;
    EventKind kind = EventKind::PacketArrival;
    int target = 0; // entity identifier, for tracing
    std::function<void()> action;
};

using EventHandle = std::uint64_t;

// Deterministic discrete-event core. Events with equal fire_time dispatch
// in insertion order. Cancellation is a tombstone: the heap entry stays,
// the action is skipped on pop.
class EventQueue {
public:
    // Rejects events scheduled in the past (a simulator logic bug).
    EventHandle schedule(Event event);

    void cancel(EventHandle handle);

    TimeNs now() const { return clock_; }

    // Dispatches every event with fire_time <= t_end, then advances the
    // clock to t_end.
    void run_until(TimeNs t_end);

    // Dispatches everything left in the queue, including events scheduled
    // while draining.
    void drain();

    std::size_t pending() const;

    // FNV-1a over (fire_time, kind, target) of every dispatched event.
    std::uint64_t dispatch_hash() const { return dispatch_hash_; }

    // Optional line-oriented trace: "<time_s> <kind> <target>".
    void set_trace(std::ostream* trace) { trace_ = trace; }

private:
    struct Entry {
        TimeNs fire_time;
        EventHandle handle;
        bool operator>(const Entry& other) const
        {
            if (fire_time != other.fire_time) return fire_time > other.fire_time;
            return handle > other.handle;
        }
    };

    bool dispatch_next();

    TimeNs clock_ = 0;
    EventHandle next_handle_ = 1;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap_;
    std::unordered_map<EventHandle, Event> events_;
    std::uint64_t dispatch_hash_ = 0xcbf29ce484222325ULL;
    std::ostream* trace_ = nullptr;
};

} // namespace ntnsim
