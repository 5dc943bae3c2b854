#pragma once

#include <optional>
#include <span>
#include <utility>

#include "ntnsim/sim_time.hpp"

namespace ntnsim {

// MN/SN binding for one dual-connected UE. The SN is set at most once per
// run; there is no SN change or release.
struct McBinding {
    int ue = 0;
    int mn = -1;
    std::optional<int> sn;
    TimeNs established_at = 0;
};

// Strongest-cell selection with a deterministic lowest-identifier
// tie-break. Throws std::invalid_argument on an empty candidate list.
int cell_select(std::span<const std::pair<int, double>> cells_rsrp_dbm);

// A3 event: neighbor RSRP plus offset reaches the serving level.
bool evaluate_a3(double serving_rsrp_dbm, double neighbor_rsrp_dbm, double offset_db);

// MN-to-SN forwarding path for duplicate SDUs.
struct XnLink {
    TimeNs delay = ms_to_ns(2);
};

// Arrival time of an SDU copy forwarded over Xn at `now`.
TimeNs xn_arrival_time(const XnLink& link, TimeNs now);

} // namespace ntnsim
