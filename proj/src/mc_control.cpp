#include "ntnsim/mc_control.hpp"

#include <stdexcept>

namespace ntnsim {

int cell_select(std::span<const std::pair<int, double>> cells_rsrp_dbm)
{
    if (cells_rsrp_dbm.empty()) {
        throw std::invalid_argument("cell_select: empty candidate list");
    }
    int best_cell = cells_rsrp_dbm.front().first;
    double best_rsrp = cells_rsrp_dbm.front().second;
    for (const auto& [cell, rsrp] : cells_rsrp_dbm.subspan(1)) {
        if (rsrp > best_rsrp || (rsrp == best_rsrp && cell < best_cell)) {
            best_cell = cell;
            best_rsrp = rsrp;
        }
    }
    return best_cell;
}

bool evaluate_a3(double serving_rsrp_dbm, double neighbor_rsrp_dbm, double offset_db)
{
    return neighbor_rsrp_dbm + offset_db >= serving_rsrp_dbm;
}

TimeNs xn_arrival_time(const XnLink& link, TimeNs now)
{
    return now + link.delay;
}

} // namespace ntnsim
