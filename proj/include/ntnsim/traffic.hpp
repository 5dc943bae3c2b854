#pragma once

#include <cstdint>

#include "ntnsim/pdcp.hpp"
#include "ntnsim/sim_time.hpp"

namespace ntnsim {

// Constant bit rate source: one fixed-size SDU every interval, gapless
// sequence numbers.
struct CbrFlow {
    int ue = 0;
    int packet_bytes = 32;
    TimeNs interval = ms_to_ns(20);
    TimeNs next_emit = 0;
    std::uint64_t next_sn = 0;
};

inline PdcpSdu cbr_emit(CbrFlow& flow, TimeNs now)
{
    PdcpSdu sdu;
    sdu.sn = flow.next_sn++;
    sdu.flow = flow.ue;
    sdu.size_bytes = flow.packet_bytes;
    sdu.created_at = now;
    flow.next_emit = now + flow.interval;
    return sdu;
}

// Unbounded backlog: every grant is fully used. Wraparound interferer
// beams poll one of these, so they transmit in every slot.
struct FullBufferSource {
    int ue = 0;

    int poll(int grant_bytes) const { return grant_bytes; }
};

} // namespace ntnsim
