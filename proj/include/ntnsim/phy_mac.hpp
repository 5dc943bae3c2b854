#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ntnsim/sim_time.hpp"

namespace ntnsim {

double db_to_linear(double db);
double linear_to_db(double linear);

// C / (I + N), all inputs in dBm, result in dB. interferers_dbm holds the
// per-interferer received powers of the co-channel beams only.
double sinr_db(double c_dbm, std::span<const double> interferers_dbm, double noise_dbm);

// Logistic SINR-to-BLER mapping in the dB domain: BLER = 0.5 at the
// midpoint, monotone non-increasing in SINR.
struct BlerCurve {
    double midpoint_sinr_db = 0.0;
    double slope_per_db = 1.0;

    double bler(double sinr_db) const;
};

// RSRP as received power shifted by a constant per-reference-resource
// offset, identical for all cells.
double rsrp_dbm(double received_power_dbm);

// Cyclic scheduler over per-UE queues: one grant per slot, empty queues
// skipped, rotation order fixed.
class RoundRobinScheduler {
public:
    explicit RoundRobinScheduler(std::size_t num_queues) : num_queues_(num_queues) {}

    // backlogged[i] == true when queue i has pending data. Returns the
    // granted queue index, or nullopt when all queues are empty.
    std::optional<std::size_t> grant(const std::vector<bool>& backlogged);

private:
    std::size_t num_queues_;
    std::size_t next_ = 0;
};

// Interference contributed by the serving satellite's wraparound beams.
// Each ring ships one full-buffer UE, so its beams transmit continuously;
// only beams sharing the center beam's sub-band count under FRF 3.
struct WraparoundConfig {
    std::vector<int> ring_beams{6, 12};
    std::vector<double> ring_isolation_db{30.0, 40.0};
    int frf = 3;
};

int co_channel_beam_count(int beams_in_ring, int frf);

// Per-interferer powers at the UE, given the boresight received power of
// the serving center beam.
std::vector<double> wraparound_interference_dbm(double boresight_c_dbm,
                                                const WraparoundConfig& cfg);

struct SduRef {
    int flow = 0;
    std::uint64_t sn = 0;
};

struct TransportBlock {
    std::uint64_t tb_id = 0;
    int ue = 0;
    int cell = 0;
    bool sn_leg = false;
    int attempt = 1; // 1 or 2: one retransmission maximum
    int size_bytes = 0;
    std::vector<SduRef> sdus;
};

enum class HarqOutcome { Pending, Acked, Failed };

struct HarqProcess {
    TransportBlock tb;
    TimeNs feedback_due = 0;
    HarqOutcome outcome = HarqOutcome::Pending;
};

} // namespace ntnsim
