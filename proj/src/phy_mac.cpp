#include "ntnsim/phy_mac.hpp"

#include <cmath>

namespace ntnsim {

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear)
{
    return 10.0 * std::log10(linear);
}

double sinr_db(double c_dbm, std::span<const double> interferers_dbm, double noise_dbm)
{
    double denom_mw = db_to_linear(noise_dbm);
    for (const double i_dbm : interferers_dbm) {
        denom_mw += db_to_linear(i_dbm);
    }
    return c_dbm - linear_to_db(denom_mw);
}

double BlerCurve::bler(double sinr) const
{
    return 1.0 / (1.0 + std::exp(slope_per_db * (sinr - midpoint_sinr_db)));
}

double rsrp_dbm(double received_power_dbm)
{
    // 10 MHz / 15 kHz numerology: 600 subcarriers. The exact constant is
    // irrelevant to cell ranking, it cancels in every comparison.
    static const double kOffsetDb = 10.0 * std::log10(600.0);
    return received_power_dbm - kOffsetDb;
}

std::optional<std::size_t> RoundRobinScheduler::grant(const std::vector<bool>& backlogged)
{
    for (std::size_t probe = 0; probe < num_queues_; ++probe) {
        const std::size_t idx = (next_ + probe) % num_queues_;
        if (backlogged[idx]) {
            next_ = (idx + 1) % num_queues_;
            return idx;
        }
    }
    return std::nullopt;
}

int co_channel_beam_count(int beams_in_ring, int frf)
{
    return frf <= 1 ? beams_in_ring : beams_in_ring / frf;
}

std::vector<double> wraparound_interference_dbm(double boresight_c_dbm,
                                                const WraparoundConfig& cfg)
{
    std::vector<double> interferers;
    for (std::size_t ring = 0; ring < cfg.ring_beams.size(); ++ring) {
        const int count = co_channel_beam_count(cfg.ring_beams[ring], cfg.frf);
        for (int i = 0; i < count; ++i) {
            interferers.push_back(boresight_c_dbm - cfg.ring_isolation_db[ring]);
        }
    }
    return interferers;
}

} // namespace ntnsim
