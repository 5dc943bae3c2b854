#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "ntnsim/mc_control.hpp"
#include "ntnsim/traffic.hpp"

using namespace ntnsim;

TEST_CASE("cell selection picks the strongest cell")
{
    const std::vector<std::pair<int, double>> cells{{0, -100.0}, {1, -103.0}};
    CHECK(cell_select(cells) == 0);
}

TEST_CASE("cell selection ties break on the lower identifier")
{
    const std::vector<std::pair<int, double>> cells{{2, -100.0}, {1, -100.0}};
    CHECK(cell_select(cells) == 1);
    const std::vector<std::pair<int, double>> single{{7, -120.0}};
    CHECK(cell_select(single) == 7);
}

TEST_CASE("cell selection rejects an empty candidate list")
{
    CHECK_THROWS_AS(cell_select({}), std::invalid_argument);
}

TEST_CASE("a3 event fires when neighbor plus offset reaches serving")
{
    CHECK(evaluate_a3(-110.0, -115.0, 10.0));
    CHECK_FALSE(evaluate_a3(-110.0, -121.0, 10.0));
    CHECK(evaluate_a3(-110.0, -110.0, 10.0)); // equal RSRPs, offset 10
    CHECK(evaluate_a3(-110.0, -120.0, 10.0)); // boundary: exactly equal
}

TEST_CASE("xn forwarding arrives after the configured delay, in order")
{
    const XnLink link{ms_to_ns(2)};
    CHECK(xn_arrival_time(link, seconds_to_ns(1.0)) == seconds_to_ns(1.002));
    const XnLink zero{0};
    CHECK(xn_arrival_time(zero, seconds_to_ns(1.0)) == seconds_to_ns(1.0));
    // FIFO: monotone submissions produce monotone arrivals.
    CHECK(xn_arrival_time(link, seconds_to_ns(1.0)) < xn_arrival_time(link, seconds_to_ns(1.1)));
}

TEST_CASE("cbr flow emits 500 packets over a 10 s run at 20 ms spacing")
{
    CbrFlow flow;
    flow.interval = ms_to_ns(20);
    const TimeNs t_end = seconds_to_ns(10.0);
    const TimeNs warmup = seconds_to_ns(0.5);
    int total = 0;
    int post_warmup = 0;
    TimeNs now = flow.next_emit;
    while (now < t_end) {
        const PdcpSdu sdu = cbr_emit(flow, now);
        ++total;
        if (sdu.created_at >= warmup) {
            ++post_warmup;
        }
        now = flow.next_emit;
    }
    CHECK(total == 500);
    CHECK(post_warmup == 475);
    // Offered rate: 32 B every 20 ms = 12.8 kbit/s.
    CHECK(32.0 * 8.0 / 0.020 == doctest::Approx(12800.0));
}

TEST_CASE("cbr sequence numbers are gapless at the source")
{
    CbrFlow flow;
    for (std::uint64_t i = 0; i < 100; ++i) {
        CHECK(cbr_emit(flow, flow.next_emit).sn == i);
    }
}

TEST_CASE("cbr emissions are exactly periodic with no drift")
{
    CbrFlow flow;
    flow.interval = ms_to_ns(20);
    TimeNs now = 0;
    for (int i = 0; i < 10000; ++i) {
        const PdcpSdu sdu = cbr_emit(flow, now);
        CHECK(sdu.created_at == static_cast<TimeNs>(i) * ms_to_ns(20));
        now = flow.next_emit;
    }
}

TEST_CASE("full buffer source always fills the grant")
{
    const FullBufferSource source{0};
    CHECK(source.poll(1000) == 1000);
    CHECK(source.poll(0) == 0);
}
