#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ntnsim/channel.hpp"
#include "ntnsim/rng.hpp"

using namespace ntnsim;

TEST_CASE("fspl reference values")
{
    // 20*log10(4*pi*d*f/c) oracle, frozen.
    CHECK(fspl_db(600e3, 2e9) == doctest::Approx(154.03).epsilon(1e-4));
    CHECK(fspl_db(1075e3, 2e9) == doctest::Approx(159.10).epsilon(1e-4));
    CHECK(fspl_db(1200e3, 2e9) - fspl_db(600e3, 2e9) ==
          doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-9));
    CHECK_THROWS_AS(fspl_db(0.0, 2e9), std::domain_error);
    CHECK_THROWS_AS(fspl_db(600e3, -1.0), std::domain_error);
}

TEST_CASE("fspl is strictly increasing in distance and frequency")
{
    double prev = fspl_db(100e3, 2e9);
    for (double d = 200e3; d <= 2000e3; d += 100e3) {
        const double v = fspl_db(d, 2e9);
        CHECK(v > prev);
        prev = v;
    }
    prev = fspl_db(600e3, 1e9);
    for (double f = 2e9; f <= 30e9; f += 1e9) {
        const double v = fspl_db(600e3, f);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("path loss additivity is exact")
{
    RngStream rng(11, "pl-breakdown");
    for (int i = 0; i < 10000; ++i) {
        PathLossBreakdown pl;
        pl.fspl_db = rng.uniform(120.0, 200.0);
        pl.sf_db = rng.normal(8.0);
        pl.cl_db = rng.uniform(0.0, 25.0);
        pl.pl_gas_db = rng.uniform(0.0, 2.0);
        pl.pl_scint_db = rng.uniform(0.0, 3.0);
        CHECK(pl.basic_db() == pl.fspl_db + pl.sf_db + pl.cl_db);
        CHECK(pl.total_db() == total_path_loss_db(pl.basic_db(), pl.pl_gas_db, pl.pl_scint_db));
    }
}

TEST_CASE("total path loss defaults collapse to the basic loss")
{
    CHECK(total_path_loss_db(154.03, 0.0, 0.0) == 154.03);
    CHECK(total_path_loss_db(154.03, 0.1, 2.2) == doctest::Approx(156.33));
    CHECK(total_path_loss_db(0.0, 0.0, 0.0) == 0.0);
}

TEST_CASE("received power follows the link budget arithmetic")
{
    LinkBudgetParams params{50.0, 0.0, 7.0, 10e6, 290.0};
    CHECK(received_power_dbm(params, 154.03) == doctest::Approx(-104.03));
    CHECK(received_power_dbm(params, 0.0) == doctest::Approx(50.0));
    params.g_rx_dbi -= 3.0;
    CHECK(received_power_dbm(params, 154.03) == doctest::Approx(-107.03));
}

TEST_CASE("received power strictly decreases in path loss")
{
    const LinkBudgetParams params{78.0, 0.0, 7.0, 10e6, 290.0};
    double prev = received_power_dbm(params, 100.0);
    for (double pl = 110.0; pl <= 200.0; pl += 10.0) {
        const double c = received_power_dbm(params, pl);
        CHECK(c < prev);
        prev = c;
    }
}

TEST_CASE("thermal noise floor for 10 MHz at 290 K with 7 dB NF")
{
    const LinkBudgetParams params{0.0, 0.0, 7.0, 10e6, 290.0};
    // -174 dBm/Hz + 70 dB + 7 dB
    CHECK(noise_power_dbm(params) == doctest::Approx(-96.98).epsilon(1e-3));
}

TEST_CASE("rural table holds the 94% LOS row at 60 degrees")
{
    const ChannelTable table = ChannelTable::rural_s_band();
    CHECK(table.row(60.0).p_los == doctest::Approx(0.94));
    CHECK(table.row(57.0).p_los == doctest::Approx(0.94)); // rounds to 60
    CHECK(table.row(64.9).p_los == doctest::Approx(0.94));
}

TEST_CASE("los sampling respects the threshold rule")
{
    ChannelTable table;
    table.scenario_ = "synthetic";
    table.rows_[60] = ChannelRow{0.94, 0.0, 0.0, 0.0};
    table.rows_[90] = ChannelRow{1.0, 0.0, 0.0, 0.0};

    // Deterministic check: a draw just below p is LOS, just above is not.
    RngStream probe(1, "los-threshold");
    RngStream replay(1, "los-threshold");
    for (int i = 0; i < 1000; ++i) {
        const double u = probe.uniform();
        CHECK(sample_los(60.0, table, replay) == (u < 0.94));
    }
    RngStream always(2, "los-always");
    for (int i = 0; i < 1000; ++i) {
        CHECK(sample_los(90.0, table, always));
    }
}

TEST_CASE("shadow fading statistics match the configured sigma")
{
    RngStream rng(5, "sf-stats");
    const int n = 100000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = sample_shadow_fading(4.0, rng);
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / n;
    const double std = std::sqrt(sum_sq / n - mean * mean);
    CHECK(std > 3.9);
    CHECK(std < 4.1);
    CHECK(mean > -0.05);
    CHECK(mean < 0.05);

    RngStream zero(5, "sf-zero");
    for (int i = 0; i < 100; ++i) {
        CHECK(sample_shadow_fading(0.0, zero) == 0.0);
    }
}

TEST_CASE("LOS implies zero clutter loss on resample")
{
    const ChannelTable table = ChannelTable::rural_s_band();
    RngStream los(9, "los");
    RngStream sf(9, "sf");
    LinkState link;
    link.carrier_hz = 2e9;
    link.slant_m = 677e3;
    link.elevation_deg = 60.0;
    for (int i = 0; i < 2000; ++i) {
        resample_link_condition(link, table, los, sf);
        if (link.los) {
            CHECK(link.cl_db == 0.0);
        } else {
            CHECK(link.cl_db == doctest::Approx(17.68));
        }
    }
}

TEST_CASE("basic path loss adds shadow fading linearly")
{
    LinkState link;
    link.carrier_hz = 2e9;
    link.slant_m = 600e3;
    link.sf_db = 0.0;
    link.cl_db = 0.0;
    const double base = basic_path_loss_db(link);
    CHECK(base == doctest::Approx(fspl_db(600e3, 2e9)));
    link.sf_db = -3.0;
    CHECK(basic_path_loss_db(link) == doctest::Approx(base - 3.0));
    link.cl_db = 17.68;
    CHECK(basic_path_loss_db(link) == doctest::Approx(base - 3.0 + 17.68));
}

TEST_CASE("channel table round-trips through the file format")
{
    const auto path = std::filesystem::temp_directory_path() / "ntnsim_channel_test.csv";
    {
        std::ofstream out(path);
        out << "# test data\n";
        out << "rural, 60, 0.94, 1.56, 10.74, 17.68\n";
        out << "rural, 90, 0.998, 0.72, 11.52, 16.30\n";
    }
    const ChannelTable table = ChannelTable::load(path.string());
    CHECK(table.scenario() == "rural");
    CHECK(table.row(60.0).p_los == doctest::Approx(0.94));
    CHECK(table.row(90.0).sigma_sf_nlos_db == doctest::Approx(11.52));
    std::filesystem::remove(path);

    CHECK_THROWS_AS(ChannelTable::load("/nonexistent/table.csv"), std::runtime_error);
}

TEST_CASE("shipped data file matches the builtin table")
{
    // The repo ships the same rural S-band values as a data file.
    const std::filesystem::path candidates[] = {
        "data/channel_rural_s_band.csv",
        "../data/channel_rural_s_band.csv",
        "../../data/channel_rural_s_band.csv",
    };
    for (const auto& path : candidates) {
        if (std::filesystem::exists(path)) {
            const ChannelTable from_file = ChannelTable::load(path.string());
            const ChannelTable builtin = ChannelTable::rural_s_band();
            REQUIRE(from_file.rows().size() == builtin.rows().size());
            for (const auto& [elev, row] : builtin.rows()) {
                CHECK(from_file.rows().at(elev).p_los == doctest::Approx(row.p_los));
                CHECK(from_file.rows().at(elev).cl_db == doctest::Approx(row.cl_db));
            }
            return;
        }
    }
    WARN_MESSAGE(false, "data/channel_rural_s_band.csv not found from test cwd");
}
