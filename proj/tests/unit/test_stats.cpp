#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ntnsim/stats.hpp"

using namespace ntnsim;

namespace {

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunSummary make_run(unsigned seed, const std::vector<double>& rates, long duplicates)
{
    RunSummary run;
    run.run_seed = seed;
    run.total_duplicates = duplicates;
    for (const double rate : rates) {
        UeCounters c;
        c.sent = 10000;
        c.delivered = static_cast<long>(rate / 100.0 * 10000.0);
        c.lost = c.sent - c.delivered;
        run.per_ue.push_back(c);
    }
    return run;
}

} // namespace

TEST_CASE("success rate arithmetic")
{
    UeCounters c;
    c.sent = 475;
    c.delivered = 470;
    CHECK(*success_rate_pct(c) == doctest::Approx(100.0 * 470.0 / 475.0));
    c.delivered = 475;
    CHECK(*success_rate_pct(c) == doctest::Approx(100.0));
    c.sent = 0;
    CHECK_FALSE(success_rate_pct(c).has_value());
}

TEST_CASE("aggregate pools per-UE samples and averages scalars")
{
    std::vector<RunSummary> runs;
    runs.push_back(make_run(1, std::vector<double>(10, 99.0), 1641));
    runs.push_back(make_run(2, std::vector<double>(10, 97.0), 1641));
    const AggregateReport report = aggregate("blind", std::move(runs));
    CHECK(report.pooled_success_pct.size() == 20);
    CHECK(report.mean_duplicates == doctest::Approx(1641.0));
    CHECK(report.mean_success_pct == doctest::Approx(98.0));
    // Mean of per-run means equals the reported scalar mean exactly.
}

TEST_CASE("ue with zero sent packets is excluded from the pooled cdf")
{
    RunSummary run = make_run(1, {100.0, 90.0}, 0);
    UeCounters idle;
    run.per_ue.push_back(idle);
    const AggregateReport report = aggregate("off", {run});
    CHECK(report.pooled_success_pct.size() == 2);
}

TEST_CASE("p5 uses the lower nearest rank on pooled samples")
{
    std::vector<double> sorted;
    for (int i = 1; i <= 100; ++i) {
        sorted.push_back(static_cast<double>(i));
    }
    CHECK(percentile_lower_nearest_rank(sorted, 5.0) == 5.0);
    CHECK(percentile_lower_nearest_rank(sorted, 50.0) == 50.0);
    CHECK(percentile_lower_nearest_rank(sorted, 100.0) == 100.0);
    const std::vector<double> tiny{42.0};
    CHECK(percentile_lower_nearest_rank(tiny, 5.0) == 42.0);
    CHECK_THROWS_AS(percentile_lower_nearest_rank({}, 5.0), std::invalid_argument);
}

TEST_CASE("pooled cdf is non-decreasing from 0 to 1")
{
    std::vector<RunSummary> runs;
    runs.push_back(make_run(1, {91.0, 100.0, 99.5, 98.0}, 10));
    runs.push_back(make_run(2, {97.0, 99.0, 100.0, 95.0}, 12));
    const AggregateReport report = aggregate("harq_timer", std::move(runs));
    for (std::size_t i = 1; i < report.pooled_success_pct.size(); ++i) {
        CHECK(report.pooled_success_pct[i] >= report.pooled_success_pct[i - 1]);
    }
}

TEST_CASE("csv emission is deterministic and mirrors the summary shape")
{
    const auto dir = std::filesystem::temp_directory_path() / "ntnsim_stats_test";
    std::filesystem::remove_all(dir);

    std::vector<AggregateReport> reports;
    reports.push_back(aggregate("off", {make_run(1, {98.0, 97.0}, 0)}));
    reports.push_back(aggregate("blind", {make_run(1, {99.9, 99.8}, 1641)}));
    reports.push_back(aggregate("harq_timer", {make_run(1, {99.8, 99.7}, 210)}));

    emit_csv(reports, dir.string());
    const std::string first = slurp(dir / "summary.csv");
    emit_csv(reports, dir.string());
    CHECK(first == slurp(dir / "summary.csv"));

    // Three rows, one per mode, plus the header.
    CHECK(std::count(first.begin(), first.end(), '\n') == 4);
    CHECK(first.find("pd_mode,mean_success_pct,p5_success_pct,pdcp_duplicates") == 0);
    CHECK(first.find("off,") != std::string::npos);
    CHECK(first.find("blind,") != std::string::npos);
    CHECK(first.find("harq_timer,") != std::string::npos);

    CHECK(std::filesystem::exists(dir / "cdf_success.csv"));
    CHECK(std::filesystem::exists(dir / "per_run.csv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("empty report list emits header-only files")
{
    const auto dir = std::filesystem::temp_directory_path() / "ntnsim_stats_empty";
    std::filesystem::remove_all(dir);
    emit_csv({}, dir.string());
    const std::string summary = slurp(dir / "summary.csv");
    CHECK(std::count(summary.begin(), summary.end(), '\n') == 1);
    CHECK(slurp(dir / "per_run.csv").find("pd_mode,seed,ue,") == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("unwritable output directory fails with the path in the message")
{
    CHECK_THROWS_WITH_AS(emit_csv({}, "/proc/ntnsim_cannot_write"),
                         doctest::Contains("/proc/ntnsim_cannot_write"),
                         std::runtime_error);
}
