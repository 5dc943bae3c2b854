#include "ntnsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ntnsim {

std::optional<double> success_rate_pct(const UeCounters& c)
{
    if (c.sent <= 0) {
        return std::nullopt;
    }
    return 100.0 * static_cast<double>(c.delivered) / static_cast<double>(c.sent);
}

double RunSummary::mean_success_pct() const
{
    double sum = 0.0;
    int n = 0;
    for (const UeCounters& c : per_ue) {
        if (const auto rate = success_rate_pct(c)) {
            sum += *rate;
            ++n;
        }
    }
    return n > 0 ? sum / n : 0.0;
}

double percentile_lower_nearest_rank(std::span<const double> sorted, double p)
{
    if (sorted.empty()) {
        throw std::invalid_argument("percentile of empty sample");
    }
    const auto n = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * n));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
}

AggregateReport aggregate(const std::string& pd_mode, std::vector<RunSummary> runs)
{
    if (runs.empty()) {
        throw std::invalid_argument("aggregate: no runs");
    }
    AggregateReport report;
    report.pd_mode = pd_mode;

    double mean_sum = 0.0;
    double dup_sum = 0.0;
    for (const RunSummary& run : runs) {
        mean_sum += run.mean_success_pct();
        dup_sum += static_cast<double>(run.total_duplicates);
        for (const UeCounters& c : run.per_ue) {
            if (const auto rate = success_rate_pct(c)) {
                report.pooled_success_pct.push_back(*rate);
            }
        }
    }
    std::sort(report.pooled_success_pct.begin(), report.pooled_success_pct.end());
    report.mean_success_pct = mean_sum / static_cast<double>(runs.size());
    report.mean_duplicates = dup_sum / static_cast<double>(runs.size());
    report.p5_success_pct = percentile_lower_nearest_rank(report.pooled_success_pct, 5.0);
    report.runs = std::move(runs);
    return report;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << std::fixed << std::setprecision(4);
    return out;
}

} // namespace

void emit_csv(std::span<const AggregateReport> reports, const std::string& out_dir)
{
    const std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec && !std::filesystem::is_directory(dir)) {
        throw std::runtime_error("cannot create output directory " + dir.string());
    }

    auto summary = open_out(dir / "summary.csv");
    summary << "pd_mode,mean_success_pct,p5_success_pct,pdcp_duplicates\n";
    for (const AggregateReport& r : reports) {
        summary << r.pd_mode << ',' << r.mean_success_pct << ',' << r.p5_success_pct
                << ',' << r.mean_duplicates << '\n';
    }

    auto cdf = open_out(dir / "cdf_success.csv");
    cdf << "pd_mode,value,cum_prob\n";
    for (const AggregateReport& r : reports) {
        const auto n = static_cast<double>(r.pooled_success_pct.size());
        for (std::size_t i = 0; i < r.pooled_success_pct.size(); ++i) {
            cdf << r.pd_mode << ',' << r.pooled_success_pct[i] << ','
                << (static_cast<double>(i + 1) / n) << '\n';
        }
    }

    auto per_run = open_out(dir / "per_run.csv");
    per_run << "pd_mode,seed,ue,sent,delivered,lost,duplicates_created,"
               "duplicates_discarded,success_pct\n";
    for (const AggregateReport& r : reports) {
        for (const RunSummary& run : r.runs) {
            for (std::size_t ue = 0; ue < run.per_ue.size(); ++ue) {
                const UeCounters& c = run.per_ue[ue];
                per_run << r.pd_mode << ',' << run.run_seed << ',' << ue << ','
                        << c.sent << ',' << c.delivered << ',' << c.lost << ','
                        << c.duplicates_created << ',' << c.duplicates_discarded << ',';
                if (const auto rate = success_rate_pct(c)) {
                    per_run << *rate;
                } else {
                    per_run << "nan";
                }
                per_run << '\n';
            }
        }
    }
}

} // namespace ntnsim
