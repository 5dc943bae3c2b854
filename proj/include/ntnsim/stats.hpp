#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ntnsim {

struct UeCounters {
    long sent = 0;
    long delivered = 0;
    long lost = 0;
    long duplicates_created = 0;
    long duplicates_discarded = 0;
};

// 100 * delivered / sent; a packet delivered via either path counts once.
// UEs with sent == 0 carry no rate and are excluded from CDFs.
std::optional<double> success_rate_pct(const UeCounters& c);

struct RunSummary {
    unsigned run_seed = 0;
    std::vector<UeCounters> per_ue;
    long total_duplicates = 0;

    double mean_success_pct() const;
};

struct AggregateReport {
    std::string pd_mode;
    double mean_success_pct = 0.0;
    double p5_success_pct = 0.0;
    double mean_duplicates = 0.0;
    std::vector<double> pooled_success_pct; // sorted, one sample per UE per run
    std::vector<RunSummary> runs;
};

// Lower-nearest-rank percentile of a sorted sample.
double percentile_lower_nearest_rank(std::span<const double> sorted, double p);

// CDFs pool per-UE samples across runs; scalars average across runs.
AggregateReport aggregate(const std::string& pd_mode, std::vector<RunSummary> runs);

// summary.csv, cdf_success.csv, per_run.csv under out_dir. Deterministic
// byte-identical re-emission for the same reports. Throws on unwritable
// paths with the path in the message.
void emit_csv(std::span<const AggregateReport> reports, const std::string& out_dir);

} // namespace ntnsim
