#include "ntnsim/batch.hpp"

#include <exception>
#include <stdexcept>

#include "ntnsim/simulation.hpp"

namespace ntnsim {

namespace {

[[noreturn]] void rethrow_with_seed(unsigned seed, const std::exception_ptr& error)
{
    try {
        std::rethrow_exception(error);
    } catch (const std::exception& e) {
        throw std::runtime_error("run with seed " + std::to_string(seed) +
                                 " failed: " + e.what());
    }
}

} // namespace

std::vector<RunSummary> run_batch_serial(const ScenarioConfig& config,
                                         const std::vector<unsigned>& seeds)
{
    if (seeds.empty()) {
        throw std::invalid_argument("run_batch: empty seed list");
    }
    std::vector<RunSummary> summaries(seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        try {
            summaries[i] = simulate_run(config, seeds[i]);
        } catch (...) {
            rethrow_with_seed(seeds[i], std::current_exception());
        }
    }
    return summaries;
}

std::vector<RunSummary> run_batch_parallel(const ScenarioConfig& config,
                                           const std::vector<unsigned>& seeds)
{
    if (seeds.empty()) {
        throw std::invalid_argument("run_batch: empty seed list");
    }
    std::vector<RunSummary> summaries(seeds.size());
    std::exception_ptr error;
    unsigned failed_seed = 0;
    const auto n = static_cast<long>(seeds.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            summaries[i] = simulate_run(config, seeds[i]);
        } catch (...) {
#pragma omp critical
            {
                if (!error) {
                    error = std::current_exception();
                    failed_seed = seeds[i];
                }
            }
        }
    }
    if (error) {
        rethrow_with_seed(failed_seed, error);
    }
    return summaries;
}

std::vector<RunSummary> run_batch(const ScenarioConfig& config,
                                  const std::vector<unsigned>& seeds, bool parallel)
{
    return parallel ? run_batch_parallel(config, seeds) : run_batch_serial(config, seeds);
}

AggregateReport run_mode(ScenarioConfig config, const std::string& pd_mode,
                         const std::vector<unsigned>& seeds, bool parallel)
{
    config.pd.mode = pd_mode;
    validate_config(config);
    return aggregate(pd_mode, run_batch(config, seeds, parallel));
}

std::vector<AggregateReport> run_compare(const ScenarioConfig& config,
                                         const std::vector<unsigned>& seeds, bool parallel)
{
    std::vector<AggregateReport> reports;
    for (const char* mode : {"off", "blind", "harq_timer"}) {
        reports.push_back(run_mode(config, mode, seeds, parallel));
    }
    return reports;
}

} // namespace ntnsim
