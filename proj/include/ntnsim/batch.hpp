#pragma once

#include <string>
#include <vector>

#include "ntnsim/config.hpp"
#include "ntnsim/stats.hpp"

namespace ntnsim {

// One independent run per seed. Runs share no mutable state, so the
// parallel path distributes seeds over an OpenMP worker pool; results are
// collected in seed order either way, making the output independent of
// the parallelism degree. The serial path is the reference the parallel
// one is tested against.
std::vector<RunSummary> run_batch_serial(const ScenarioConfig& config,
                                         const std::vector<unsigned>& seeds);
std::vector<RunSummary> run_batch_parallel(const ScenarioConfig& config,
                                           const std::vector<unsigned>& seeds);

std::vector<RunSummary> run_batch(const ScenarioConfig& config,
                                  const std::vector<unsigned>& seeds,
                                  bool parallel = true);

// Batch for one pd mode, aggregated.
AggregateReport run_mode(ScenarioConfig config, const std::string& pd_mode,
                         const std::vector<unsigned>& seeds, bool parallel = true);

// All three pd modes on the same seed list, one report per mode.
std::vector<AggregateReport> run_compare(const ScenarioConfig& config,
                                         const std::vector<unsigned>& seeds,
                                         bool parallel = true);

} // namespace ntnsim
