#pragma once
// Monte Carlo ensembles over seeds and parameter sweeps over grids.
//
// Runs are embarrassingly parallel; large ensembles fan out over a worker
// pool, with results stored by seed position and aggregated in seed order,
// so the summary never depends on scheduling.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecosim/params.hpp"

namespace ecosim {

struct EnsembleSummary {
    SimParams params;
    std::vector<std::uint64_t> seeds; // in the order given

    // Per-seed extracts, parallel to `seeds`.
    std::vector<double> per_seed_avg_sales;
    std::vector<int> per_seed_defaults;
    std::vector<int> per_seed_noncompliant_weeks;
    std::vector<bool> per_seed_terminal_insolvent; // final-week cb_balance < 0
    std::vector<double> per_seed_final_cb;
    std::vector<double> per_seed_final_gov;

    // Distribution of the per-seed average weekly sales.
    double mean_avg_sales = 0.0;
    double std_avg_sales = 0.0; // population standard deviation
    double min_avg_sales = 0.0;
    double max_avg_sales = 0.0;
    double p01_avg_sales = 0.0; // nearest-rank percentiles
    double p99_avg_sales = 0.0;

    double mean_defaults_per_run = 0.0;
    double frac_runs_with_default = 0.0;
    double frac_runs_ge2_defaults = 0.0;
    double frac_runs_terminal_insolvent = 0.0;
    double frac_weeks_noncompliant = 0.0; // pooled over all runs and weeks
    double mean_final_cb = 0.0;
    double mean_final_gov = 0.0;
};

// Nearest-rank percentile: the ceil(pct/100 * n)-th smallest value.
double nearest_rank_percentile(std::vector<double> values, double pct);

// One run per seed. Seeds must be non-empty and pairwise distinct; the
// aggregation is independent of execution order, and each run inside the
// ensemble is identical to a standalone run with the same seed.
EnsembleSummary run_ensemble(const SimParams& params, std::span<const std::uint64_t> seeds);

// Deterministic seed for replicate `replicate` of grid point `point`.
// Fixed documented formula; distinct for desk-scale grids.
std::uint64_t sweep_seed(std::uint64_t base_seed, std::size_t point_index, std::size_t replicate);

// One grid point: parameter overrides applied on top of the base record,
// each value written as it would appear in a config file (e.g. "-15",
// "market").
struct SweepPoint {
    std::vector<std::pair<std::string, std::string>> overrides;
};

struct SweepRow {
    SweepPoint point;
    EnsembleSummary summary;
};

struct SweepTable {
    std::vector<SweepRow> rows; // in grid declaration order
};

// One ensemble per grid point, seeds_per_point seeds each, derived via
// sweep_seed. An invalid grid point raises an error naming the point.
SweepTable sweep(const SimParams& base, const std::vector<SweepPoint>& grid, int seeds_per_point,
                 std::uint64_t base_seed);

} // namespace ecosim
