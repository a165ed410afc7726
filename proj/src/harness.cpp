#include "ecosim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "ecosim/config.hpp"
#include "ecosim/engine.hpp"

namespace ecosim {

namespace {

struct RunExtract {
    double avg_sales = 0.0;
    int defaults = 0;
    int noncompliant_weeks = 0;
    bool terminal_insolvent = false;
    double final_cb = 0.0;
    double final_gov = 0.0;
};

RunExtract extract(const SimResult& result) {
    RunExtract e;
    e.avg_sales = result.average_weekly_sales;
    for (const WeekRecord& week : result.weeks) {
        if (week.default_event) ++e.defaults;
        if (week.compliance < 0.0) ++e.noncompliant_weeks;
    }
    const WeekRecord& last = result.weeks.back();
    e.terminal_insolvent = last.cb_balance < 0.0;
    e.final_cb = last.cb_balance;
    e.final_gov = last.gov_balance;
    return e;
}

} // namespace

double nearest_rank_percentile(std::vector<double> values, double pct) {
    if (values.empty()) throw std::invalid_argument("nearest_rank_percentile: empty input");
    if (pct <= 0.0 || pct > 100.0) {
        throw std::invalid_argument("nearest_rank_percentile: pct must be in (0, 100]");
    }
    std::sort(values.begin(), values.end());
    const auto n = static_cast<double>(values.size());
    auto rank = static_cast<std::size_t>(std::ceil(pct / 100.0 * n));
    rank = std::clamp<std::size_t>(rank, 1, values.size());
    return values[rank - 1];
}

EnsembleSummary run_ensemble(const SimParams& params, std::span<const std::uint64_t> seeds) {
    if (seeds.empty()) throw std::invalid_argument("run_ensemble: seed list is empty");
    {
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t seed : seeds) {
            if (!seen.insert(seed).second) {
                throw std::invalid_argument("run_ensemble: duplicate seed " + std::to_string(seed));
            }
        }
    }
    validate_or_throw(params);

    std::vector<RunExtract> extracts(seeds.size());
    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            extracts[i] = extract(run_simulation(params, seeds[i]));
        }
    };

    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t n_runs = seeds.size();
    if (hw > 1 && n_runs >= 32) {
        const std::size_t n_workers = std::min<std::size_t>(hw, n_runs);
        std::vector<std::thread> workers;
        workers.reserve(n_workers);
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (std::size_t w = 0; w < n_workers; ++w) {
            const std::size_t begin = n_runs * w / n_workers;
            const std::size_t end = n_runs * (w + 1) / n_workers;
            workers.emplace_back([&, begin, end] {
                try {
                    run_range(begin, end);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (std::thread& worker : workers) worker.join();
        if (failure) std::rethrow_exception(failure);
    } else {
        run_range(0, n_runs);
    }

    EnsembleSummary summary;
    summary.params = params;
    summary.seeds.assign(seeds.begin(), seeds.end());
    summary.per_seed_avg_sales.reserve(n_runs);
    summary.per_seed_defaults.reserve(n_runs);
    summary.per_seed_noncompliant_weeks.reserve(n_runs);
    summary.per_seed_terminal_insolvent.reserve(n_runs);
    summary.per_seed_final_cb.reserve(n_runs);
    summary.per_seed_final_gov.reserve(n_runs);
    for (const RunExtract& e : extracts) {
        summary.per_seed_avg_sales.push_back(e.avg_sales);
        summary.per_seed_defaults.push_back(e.defaults);
        summary.per_seed_noncompliant_weeks.push_back(e.noncompliant_weeks);
        summary.per_seed_terminal_insolvent.push_back(e.terminal_insolvent);
        summary.per_seed_final_cb.push_back(e.final_cb);
        summary.per_seed_final_gov.push_back(e.final_gov);
    }

    const auto count = static_cast<double>(n_runs);
    double total = 0.0;
    for (double v : summary.per_seed_avg_sales) total += v;
    summary.mean_avg_sales = total / count;
    double sq_dev = 0.0;
    for (double v : summary.per_seed_avg_sales) {
        const double d = v - summary.mean_avg_sales;
        sq_dev += d * d;
    }
    summary.std_avg_sales = std::sqrt(sq_dev / count);
    const auto [min_it, max_it] =
        std::minmax_element(summary.per_seed_avg_sales.begin(), summary.per_seed_avg_sales.end());
    summary.min_avg_sales = *min_it;
    summary.max_avg_sales = *max_it;
    summary.p01_avg_sales = nearest_rank_percentile(summary.per_seed_avg_sales, 1.0);
    summary.p99_avg_sales = nearest_rank_percentile(summary.per_seed_avg_sales, 99.0);

    double defaults_total = 0.0;
    double runs_with_default = 0.0;
    double runs_ge2 = 0.0;
    double insolvent = 0.0;
    double noncompliant_weeks = 0.0;
    double cb_total = 0.0;
    double gov_total = 0.0;
    for (std::size_t i = 0; i < n_runs; ++i) {
        defaults_total += summary.per_seed_defaults[i];
        if (summary.per_seed_defaults[i] >= 1) runs_with_default += 1.0;
        if (summary.per_seed_defaults[i] >= 2) runs_ge2 += 1.0;
        if (summary.per_seed_terminal_insolvent[i]) insolvent += 1.0;
        noncompliant_weeks += summary.per_seed_noncompliant_weeks[i];
        cb_total += summary.per_seed_final_cb[i];
        gov_total += summary.per_seed_final_gov[i];
    }
    summary.mean_defaults_per_run = defaults_total / count;
    summary.frac_runs_with_default = runs_with_default / count;
    summary.frac_runs_ge2_defaults = runs_ge2 / count;
    summary.frac_runs_terminal_insolvent = insolvent / count;
    summary.frac_weeks_noncompliant = noncompliant_weeks / (count * params.weeks);
    summary.mean_final_cb = cb_total / count;
    summary.mean_final_gov = gov_total / count;
    return summary;
}

std::uint64_t sweep_seed(std::uint64_t base_seed, std::size_t point_index, std::size_t replicate) {
    return base_seed * 1000003ULL + static_cast<std::uint64_t>(point_index) * 10007ULL +
           static_cast<std::uint64_t>(replicate);
}

SweepTable sweep(const SimParams& base, const std::vector<SweepPoint>& grid, int seeds_per_point,
                 std::uint64_t base_seed) {
    if (grid.empty()) throw std::invalid_argument("sweep: empty grid");
    if (seeds_per_point < 1) throw std::invalid_argument("sweep: seeds_per_point must be >= 1");

    SweepTable table;
    table.rows.reserve(grid.size());
    for (std::size_t point = 0; point < grid.size(); ++point) {
        SimParams params = base;
        try {
            for (const auto& [key, value] : grid[point].overrides) {
                apply_override(params, key, value);
            }
            validate_or_throw(params);
        } catch (const std::exception& error) {
            std::string label;
            for (const auto& [key, value] : grid[point].overrides) {
                if (!label.empty()) label += ", ";
                label += key + "=" + value;
            }
            throw ConfigError("sweep: grid point " + std::to_string(point) + " (" + label +
                              ") is invalid: " + error.what());
        }

        std::vector<std::uint64_t> seeds(static_cast<std::size_t>(seeds_per_point));
        for (std::size_t replicate = 0; replicate < seeds.size(); ++replicate) {
            seeds[replicate] = sweep_seed(base_seed, point, replicate);
        }
        table.rows.push_back({grid[point], run_ensemble(params, seeds)});
    }
    return table;
}

} // namespace ecosim
