#include "ecosim/engine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "ecosim/market.hpp"

namespace ecosim {

std::vector<int> assign_sellers(int n_agents, Rng& rng) {
    if (n_agents < 2) throw std::invalid_argument("assign_sellers: need at least 2 agents");
    std::vector<int> sellers(static_cast<std::size_t>(n_agents));
    for (int buyer = 0; buyer < n_agents; ++buyer) {
        int seller = rng.uniform_int(n_agents) - 1;
        while (seller == buyer) seller = rng.uniform_int(n_agents) - 1;
        sellers[static_cast<std::size_t>(buyer)] = seller;
    }
    return sellers;
}

double post_sale(std::vector<double>& accounts, int buyer, int seller, double amount,
                 const SimParams& params) {
    if (buyer == seller) throw std::invalid_argument("post_sale: buyer and seller must differ");
    assert(amount > 0.0);
    const double share = params.tax_seller_share;
    accounts[static_cast<std::size_t>(buyer)] -= amount * (1.0 + params.tax_rate * (1.0 - share));
    accounts[static_cast<std::size_t>(seller)] += amount * (1.0 - params.tax_rate * share);
    return params.tax_rate * amount;
}

namespace engine_detail {

TransactionTotals purchase_round(EconomyState& state, std::span<const int> sellers, Rng& rng,
                                 const SimParams& params, std::span<const double> amounts) {
    TransactionTotals totals;
    // The gate reads last week's closing values; this week's bank update has
    // not run yet, so the live fields still hold them.
    const bool lending_open = state.compliance_prev >= 0.0 && state.cb_balance >= 0.0;
    auto& accounts = state.accounts;
    const int n = params.n_agents;
    for (int i = 0; i < n; ++i) {
        const auto b = static_cast<std::size_t>(i);
        // credit branch
        if (accounts[b] >= params.loan_limit && accounts[b] <= 0.0 && lending_open) {
            const int coin = rng.uniform_int(10);
            if (coin <= params.mood_odds && amounts[b] > 0.0) {
                totals.tax_accrued += post_sale(accounts, i, sellers[b], amounts[b], params);
                ++totals.sales;
                ++totals.loans;
            }
        }
        // mid band
        if (accounts[b] > 0.0 && accounts[b] < params.upper_threshold) {
            const int coin = rng.uniform_int(10);
            if (coin <= params.midband_buy_odds && amounts[b] > 0.0) {
                totals.tax_accrued += post_sale(accounts, i, sellers[b], amounts[b], params);
                ++totals.sales;
            }
        }
        // rich: always buys
        if (accounts[b] > params.upper_threshold && amounts[b] > 0.0) {
            totals.tax_accrued += post_sale(accounts, i, sellers[b], amounts[b], params);
            ++totals.sales;
        }
    }
    return totals;
}

WeekRecord complete_week(EconomyState& state, Rng& rng, const SimParams& params,
                         const TransactionTotals& totals, std::optional<double> market_price) {
    const BankTotals bank = accrue_interest_and_bank(state, params);
    const double tax_revenue =
        fiscal_update(state, totals.sales, bank.deposits, totals.tax_accrued, params);

    std::vector<double> snapshot = state.accounts;
    const std::optional<DefaultEvent> event = default_step(state, rng, params);
    if (event) snapshot[static_cast<std::size_t>(event->agent)] = 0.0;

    // Compliance uses the mid-week D and L, not values recomputed after the
    // government spent or the default hit; only cb reflects those.
    const double compliance =
        compliance_value(state.cb_balance, bank.deposits, bank.loans_outstanding, params.reserve_ratio);

    state.week += 1;
    state.compliance_prev = compliance;

    WeekRecord record;
    record.week = state.week;
    record.sales = totals.sales;
    record.loans = totals.loans;
    record.deposits = bank.deposits;
    record.loans_outstanding = bank.loans_outstanding;
    record.tax_revenue = tax_revenue;
    record.cb_balance = state.cb_balance;
    record.gov_balance = state.gov_balance;
    record.compliance = compliance;
    record.default_event = event;
    record.market_price = market_price;
    record.accounts = std::move(snapshot);
    return record;
}

} // namespace engine_detail

TransactionTotals transaction_round(EconomyState& state, std::span<const int> sellers, Rng& rng,
                                    const SimParams& params) {
    const double unit = params.purchase_hours * params.price_per_hour;
    const std::vector<double> amounts(static_cast<std::size_t>(params.n_agents), unit);
    return engine_detail::purchase_round(state, sellers, rng, params, amounts);
}

BankTotals accrue_interest_and_bank(EconomyState& state, const SimParams& params) {
    BankTotals totals;
    for (double balance : state.accounts) {
        totals.loans_outstanding -= std::min(balance, 0.0);
        totals.deposits += std::max(balance, 0.0);
    }
    for (double& balance : state.accounts) {
        balance += params.loan_rate_weekly * std::min(balance, 0.0) +
                   params.deposit_rate_weekly * std::max(balance, 0.0);
    }
    state.cb_balance += params.loan_rate_weekly * totals.loans_outstanding;

    const double banker_spend =
        params.banker_spend_fraction * params.loan_rate_weekly * totals.loans_outstanding;
    for (double& balance : state.accounts) {
        balance += banker_spend / static_cast<double>(params.n_agents);
    }
    state.cb_balance -= banker_spend;
    return totals;
}

double fiscal_update(EconomyState& state, [[maybe_unused]] int sales, double deposits,
                     double week_tax_accrued, const SimParams& params) {
    // week_tax_accrued is the summed per-sale accrual; in fixed seller-pays
    // mode it equals tax_rate * sales * purchase_hours * price_per_hour up to
    // rounding, and one accrual path serves every mode.
    assert(params.price_mode != PriceMode::fixed || params.tax_seller_share != 1.0 ||
           std::abs(week_tax_accrued - params.tax_rate * static_cast<double>(sales) *
                                           (params.purchase_hours * params.price_per_hour)) <
               1e-9 * (1.0 + std::abs(week_tax_accrued)));
    const double tax_revenue = week_tax_accrued;
    state.gov_balance += tax_revenue;
    state.gov_balance -= params.deposit_rate_weekly * deposits;

    const double gov_spend = params.spend_taxes_multiple * tax_revenue;
    for (double& balance : state.accounts) {
        balance += gov_spend / static_cast<double>(params.n_agents);
    }
    state.gov_balance -= gov_spend;
    return tax_revenue;
}

double default_probability(double balance, double default_limit) {
    if (!(default_limit < 0.0)) {
        throw std::invalid_argument("default_probability: default_limit must be negative");
    }
    if (balance < default_limit) return 1.0; // past the limit, default is certain
    if (balance > 0.0) return 0.0;           // positive accounts never default
    return balance / default_limit;          // ratio of negatives, in [0, 1]
}

std::optional<DefaultEvent> default_step(EconomyState& state, Rng& rng, const SimParams& params) {
    int worst = 0;
    const int n = static_cast<int>(state.accounts.size());
    for (int i = 1; i < n; ++i) {
        if (state.accounts[static_cast<std::size_t>(i)] < state.accounts[static_cast<std::size_t>(worst)]) {
            worst = i;
        }
    }
    const double balance = state.accounts[static_cast<std::size_t>(worst)];
    const double odds = default_probability(balance, params.default_limit);
    const double draw = rng.uniform_unit(); // consumed every week, default possible or not
    if (draw < odds) {
        state.accounts[static_cast<std::size_t>(worst)] = 0.0;
        state.cb_balance += balance;
        return DefaultEvent{worst, balance, state.week + 1};
    }
    return std::nullopt;
}

double compliance_value(double cb_balance, double deposits, double loans, double reserve_ratio) {
    return cb_balance + (1.0 - reserve_ratio) * deposits - loans;
}

WeekRecord step_week(EconomyState& state, Rng& rng, const SimParams& params) {
    if (state.week >= params.weeks) {
        throw std::invalid_argument("step_week: run already at its final week");
    }
    const std::vector<int> sellers = assign_sellers(params.n_agents, rng);
    const TransactionTotals totals = transaction_round(state, sellers, rng, params);
    return engine_detail::complete_week(state, rng, params, totals, std::nullopt);
}

SimResult run_simulation(const SimParams& params, std::uint64_t seed) {
    EconomyState state = init_state(params);
    Rng rng(seed);

    SimResult result;
    result.params = params;
    result.seed = seed;
    result.weeks.reserve(static_cast<std::size_t>(params.weeks));

    WeekRecord initial;
    initial.week = 1;
    initial.cb_balance = state.cb_balance;
    initial.gov_balance = state.gov_balance;
    initial.compliance = 0.0;
    initial.accounts = state.accounts;
    result.weeks.push_back(std::move(initial));

    while (state.week < params.weeks) {
        result.weeks.push_back(params.price_mode == PriceMode::market
                                   ? market_step_week(state, rng, params)
                                   : step_week(state, rng, params));
    }

    std::vector<double> sales_series;
    std::vector<double> cb_series;
    sales_series.reserve(result.weeks.size());
    cb_series.reserve(result.weeks.size());
    for (const WeekRecord& week : result.weeks) {
        sales_series.push_back(static_cast<double>(week.sales));
        cb_series.push_back(week.cb_balance);
    }
    result.average_weekly_sales = paper_average(sales_series, params.weeks);
    result.average_bank_account = paper_average(cb_series, params.weeks);
    return result;
}

} // namespace ecosim
