#include "ecosim/market.hpp"

#include <algorithm>
#include <stdexcept>

#include "ecosim/engine.hpp"

namespace ecosim {

double buyer_price(double hours, double balance, double k_slope, double e_sensitivity) {
    return 2.0 - k_slope * (hours - e_sensitivity * balance);
}

double seller_price(double hours, double balance, double k_slope, double e_sensitivity) {
    return k_slope * (hours + e_sensitivity * balance);
}

PairQuote pair_quote(double buyer_balance, double seller_balance, double k_slope,
                     double e_sensitivity) {
    if (!(k_slope > 0.0)) throw std::invalid_argument("pair_quote: k_slope must be > 0");
    PairQuote quote;
    quote.hours = 1.0 / k_slope + e_sensitivity * (buyer_balance - seller_balance) / 2.0;
    quote.price = 1.0 + k_slope * e_sensitivity * (buyer_balance + seller_balance) / 2.0;
    return quote;
}

double weekly_market_price(std::span<const PairQuote> quotes) {
    if (quotes.empty()) throw std::invalid_argument("weekly_market_price: no quotes");
    double total = 0.0;
    for (const PairQuote& quote : quotes) total += quote.price;
    return total / static_cast<double>(quotes.size());
}

double demand_at_price(double balance, double price, double k_slope, double e_sensitivity) {
    if (!(k_slope > 0.0)) throw std::invalid_argument("demand_at_price: k_slope must be > 0");
    return std::max(0.0, 2.0 / k_slope + e_sensitivity * balance - price / k_slope);
}

WeekRecord market_step_week(EconomyState& state, Rng& rng, const SimParams& params) {
    if (state.week >= params.weeks) {
        throw std::invalid_argument("market_step_week: run already at its final week");
    }
    const std::vector<int> sellers = assign_sellers(params.n_agents, rng);

    // Quotes and demands both use the balances as they stand before any of
    // this week's postings, so the market price is well defined up front.
    const std::vector<double> opening = state.accounts;
    std::vector<PairQuote> quotes;
    quotes.reserve(opening.size());
    for (int buyer = 0; buyer < params.n_agents; ++buyer) {
        const auto b = static_cast<std::size_t>(buyer);
        PairQuote quote = pair_quote(opening[b], opening[static_cast<std::size_t>(sellers[b])],
                                     params.k_slope, params.e_sensitivity);
        quote.buyer = buyer;
        quote.seller = sellers[b];
        quotes.push_back(quote);
    }
    const double price = quotes.empty() ? 1.0 : weekly_market_price(quotes);

    std::vector<double> amounts(opening.size());
    for (std::size_t i = 0; i < opening.size(); ++i) {
        amounts[i] = price * demand_at_price(opening[i], price, params.k_slope, params.e_sensitivity);
    }

    const TransactionTotals totals =
        engine_detail::purchase_round(state, sellers, rng, params, amounts);
    return engine_detail::complete_week(state, rng, params, totals, price);
}

} // namespace ecosim
