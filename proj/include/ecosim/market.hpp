#pragma once
// Variable-price extension: linear buyer/seller price-quantity curves.
//
//   buyer:  p = 2 - K (h - e A)
//   seller: p = K (h + e A)
//
// Equating them for buyer i and seller j gives the pairwise equilibrium
//   h_ij = 1/K + e (A_i - A_j) / 2
//   p_ij = 1 + K e (A_i + A_j) / 2
// and the week's market price is the average of p_ij over all buyer-seller
// pairs picked that week. All trades then execute at that price, each buyer
// taking h_i = 2/K + e A_i - p/K hours (clamped at zero). With every balance
// at zero and K = 1/5, e = 1/10 this collapses to the fixed-mode trade of
// 5 hours at 1 fiat dollar per hour.

#include <span>
#include <vector>

#include "ecosim/economy.hpp"
#include "ecosim/params.hpp"
#include "ecosim/rng.hpp"

namespace ecosim {

struct PairQuote {
    int buyer = -1;  // agent indices; -1 when not tied to a specific pair
    int seller = -1;
    double hours = 0.0;
    double price = 0.0;
};

// Price a buyer with balance `balance` accepts for `hours` of service.
double buyer_price(double hours, double balance, double k_slope, double e_sensitivity);

// Price a seller with balance `balance` asks for `hours` of service.
double seller_price(double hours, double balance, double k_slope, double e_sensitivity);

// The quantity-price point solving both curves for the given balances.
// Throws std::invalid_argument unless k_slope > 0.
PairQuote pair_quote(double buyer_balance, double seller_balance, double k_slope,
                     double e_sensitivity);

// Arithmetic mean of the pairwise prices. Throws std::invalid_argument on an
// empty set; the weekly step substitutes price 1 before that can happen.
double weekly_market_price(std::span<const PairQuote> quotes);

// Hours demanded at the market price, clamped at zero.
double demand_at_price(double balance, double price, double k_slope, double e_sensitivity);

// One full market-mode week: same skeleton as the fixed-price step, with the
// transaction amount p * demand_at_price(A_i, p) in every purchase branch.
// Quotes, the market price, and demands all come from the balances at the
// start of the week's round, so a zero-balance economy trades identically to
// fixed mode; a clamped (zero) demand consumes the branch's coin draw but
// posts nothing and counts no sale.
WeekRecord market_step_week(EconomyState& state, Rng& rng, const SimParams& params);

} // namespace ecosim
