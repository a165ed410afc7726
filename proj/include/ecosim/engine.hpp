#pragma once
// The weekly update of the service economy, as a pure state machine.
//
// Each active week runs, in order:
//   1. every buyer draws a random seller (never itself);
//   2. N potential purchases, tested buyer-by-buyer against the live
//      accounts vector (credits earned as a seller earlier in the loop
//      affect later buyers' branch tests);
//   3. interest accrual on loans and deposits, banker spending;
//   4. government: tax intake, deposit-interest payment, spending;
//   5. the lowest account risks default (one probability draw per week);
//   6. reserve-requirement compliance for next week's lending gate.
//
// Purchase branches, each an independent test on the buyer's current balance:
//   credit  loan_limit <= A <= 0, bank compliant and solvent as of last
//           week: buys with mood_odds out of 10, counting a sale and a loan;
//   mid     0 < A < upper_threshold: buys with midband_buy_odds out of 10;
//   rich    A > upper_threshold: always buys.
// A balance exactly at upper_threshold falls in none of them and never buys.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ecosim/economy.hpp"
#include "ecosim/params.hpp"
#include "ecosim/rng.hpp"

namespace ecosim {

struct TransactionTotals {
    int sales = 0;
    int loans = 0;
    double tax_accrued = 0.0; // sum of per-sale taxes, used in split-tax and market modes
};

struct BankTotals {
    double loans_outstanding = 0.0; // L
    double deposits = 0.0;          // D
};

// One seller per buyer, uniform over the other agents. Drawn by repeated
// uniform_int(n) with a redraw whenever a buyer picks itself; the redraw
// order is part of the reproducibility contract.
std::vector<int> assign_sellers(int n_agents, Rng& rng);

// Posts one sale of `amount` fiat dollars and returns the tax it accrues.
// tax_seller_share splits the levy: the seller receives
// amount * (1 - tax_rate * share) while the buyer pays
// amount * (1 + tax_rate * (1 - share)); share = 1 is the classic
// seller-pays posting (buyer -amount, seller +(1-tax)*amount).
double post_sale(std::vector<double>& accounts, int buyer, int seller, double amount,
                 const SimParams& params);

// The N potential purchases at the fixed price (amount = purchase_hours *
// price_per_hour for every buyer).
TransactionTotals transaction_round(EconomyState& state, std::span<const int> sellers, Rng& rng,
                                    const SimParams& params);

// Interest and banker spending. Returns L and D measured after the purchases
// but before any interest is posted. Accounts accrue loan interest on their
// negative part and deposit interest on their positive part; the bank
// collects the loan interest and may spend a fraction of it evenly across
// all agents.
BankTotals accrue_interest_and_bank(EconomyState& state, const SimParams& params);

// Government update. The week's revenue is the summed per-sale accrual
// (tax_rate times the week's transaction volume; in fixed seller-pays mode
// that is tax_rate * sales * purchase_hours * price_per_hour). The
// government then pays the deposit interest and buys service evenly from
// all agents at spend_taxes_multiple times the revenue. Returns the tax
// revenue.
double fiscal_update(EconomyState& state, int sales, double deposits, double week_tax_accrued,
                     const SimParams& params);

// Probability that a balance defaults this week: certain below
// default_limit, zero for positive balances, linear in between.
double default_probability(double balance, double default_limit);

// Weekly default check on the lowest account (first index on ties). Exactly
// one uniform draw is consumed every week, whether or not a default is even
// possible, so draw sequences stay auditable. On default the account resets
// to zero and the bank absorbs the loss.
std::optional<DefaultEvent> default_step(EconomyState& state, Rng& rng, const SimParams& params);

// cb + (1 - reserve_ratio) * deposits - loans. Nonnegative means the bank
// meets its reserve requirement and may lend next week.
double compliance_value(double cb_balance, double deposits, double loans, double reserve_ratio);

// One full fixed-price week. Advances state.week and compliance_prev and
// returns the week's record.
WeekRecord step_week(EconomyState& state, Rng& rng, const SimParams& params);

// A whole run: initial week plus weeks 2..W, dispatching on price_mode.
SimResult run_simulation(const SimParams& params, std::uint64_t seed);

namespace engine_detail {

// Shared purchase loop: `amounts[i]` is buyer i's transaction value this
// week. A branch that fires with a non-positive amount consumes its coin
// draw but posts nothing and counts no sale.
TransactionTotals purchase_round(EconomyState& state, std::span<const int> sellers, Rng& rng,
                                 const SimParams& params, std::span<const double> amounts);

// Steps 3..6 above plus record assembly; shared by both price modes.
WeekRecord complete_week(EconomyState& state, Rng& rng, const SimParams& params,
                         const TransactionTotals& totals, std::optional<double> market_price);

} // namespace engine_detail

} // namespace ecosim
