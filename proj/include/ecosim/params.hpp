#pragma once
// Simulation parameter record. Defaults reproduce the reference economy:
// ten agents, a 53-week year with an inactive first week, a 20% transaction
// tax fully respent, and a bank that lends to mildly indebted accounts only.

#include <stdexcept>
#include <string>
#include <vector>

namespace ecosim {

enum class PriceMode {
    fixed,  // every purchase is purchase_hours at price_per_hour
    market, // weekly average of pairwise equilibrium prices, demand varies
};

struct SimParams {
    int n_agents = 10;                         // number of agents (N)
    int weeks = 53;                            // number of weeks (W); week 1 is the stored initial week
    int weekly_transactions = 10;              // (T) echoed in config/metadata; the weekly loop runs over agents, not T
    double loan_rate_weekly = 0.07 / 52.0;     // weekly interest rate charged on loans (rl)
    double deposit_rate_weekly = 0.06 / 52.0;  // weekly interest rate paid on deposits (rd)
    double tax_rate = 0.20;                    // tax rate on transactions
    double spend_taxes_multiple = 1.0;         // government spends this multiple of taxes collected
    double banker_spend_fraction = 0.0;        // banker spending as a fraction of loan interest
    int mood_odds = 7;                         // odds out of 10 of buying on credit
    double default_limit = -500.0;             // balances below this always default
    double loan_limit = -5.0;                  // bank won't lend to accounts below this
    double initial_reserves = 10.0;            // commercial bank's opening balance at the central bank
    double reserve_ratio = 0.1;                // fraction of deposits that must be held as reserves
    double purchase_hours = 5.0;               // hours of service per purchase
    double price_per_hour = 1.0;               // price of one hour of service (fixed mode)
    int midband_buy_odds = 9;                  // odds out of 10 that a mid-band account buys
    double upper_threshold = 10.0;             // balance above which an agent always buys
    double tax_seller_share = 1.0;             // 1 = seller pays the tax, 0 = buyer pays, else split
    PriceMode price_mode = PriceMode::fixed;   // fixed price or weekly market price
    double k_slope = 1.0 / 5.0;                // slope of the linear price curves (K, market mode)
    double e_sensitivity = 1.0 / 10.0;         // balance sensitivity of the price curves (e, market mode)

    bool operator==(const SimParams&) const = default;
};

// All violated constraints, in field order; empty means the record is valid.
std::vector<std::string> validate(const SimParams& params);

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

// Throws ValidationError listing every violated constraint.
void validate_or_throw(const SimParams& params);

std::string to_string(PriceMode mode);

} // namespace ecosim
