#include "ecosim/params.hpp"

#include <cmath>
#include <sstream>

namespace ecosim {

namespace {

std::string joined(const std::vector<std::string>& parts) {
    std::ostringstream out;
    out << "invalid parameters: ";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out << "; ";
        out << parts[i];
    }
    return out.str();
}

} // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(joined(violations)), violations_(std::move(violations)) {}

std::vector<std::string> validate(const SimParams& p) {
    std::vector<std::string> errors;
    auto fail = [&errors](const std::string& message) { errors.push_back(message); };
    auto require_finite = [&fail](const char* name, double value) {
        if (!std::isfinite(value)) {
            fail(std::string(name) + " must be finite");
            return false;
        }
        return true;
    };

    if (p.n_agents < 2) fail("n_agents must be at least 2, seller selection needs a counterparty (got " + std::to_string(p.n_agents) + ")");
    if (p.weeks < 2) fail("weeks must be at least 2, week 1 is the inactive initial week (got " + std::to_string(p.weeks) + ")");
    if (p.weekly_transactions < 1) fail("weekly_transactions must be positive (got " + std::to_string(p.weekly_transactions) + ")");
    if (require_finite("loan_rate_weekly", p.loan_rate_weekly) && p.loan_rate_weekly < 0.0) fail("loan_rate_weekly must be >= 0");
    if (require_finite("deposit_rate_weekly", p.deposit_rate_weekly) && p.deposit_rate_weekly < 0.0) fail("deposit_rate_weekly must be >= 0");
    if (require_finite("tax_rate", p.tax_rate) && (p.tax_rate < 0.0 || p.tax_rate > 1.0)) fail("tax_rate must be in [0, 1]");
    if (require_finite("spend_taxes_multiple", p.spend_taxes_multiple) && p.spend_taxes_multiple < 0.0) fail("spend_taxes_multiple must be >= 0");
    if (require_finite("banker_spend_fraction", p.banker_spend_fraction) && (p.banker_spend_fraction < 0.0 || p.banker_spend_fraction > 1.0)) fail("banker_spend_fraction must be in [0, 1]");
    if (p.mood_odds < 0 || p.mood_odds > 10) fail("mood_odds must be in [0, 10] (got " + std::to_string(p.mood_odds) + ")");
    const bool default_limit_finite = require_finite("default_limit", p.default_limit);
    const bool loan_limit_finite = require_finite("loan_limit", p.loan_limit);
    if (loan_limit_finite && p.loan_limit > 0.0) fail("loan_limit must be <= 0");
    if (default_limit_finite && loan_limit_finite && !(p.default_limit < p.loan_limit)) fail("default_limit must be strictly below loan_limit");
    require_finite("initial_reserves", p.initial_reserves);
    if (require_finite("reserve_ratio", p.reserve_ratio) && (p.reserve_ratio < 0.0 || p.reserve_ratio > 1.0)) fail("reserve_ratio must be in [0, 1]");
    if (require_finite("purchase_hours", p.purchase_hours) && p.purchase_hours <= 0.0) fail("purchase_hours must be > 0");
    if (require_finite("price_per_hour", p.price_per_hour) && p.price_per_hour <= 0.0) fail("price_per_hour must be > 0");
    if (p.midband_buy_odds < 0 || p.midband_buy_odds > 10) fail("midband_buy_odds must be in [0, 10] (got " + std::to_string(p.midband_buy_odds) + ")");
    require_finite("upper_threshold", p.upper_threshold);
    if (require_finite("tax_seller_share", p.tax_seller_share) && (p.tax_seller_share < 0.0 || p.tax_seller_share > 1.0)) fail("tax_seller_share must be in [0, 1]");
    if (require_finite("k_slope", p.k_slope) && p.k_slope <= 0.0) fail("k_slope must be > 0");
    if (require_finite("e_sensitivity", p.e_sensitivity) && p.e_sensitivity < 0.0) fail("e_sensitivity must be >= 0");
    return errors;
}

void validate_or_throw(const SimParams& params) {
    auto errors = validate(params);
    if (!errors.empty()) throw ValidationError(std::move(errors));
}

std::string to_string(PriceMode mode) {
    return mode == PriceMode::market ? "market" : "fixed";
}

} // namespace ecosim
