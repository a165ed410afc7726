#pragma once
// Core state and record types for the service economy.
//
// Money lives in three pools: agent accounts at the commercial bank, the
// commercial bank's own account at the central bank, and the government's
// account at the central bank. Every weekly update is a transfer between
// these pools, so their sum is conserved for the life of a run.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ecosim/params.hpp"

namespace ecosim {

// A loan write-off: the lowest account was reset to zero and the bank
// absorbed the (negative) balance. Agent indices are 0-based internally;
// serialized outputs label agents from 1.
struct DefaultEvent {
    int agent = 0;     // index of the defaulting agent
    double amount = 0; // balance at the moment of default (<= 0)
    int week = 0;      // week in which the default occurred

    bool operator==(const DefaultEvent&) const = default;
};

struct EconomyState {
    int week = 1;                  // 1-based; week 1 is the stored initial, inactive week
    std::vector<double> accounts;  // agent balances; negative = outstanding loan
    double cb_balance = 0.0;       // commercial bank's account at the central bank (its capital)
    double gov_balance = 0.0;      // government account; may go negative without limit
    double compliance_prev = 0.0;  // previous week's reserve-requirement compliance
};

// One week's observables. `accounts` is the stored snapshot, taken after the
// fiscal update and with a defaulted agent's column zeroed.
struct WeekRecord {
    int week = 0;
    int sales = 0;
    int loans = 0;
    double deposits = 0.0;          // D: sum of positive balances after the week's purchases
    double loans_outstanding = 0.0; // L: -sum of negative balances after the week's purchases
    double tax_revenue = 0.0;
    double cb_balance = 0.0;        // end-of-week values
    double gov_balance = 0.0;
    double compliance = 0.0;
    std::optional<DefaultEvent> default_event;
    std::optional<double> market_price; // set in market mode only
    std::vector<double> accounts;

    bool operator==(const WeekRecord&) const = default;
};

struct SimResult {
    SimParams params;
    std::uint64_t seed = 0;
    std::vector<WeekRecord> weeks;     // length = params.weeks; entry 0 is the initial week
    double average_weekly_sales = 0.0; // total sales / weeks, inactive first week included
    double average_bank_account = 0.0;

    bool operator==(const SimResult&) const = default;
};

// Fresh state: all accounts zero, bank at its initial reserves, government at
// zero, compliance zero. Throws ValidationError listing every violated
// parameter constraint.
EconomyState init_state(const SimParams& params);

// Mean over the full horizon: sum(series) / weeks. The divisor deliberately
// includes the zero-activity first week. Throws std::invalid_argument when
// the series length does not match `weeks`.
double paper_average(std::span<const double> series, int weeks);

} // namespace ecosim
