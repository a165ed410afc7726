#pragma once
// CSV serialization of runs, ensembles, and sweeps. Reals are rendered in
// shortest round-trip form, agent labels are 1-based, rows follow week /
// seed / grid order, lines end with '\n'.

#include <string>

#include "ecosim/economy.hpp"
#include "ecosim/harness.hpp"

namespace ecosim {

// One row per week. Header:
// week,sales,loans,deposits,loans_outstanding,tax_revenue,cb_balance,
// gov_balance,compliance,default_agent,default_amount,market_price
// default_* are empty when no default occurred; market_price is empty in
// fixed mode and on the initial week.
std::string write_weeks_csv(const SimResult& result);

// Stored weekly account snapshots: week,agent_1..agent_N. A defaulted
// agent's column holds 0 in its default week.
std::string write_accounts_csv(const SimResult& result);

// One row per seed of an ensemble.
std::string write_ensemble_csv(const EnsembleSummary& summary);

// The ensemble's aggregate statistics as a single data row.
std::string write_ensemble_summary_csv(const EnsembleSummary& summary);

// One row per grid point; multiple overrides at one point are joined with
// ';' in the param and value columns.
std::string write_sweep_csv(const SweepTable& table);

} // namespace ecosim
