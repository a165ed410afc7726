#include "ecosim/economy.hpp"

#include <stdexcept>
#include <string>

namespace ecosim {

EconomyState init_state(const SimParams& params) {
    validate_or_throw(params);
    EconomyState state;
    state.week = 1;
    state.accounts.assign(static_cast<std::size_t>(params.n_agents), 0.0);
    state.cb_balance = params.initial_reserves;
    state.gov_balance = 0.0;
    state.compliance_prev = 0.0;
    return state;
}

double paper_average(std::span<const double> series, int weeks) {
    if (static_cast<int>(series.size()) != weeks) {
        throw std::invalid_argument("paper_average: series length " + std::to_string(series.size()) +
                                    " does not match weeks " + std::to_string(weeks));
    }
    double total = 0.0;
    for (double value : series) total += value;
    return total / static_cast<double>(weeks);
}

} // namespace ecosim
