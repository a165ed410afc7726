#include "ecosim/csv.hpp"

#include <sstream>

#include "ecosim/text.hpp"

namespace ecosim {

std::string write_weeks_csv(const SimResult& result) {
    std::ostringstream out;
    out << "week,sales,loans,deposits,loans_outstanding,tax_revenue,cb_balance,gov_balance,"
           "compliance,default_agent,default_amount,market_price\n";
    for (const WeekRecord& week : result.weeks) {
        out << week.week << ',' << week.sales << ',' << week.loans << ','
            << format_double(week.deposits) << ',' << format_double(week.loans_outstanding) << ','
            << format_double(week.tax_revenue) << ',' << format_double(week.cb_balance) << ','
            << format_double(week.gov_balance) << ',' << format_double(week.compliance) << ',';
        if (week.default_event) {
            out << (week.default_event->agent + 1) << ',' << format_double(week.default_event->amount);
        } else {
            out << ',';
        }
        out << ',';
        if (week.market_price) out << format_double(*week.market_price);
        out << '\n';
    }
    return out.str();
}

std::string write_accounts_csv(const SimResult& result) {
    std::ostringstream out;
    out << "week";
    for (int agent = 1; agent <= result.params.n_agents; ++agent) out << ",agent_" << agent;
    out << '\n';
    for (const WeekRecord& week : result.weeks) {
        out << week.week;
        for (double balance : week.accounts) out << ',' << format_double(balance);
        out << '\n';
    }
    return out.str();
}

std::string write_ensemble_csv(const EnsembleSummary& summary) {
    std::ostringstream out;
    out << "seed,avg_weekly_sales,defaults,terminal_insolvent,noncompliant_weeks,"
           "final_cb_balance,final_gov_balance\n";
    for (std::size_t i = 0; i < summary.seeds.size(); ++i) {
        out << summary.seeds[i] << ',' << format_double(summary.per_seed_avg_sales[i]) << ','
            << summary.per_seed_defaults[i] << ',' << (summary.per_seed_terminal_insolvent[i] ? 1 : 0)
            << ',' << summary.per_seed_noncompliant_weeks[i] << ','
            << format_double(summary.per_seed_final_cb[i]) << ','
            << format_double(summary.per_seed_final_gov[i]) << '\n';
    }
    return out.str();
}

namespace {

const char* kSummaryColumns =
    "seeds,mean_avg_sales,std_avg_sales,min_avg_sales,max_avg_sales,p01_avg_sales,"
    "p99_avg_sales,mean_defaults_per_run,frac_runs_with_default,frac_runs_ge2_defaults,"
    "frac_runs_terminal_insolvent,frac_weeks_noncompliant,mean_final_cb_balance,"
    "mean_final_gov_balance";

void append_summary_row(std::ostringstream& out, const EnsembleSummary& s) {
    out << s.seeds.size() << ',' << format_double(s.mean_avg_sales) << ','
        << format_double(s.std_avg_sales) << ',' << format_double(s.min_avg_sales) << ','
        << format_double(s.max_avg_sales) << ',' << format_double(s.p01_avg_sales) << ','
        << format_double(s.p99_avg_sales) << ',' << format_double(s.mean_defaults_per_run) << ','
        << format_double(s.frac_runs_with_default) << ',' << format_double(s.frac_runs_ge2_defaults)
        << ',' << format_double(s.frac_runs_terminal_insolvent) << ','
        << format_double(s.frac_weeks_noncompliant) << ',' << format_double(s.mean_final_cb) << ','
        << format_double(s.mean_final_gov);
}

} // namespace

std::string write_ensemble_summary_csv(const EnsembleSummary& summary) {
    std::ostringstream out;
    out << kSummaryColumns << '\n';
    append_summary_row(out, summary);
    out << '\n';
    return out.str();
}

std::string write_sweep_csv(const SweepTable& table) {
    std::ostringstream out;
    out << "point,param,value," << kSummaryColumns << '\n';
    for (std::size_t row = 0; row < table.rows.size(); ++row) {
        std::string params_joined;
        std::string values_joined;
        for (const auto& [key, value] : table.rows[row].point.overrides) {
            if (!params_joined.empty()) {
                params_joined += ';';
                values_joined += ';';
            }
            params_joined += key;
            values_joined += value;
        }
        out << row << ',' << params_joined << ',' << values_joined << ',';
        append_summary_row(out, table.rows[row].summary);
        out << '\n';
    }
    return out.str();
}

} // namespace ecosim
