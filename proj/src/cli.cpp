#include "ecosim/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecosim/config.hpp"
#include "ecosim/csv.hpp"
#include "ecosim/engine.hpp"
#include "ecosim/harness.hpp"
#include "ecosim/svg.hpp"

namespace ecosim {

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

nlohmann::json params_json(const SimParams& params) {
    return nlohmann::json::parse(serialize_params(params));
}

void write_metadata(const fs::path& dir, nlohmann::json meta) {
    meta["artifact_version"] = std::string(kArtifactVersion);
    write_file(dir / "metadata.json", meta.dump(2) + "\n");
}

std::vector<std::string> split_values(const std::string& joined) {
    std::vector<std::string> values;
    std::string item;
    std::istringstream in(joined);
    while (std::getline(in, item, ',')) values.push_back(item);
    return values;
}

void write_run_outputs(const SimResult& result, const fs::path& dir, bool svg) {
    write_file(dir / "weeks.csv", write_weeks_csv(result));
    write_file(dir / "accounts.csv", write_accounts_csv(result));
    if (!svg) return;

    std::vector<double> sales, loans, gov, cb, compliance;
    for (const WeekRecord& week : result.weeks) {
        sales.push_back(week.sales);
        loans.push_back(week.loans);
        gov.push_back(week.gov_balance);
        cb.push_back(week.cb_balance);
        compliance.push_back(week.compliance);
    }
    write_file(dir / "weekly_sales.svg", render_chart_svg(sales, ChartKind::bar, "week", "weekly sales"));
    write_file(dir / "government_account.svg",
               render_chart_svg(gov, ChartKind::line, "week", "government account"));
    write_file(dir / "commercial_bank_account.svg",
               render_chart_svg(cb, ChartKind::line, "week", "commercial bank account"));
    write_file(dir / "compliance.svg", render_chart_svg(compliance, ChartKind::line, "week", "compliance"));
    write_file(dir / "weekly_loans.svg", render_chart_svg(loans, ChartKind::bar, "week", "weekly loans"));
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"ecosim: deterministic random-transaction service-economy simulator"};
    app.set_version_flag("--version", std::string(kArtifactVersion));
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string mode;
    std::string sweep_param;
    std::string sweep_values;
    std::uint64_t seed = 0;
    std::uint64_t base_seed = 0;
    int n_seeds = 0;
    bool svg = false;

    CLI::App* run = app.add_subcommand("run", "simulate one seeded run");
    run->add_option("--config", config_path, "JSON parameter file (defaults when omitted)");
    run->add_option("--seed", seed, "random seed (default 0)");
    run->add_option("--out", out_dir, "output directory")->required();
    run->add_flag("--svg", svg, "also write the five standard figures");
    run->add_option("--mode", mode, "override the price mode")
        ->check(CLI::IsMember({"fixed", "market"}));

    CLI::App* ensemble = app.add_subcommand("ensemble", "run one parameter set over many seeds");
    ensemble->add_option("--config", config_path, "JSON parameter file (defaults when omitted)");
    ensemble->add_option("--seeds", n_seeds, "number of seeds")->required()
        ->check(CLI::PositiveNumber);
    ensemble->add_option("--base-seed", base_seed, "first seed; run i uses base-seed + i");
    ensemble->add_option("--out", out_dir, "output directory")->required();

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "ensembles over a grid of one parameter");
    sweep_cmd->add_option("--config", config_path, "JSON parameter file (defaults when omitted)");
    sweep_cmd->add_option("--param", sweep_param, "parameter name (long name or alias)")->required();
    sweep_cmd->add_option("--values", sweep_values, "comma-separated values, e.g. -5,-15")->required();
    sweep_cmd->add_option("--seeds", n_seeds, "seeds per grid point")->required()
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--base-seed", base_seed, "base of the per-point seed derivation");
    sweep_cmd->add_option("--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 1;
    }

    try {
        SimParams params = config_path.empty() ? SimParams{} : load_config_file(config_path);
        if (!mode.empty()) params.price_mode = mode == "market" ? PriceMode::market : PriceMode::fixed;
        validate_or_throw(params);

        const fs::path dir(out_dir);
        fs::create_directories(dir);

        if (run->parsed()) {
            const SimResult result = run_simulation(params, seed);
            write_run_outputs(result, dir, svg);
            nlohmann::json meta;
            meta["command"] = "run";
            meta["seed"] = seed;
            meta["params"] = params_json(params);
            write_metadata(dir, meta);
        } else if (ensemble->parsed()) {
            std::vector<std::uint64_t> seeds(static_cast<std::size_t>(n_seeds));
            for (std::size_t i = 0; i < seeds.size(); ++i) {
                seeds[i] = base_seed + static_cast<std::uint64_t>(i);
            }
            const EnsembleSummary summary = run_ensemble(params, seeds);
            write_file(dir / "ensemble.csv", write_ensemble_csv(summary));
            write_file(dir / "ensemble_summary.csv", write_ensemble_summary_csv(summary));
            nlohmann::json meta;
            meta["command"] = "ensemble";
            meta["base_seed"] = base_seed;
            meta["seed_count"] = n_seeds;
            meta["seed_derivation"] = "base_seed + run_index";
            meta["params"] = params_json(params);
            write_metadata(dir, meta);
        } else {
            const std::vector<std::string> values = split_values(sweep_values);
            if (values.empty()) throw ConfigError("sweep: --values is empty");
            std::vector<SweepPoint> grid;
            grid.reserve(values.size());
            for (const std::string& value : values) grid.push_back({{{sweep_param, value}}});
            const SweepTable table = sweep(params, grid, n_seeds, base_seed);
            write_file(dir / "sweep.csv", write_sweep_csv(table));
            nlohmann::json meta;
            meta["command"] = "sweep";
            meta["base_seed"] = base_seed;
            meta["seeds_per_point"] = n_seeds;
            meta["param"] = sweep_param;
            meta["values"] = values;
            meta["seed_derivation"] = "base_seed*1000003 + point_index*10007 + replicate_index";
            meta["params"] = params_json(params);
            write_metadata(dir, meta);
        }
        return 0;
    } catch (const ConfigError& error) {
        std::cerr << "configuration error: " << error.what() << '\n';
        return 1;
    } catch (const ValidationError& error) {
        std::cerr << "configuration error: " << error.what() << '\n';
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 2;
    }
}

} // namespace ecosim
