#pragma once
// Parameter-file handling. The configuration document is a flat JSON object;
// every parameter is optional and falls back to its default. Keys may be the
// long field names (n_agents, weeks, loan_rate_weekly, ...) or the classic
// short aliases (N, W, rl, rd, tax, spendtaxes, spend, mood, defaultlimit,
// loanlimit, T). Unknown keys are rejected so typos cannot silently fall
// back to a default.

#include <filesystem>
#include <stdexcept>
#include <string>

#include "ecosim/params.hpp"

namespace ecosim {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses a configuration document. Whitespace-only text means "all
// defaults". Throws ConfigError (unknown key, duplicate key, type mismatch)
// or ValidationError (constraint violations, all listed).
SimParams load_config(const std::string& text);

// load_config on a file's contents; errors are prefixed with the path.
SimParams load_config_file(const std::filesystem::path& path);

// Canonical JSON document with every long-name key; load_config on the
// output reproduces the record exactly.
std::string serialize_params(const SimParams& params);

// Sets one parameter from its config-file literal (e.g. "-15", "0.2",
// "market"). Key may be a long name or alias. Range constraints are checked
// by the caller via validate(); parse and type errors throw ConfigError.
void apply_override(SimParams& params, const std::string& key, const std::string& value);

} // namespace ecosim
