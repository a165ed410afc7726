#pragma once
// Command-line entry point, kept in the library so the whole surface is
// testable in-process. The installed binary is a thin wrapper around
// cli_main.
//
// Subcommands:
//   run       one seeded simulation -> weeks.csv, accounts.csv, metadata.json
//             (plus the five standard figures with --svg)
//   ensemble  many seeds, one parameter set -> per-seed and summary CSVs
//   sweep     ensembles over a value grid of one parameter -> sweep.csv
//
// Exit codes: 0 success, 1 configuration error, 2 runtime failure.

#include <string_view>

namespace ecosim {

inline constexpr std::string_view kArtifactVersion = "0.1.0";

int cli_main(int argc, const char* const* argv);

} // namespace ecosim
