#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wordorder::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;  // domain or configuration error
inline constexpr int kExitIo = 2;      // I/O or parse error

/// Runs one invocation. `args` excludes the program name and starts with the
/// subcommand: costs, pareto, dynamics, ingest or verify. Data goes to `out`,
/// diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wordorder::cli
