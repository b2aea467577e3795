#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "coxspin/report.hpp"

namespace coxspin::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (without the program name). Overrides replace preset
/// simple roots for verify-table.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const PresetOverrides& overrides = {});

}  // namespace coxspin::cli
