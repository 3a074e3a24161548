// runner.hpp — executes a parsed run spec and writes its outputs

#pragma once

#include <string>

#include "giantatom/config.hpp"

namespace giantatom {

// exit codes: 0 success, 2 parse/validation, 3 numerical, 4 I/O
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

struct RunOptions {
    std::string csv_override;
    std::string svg_override;
    bool quiet{false};
};

struct RunOutcome {
    int exit_code{kExitOk};
    std::string error_kind; // empty on success
    std::string message;    // error text or one-line summary
    std::string csv_path;
    std::string svg_path;
};

int exit_code_for(const std::exception& error);

// name of the exception type as used in error reports
std::string error_kind_of(const std::exception& error);

// Runs the simulation(s) described by the spec, writes the CSV (and SVG when
// requested), and maps any failure onto the documented exit codes. Identical
// specs produce byte-identical CSV files.
RunOutcome run(const RunSpec& spec, const RunOptions& options = {});

} // namespace giantatom
