#pragma once

// Command-line front end: eval, verify, sharpness, plotdata. Emits CSV or
// JSON with a fixed schema and deterministic byte-for-byte output for a
// given configuration. Exit codes: 0 all checks passed, 1 verification
// violations, 2 usage error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace meanbound::cli {

enum class OutputFormat { csv, json };

/// Run parameters shared by the subcommands; defaults match the documented
/// contracts (samples 1e5, seed 42, 200 grid points, CSV to stdout).
struct RunConfig {
    long samples = 100000;
    std::uint64_t seed = 42;
    int grid_points = 200;
    OutputFormat format = OutputFormat::csv;
    std::string output_path;  ///< empty = standard output
    double band = 1e-13;      ///< verify: strictness band, relative to scale
    double x_tol = 1e-14;     ///< sharpness: bisection interval width
};

/// Parses argv and dispatches. Diagnostics go to err, results to out (or the
/// file named by --output).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, for callers holding the arguments as strings (argv[0] excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace meanbound::cli
