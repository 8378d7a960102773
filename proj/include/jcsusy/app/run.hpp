#pragma once

#include <string>
#include <vector>

#include "jcsusy/app/config.hpp"

namespace jcsusy::app {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitConfig = 1,
    kExitAdmissibility = 2,
    kExitVerification = 3,
};

struct RunResult {
    int exit_code = kExitSuccess;
    std::vector<std::string> files;   // artifacts written, in order
    std::vector<std::string> report;  // human-readable lines (verify checks, summaries)
    std::string error_line;           // machine-readable, empty on success
};

// Executes one configuration. Never throws: failures map to exit codes and
// an error line of the form
//   error kind=<config|admissibility|verification|internal> [min_k=<k>] message="..."
RunResult run(const RunConfig& cfg);

// Overlays two series of the same kind on the same grid. Writes
// <out>.csv (t, both series, difference) and <out>_revivals.csv
// (classical and revival time predictions of each series).
RunResult compare(const RunConfig& a, const RunConfig& b);

// The second series of a compare config: a copy with the "b." overrides applied.
RunConfig derive_other(const RunConfig& cfg);

}  // namespace jcsusy::app
