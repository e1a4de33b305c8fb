#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcsurf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitParse = 2;

/// Runs one command line (without the program name). The JSON report, or a
/// JSON error object, goes to out; --verbose adds a summary on err.
///
/// Commands: classify, discrepancy, residue, glue, failure-m, stdcoeff,
/// report. Germ-file arguments accept "-" for stdin; `report` also accepts
/// a directory and reports on every *.json inside it.
///
/// Exit status: 0 on success, 1 on validation or library errors, 2 on parse
/// errors (malformed germ file or command line).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace lcsurf::cli
