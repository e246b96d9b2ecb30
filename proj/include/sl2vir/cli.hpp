#ifndef SL2VIR_CLI_HPP
#define SL2VIR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "sl2vir/lie.hpp"

namespace sl2vir {

/// Exit codes: 0 success, 1 a verification suite failed (report still written), 2 invalid input.
enum ExitCode { kExitOk = 0, kExitSuiteFailed = 1, kExitInvalid = 2 };

/// Runs one command line (without the program name); the report goes to out, diagnostics to err.
int parse_and_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs the suites listed in a config file:
/// {"suites": [{"name": ..., "params": {...}, "depth": N}], "parallel": bool}.
int run_config(const std::string& path, std::ostream& out, std::ostream& err, bool with_timing = false);
/// Same, for an already parsed document. Throws Error(InvalidParameter) on schema violations.
int run_config_json(const nlohmann::json& config, std::ostream& out, bool with_timing = false);

/// Default depth: SL2VIR_DEPTH if set to a positive integer, else 6.
int default_depth();

/// Parses a linear combination such as `e-3*h-9*f`, `(1/2+i)*e + h`.
SL2Elt parse_sl2(const std::string& text);
/// Parses a Vir element such as `e_3`, `2*e_-1 + z`, `e_0-(1/12)*z`.
VirElt parse_vir(const std::string& text);

}  // namespace sl2vir

#endif
