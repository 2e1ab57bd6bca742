#pragma once

// Command-line front end. Everything here is in-process so that tests can
// drive the tool without spawning it.

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace abcone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitIo = 3;

/// Environment variable overriding the worker thread count.
inline constexpr const char* kThreadsEnv = "ABCONE_THREADS";

inline constexpr const char* kUnitsBanner = "# units: hbar=c=1";

/// lo:hi:step, inclusive of lo; hi is included only when hi - lo is an exact
/// multiple of step. A bare number is a one-point range.
std::vector<double> parse_range(const std::string& text);

/// Same syntax restricted to integers; step defaults to 1 (lo:hi).
std::vector<long long> parse_int_range(const std::string& text);

/// %.17g.
std::string format_number(double v);

/// key = value lines; '#' starts a comment. Throws IoError if unreadable and
/// DomainError on a malformed line.
std::map<std::string, std::string> read_config(const std::string& path);

/// Worker count: ABCONE_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

/// Evaluates fn(0..n-1) on worker threads; results come back in index order.
std::vector<std::string> parallel_rows(std::size_t n, unsigned threads,
                                       const std::function<std::string(std::size_t)>& fn);

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// Returns the exit code; data goes to out unless --output is given,
/// diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abcone::cli
