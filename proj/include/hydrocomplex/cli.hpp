#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hydrocomplex::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_numerical = 2;

/// Environment variable that overrides the default relative tolerance.
inline constexpr char const* rel_tol_env = "HYDROCOMPLEX_REL_TOL";

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

/// "3", "2..5" or "2,4,7" -> ascending list; throws std::invalid_argument on
/// empty or malformed ranges.
std::vector<int> parse_int_range(std::string const& text);
/// "1,2,5.5" -> list of doubles
std::vector<double> parse_double_list(std::string const& text);

/// matplotlib script that reads a sweep CSV and draws C against D and against n
std::string plot_script(std::string const& csv_path);

} // namespace hydrocomplex::cli
