#ifndef GEOWIND_CLI_HPP
#define GEOWIND_CLI_HPP

namespace geowind {

/// Command-line entry point. Subcommands: generate, validate, export,
/// report. Exit codes: 0 success (and, for validate/report, overall pass),
/// 1 validation failed, 2 bad arguments, 3 I/O failure.
int runCli(int argc, const char* const* argv);

}  // namespace geowind

#endif  // GEOWIND_CLI_HPP
