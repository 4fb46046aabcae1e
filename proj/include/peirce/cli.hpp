// `peirce` command line driver.
//
// Every subcommand prints one JSON report on stdout:
//
//   {"command", "tool_version", "inputs": [{"role", "path", "digest"}],
//    "verdicts": {name: bool}, "witnesses": {name: {...}}, "details": {...},
//    "timings": {...}}
//
// Exit status: 0 when every verdict is true, 1 when some verdict is false,
// 2 for malformed input or a library error ("peirce: Kind: message" on
// stderr, no report).

#ifndef PEIRCE_CLI_HPP_
#define PEIRCE_CLI_HPP_

#include <iosfwd>

namespace peirce::cli {

  inline constexpr char const* kToolVersion = "0.1.0";

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);
  int run(int argc, char const* const* argv);

}  // namespace peirce::cli

#endif  // PEIRCE_CLI_HPP_
