#pragma once

#include <ostream>

namespace dgq {

// Process exit codes of the dgq tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitAxiomFailure = 1,   // invalid double groupoid, failed weak Hopf axiom, bad cocycle
  kExitParseError = 2,     // unreadable input, malformed JSON, bad command line
  kExitInadmissible = 3,   // weights rejected (admissibility or filling), witness printed
  kExitNotFusion = 4,      // dimension table requested on a non-fusion algebra
};

// Entry point of the command line tool; commands validate, build, wha, rep, info.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dgq
