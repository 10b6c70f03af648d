#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bgg/parabolic.hpp"

namespace bgg {

struct JobSpec {
  enum class Command { Hasse, Bgg, Subcomplexes, Oracle, SymbolCheck, Accept };
  Command command = Command::Hasse;

  std::string series;             // "A5", "C4"
  std::string crossing;           // "x{2}", "x{1,4}"
  std::vector<long> lambda;       // fundamental coordinates
  std::string realform = "split";
  std::string e0 = "preset:torsion-free";
  std::string format = "text";    // text | json | dot
  unsigned long seed = 12345;
  int jobs = 1;
  long cap = 100000;
  std::string rep = "adjoint";    // oracle module
  int degree = -1;                // oracle: restrict to one homology degree

  // symbol-check
  std::string mode = "plain";     // plain | tower | dual | quaternion
  int n = 2, k = 0, l = 0;
  std::string x;  // empty: the generic direction for the given n
};

// Parses an argv-like token list (without the program name); UsageError
// on malformed input.
JobSpec parse_jobspec(const std::vector<std::string>& tokens);

// Canonical token list; parse_jobspec(to_tokens(job)) reproduces job.
std::vector<std::string> to_tokens(const JobSpec& job);

CartanSpec spec_of(const JobSpec& job);
Crossing crossing_of(const JobSpec& job);

// Runs the job; output on `out`, diagnostics on `err`.  Returns the
// process exit code (0 ok, 1 internal failure, 2 usage).
int execute_job(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace bgg
