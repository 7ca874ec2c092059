#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "dgcm/braid.hpp"

namespace dgcm {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitPrecondition = 3,
  kExitDisagreement = 4,
  kExitInternal = 5,
};

enum class OutputMode { text, records };

struct JobSpec {
  std::string command;  // validate deform invert braid-check longest kp ep ext-dim
  std::string input_path;
  std::optional<std::string> input_text;  // used instead of the file when set
  int trunc = 20;
  std::string method = "series";  // series coxeter bipartite word all
  std::optional<PeriodicWord> word;
  std::optional<int> ell;
  std::optional<int> i, j, k, l;  // 0-based vertices, nonnegative translates
  OutputMode output = OutputMode::text;
  bool mu_one = false;
};

// Runs one job; all diagnostics go to `err`, results to `out`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace dgcm
