#pragma once

#include "io.hpp"

namespace wmsmooth::cli {

struct Options {
  std::string format = "text";  // text | structured
  bool strict = false;
  bool oracle = false;
  bool verify_certificate = false;
  int max_param = 6;
};

// Commands return the process exit code: 0 for a decided answer, 3 for
// Undecided under --strict, 1 for a failed oracle cross-check or a
// certificate round-trip divergence.  Invalid input is thrown as Error and
// mapped to exit code 2 by the driver.
int cmd_check(const ProblemSpec& spec, const Options& opt);
int cmd_sigma_n(const ProblemSpec& spec, const Options& opt);
int cmd_s_gamma(const ProblemSpec& spec, const Options& opt);
int cmd_admissible(const ProblemSpec& spec, const Options& opt);
int cmd_classify_sl2c(const ProblemSpec& spec, const Options& opt);
int cmd_polytope(const ProblemSpec& spec, const Options& opt);
int cmd_hilbert(const ProblemSpec& spec, const Options& opt);

int cmd_enumerate_sl(int rank, const Options& opt);
int cmd_enumerate_other(const std::string& type, int rank, const Options& opt);

}  // namespace wmsmooth::cli
