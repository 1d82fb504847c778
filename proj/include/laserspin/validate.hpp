#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laserspin {

struct OracleResult {
  std::string name;
  bool gating;  ///< informational oracles are reported but never fail the run
  bool passed;
  double deviation;
  double tolerance;
  std::string detail;
};

struct ValidationOptions {
  std::string filter;        ///< substring match on oracle names; empty runs all
  double perturb_mu = 0.0;   ///< test hook: offsets the trajectory modulus
};

/// Runs the built-in oracle comparisons on fixed fixture parameters.
std::vector<OracleResult> run_validate(const ValidationOptions& options = {});

void print_report(std::ostream& out, const std::vector<OracleResult>& results);

/// True when every gating oracle passed.
bool all_passed(const std::vector<OracleResult>& results);

}  // namespace laserspin
