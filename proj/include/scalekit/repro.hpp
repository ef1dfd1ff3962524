#pragma once

#include <string>
#include <vector>

namespace scalekit {

/// One reproduced claim and its outcome.
struct ReproLine {
  std::string id;
  std::string claim;
  bool passed = false;
  std::string detail;
};

/// Runs the fixed suite of formal claims about P/R/F, AP, DCG, ERR and RBP
/// on the reconstructed total orders, the N=2 counterexample order, the
/// order-dependence census, and the difference-structure and uniqueness
/// properties. Deterministic: seeds are fixed and no timings are reported.
std::vector<ReproLine> run_reproduction();

/// "PASS|FAIL <id> <claim>" per line, with indented detail, then a summary.
std::string render_reproduction(const std::vector<ReproLine>& lines);

}  // namespace scalekit
