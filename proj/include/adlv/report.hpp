#pragma once

#include <string>
#include <vector>

namespace adlv {

// Outcome of one exhaustive check.  A populated counterexample list means the
// statement failed on those inputs; skipped marks a check that is gated off
// for the given type rather than verified.
struct VerificationReport {
  std::string lemma;
  std::string group;
  long long checked = 0;
  std::vector<std::string> counterexamples;
  bool skipped = false;
  std::string note;

  bool passed() const { return skipped || counterexamples.empty(); }
};

}  // namespace adlv
