// Conjugation-by-simple-reflection machinery on a finite Weyl group: the
// arrow relation w -> sws with non-increasing length, chains down to minimal
// length in a conjugacy class, cyclic shift classes, and the exhaustive
// checks that minimal full-support and terminal full-support elements are
// elliptic.

#pragma once

#include <vector>

#include "adlv/coxeter.hpp"
#include "adlv/report.hpp"

namespace adlv {

struct ArrowStep {
  FiniteElement source;
  int generator;
  FiniteElement target;  // s * source * s, with len(target) <= len(source)
};

// All arrows out of w, one per generator s with len(sws) <= len(w).
std::vector<ArrowStep> arrow_targets(const FiniteElement& w);

struct CyclicShiftClass {
  FiniteElement base;
  std::vector<FiniteElement> members;  // discovery order; all of equal length
  bool terminal = false;               // no arrow leaves the class

  bool contains(const FiniteElement& w) const;
};

// Connected component of w under equal-length arrows.  Equal-length arrows
// invert, so reachability here is already mutual reachability.
CyclicShiftClass cyclic_shift_class(const FiniteElement& w);

struct MinimizationResult {
  FiniteElement minimum;
  std::vector<ArrowStep> chain;  // valid arrow path from the input to minimum
};

// Chains w down to an element of minimal length in its conjugacy class.
// Strict drops are taken eagerly (smallest generator first); otherwise the
// cyclic shift class is searched breadth-first for a member that admits one.
MinimizationResult reduce_to_min(const FiniteElement& w);

// Exhaustive over the group: full support + minimal length in class implies
// elliptic.
VerificationReport check_min_full_support_elliptic(const CoxeterSystem& W);
// Exhaustive over the group: full support + terminal cyclic shift class
// implies elliptic.
VerificationReport check_terminal_elliptic(const CoxeterSystem& W);

}  // namespace adlv
