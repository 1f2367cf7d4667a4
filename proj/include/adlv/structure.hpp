// Support-loss combinatorics for full-support elements: which descents drop
// the full support condition, the w_ell * w_1 ... w_{k+1} factorization of
// elements where every left descent does, commuting descents, and the
// exhaustive checks that pin such elements down as Coxeter elements.
//
// Several statements hold only in type A (the longest element of B_n breaks
// them); those checks are gated by the type tag instead of being silently
// extended.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "adlv/coxeter.hpp"
#include "adlv/report.hpp"

namespace adlv {

struct WformDecomposition {
  FiniteElement w_ell;  // product of the pairwise-commuting left descents
  // Blocks of consecutive generators covering S minus D_L(w), with the factor
  // of w supported on each block.  Lengths add up across all factors.
  std::vector<std::pair<GenSet, FiniteElement>> factors;
};

// Whether multiplying by the descent s drops full support.  s must be a
// descent of w on the given side.
bool loses_support(const FiniteElement& w, int s, Side side);

// The factorization above, for full-support w such that every left descent
// loses support; nullopt when some left descent retains it.
std::optional<WformDecomposition> wform_decompose(const FiniteElement& w);

// { s in D(w) | sw = ws }.
GenSet commuting_descents(const FiniteElement& w);

// Full support + unique left descent s_j + Supp(s_j w) != S forces the
// explicit Coxeter product s_j s_{j-1} ... s_1 s_{j+1} ... s_n (and the
// mirror statement on the right).  Type A only; throws on C2/G2.
VerificationReport check_unique_descent_coxeter(const CoxeterSystem& W);

// Every left and every right descent loses support => Coxeter.  Type A only.
VerificationReport check_descent_support_loss_coxeter(const CoxeterSystem& W);

// Every descent loses support or commutes, on both sides => Coxeter.
// Type A only.
VerificationReport check_w0_or_coxeter(const CoxeterSystem& W);

// w = s w' for a commuting descent s keeps w' at full support.
VerificationReport check_commuting_descent_full_support(const CoxeterSystem& W);

// Commuting descents of a full-support element commute with each other.
// Type A only; reported as skipped on C2/G2.
VerificationReport check_commuting_descents_commute(const CoxeterSystem& W);

// Coxeter elements have no commuting descents.
VerificationReport check_coxeter_no_commuting_descents(const CoxeterSystem& W);

// Whenever the factorization hypothesis holds, the decomposition exists and
// recomposes with additive lengths and the stated partition of S.
VerificationReport check_wform_decomposition(const CoxeterSystem& W);

}  // namespace adlv
