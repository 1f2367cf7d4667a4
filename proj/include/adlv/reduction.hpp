// Reduction certificates for non-emptiness of affine Deligne-Lusztig sets.
//
// For an additive Reuman-type element x = pi^{v(mu)} w with mu regular
// dominant, a single step conjugates or one-sidedly multiplies x by a simple
// reflection s with len(sws) <= len(w), w != sws.  Five cases arise from the
// finite-part data alone, each with a forced affine length pattern:
//
//   Case 1   len(sws) < len(w)                      -> sx,  forward implication
//   Case 2a  len(sws) = len(w), s in D_L, len(v^-1 w s) = len(v^-1 w) + 1
//                                                   -> sxs, equivalence
//   Case 2b  same but len(v^-1 w s) = len(v^-1 w) - 1
//                                                   -> sx,  forward implication
//   Case 3a  len(sws) = len(w), s in D_R only, len(v^-1 s) = len(v^-1) - 1
//                                                   -> sxs, equivalence
//   Case 3b  same but len(v^-1 s) = len(v^-1) + 1   -> xs,  forward implication
//
// Each successor is again additive, so steps chain.  The engine drives the
// chain down to an element whose finite part is elliptic, where non-emptiness
// is decided by comparing Kottwitz points.  Certificates record every step
// with its four affine lengths and re-verify from scratch on demand.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "adlv/affine.hpp"

namespace adlv {

enum class CaseLabel { Case1, Case2a, Case2b, Case3a, Case3b };

// Case 2a and 3a steps transport non-emptiness in both directions.
bool is_equivalence_case(CaseLabel label);
const char* case_name(CaseLabel label);     // "1", "2a", "2b", "3a", "3b"
CaseLabel case_from_name(const std::string& name);

struct LengthPattern {
  long long lx = 0, lsx = 0, lxs = 0, lsxs = 0;
  bool operator==(const LengthPattern& o) const = default;
};

struct ReductionStep {
  AffineElement before;
  int generator;
  AffineElement after;
  CaseLabel label;
  LengthPattern lengths;  // affine lengths of x, sx, xs, sxs
};

class ReductionCertificate {
public:
  ReductionCertificate(AffineElement start, std::vector<ReductionStep> steps,
                       AffineElement terminal, bool terminal_elliptic);

  const AffineElement& start() const { return start_; }
  const std::vector<ReductionStep>& steps() const { return steps_; }
  const AffineElement& terminal() const { return terminal_; }
  bool terminal_elliptic() const { return terminal_elliptic_; }
  const KottwitzPoint& kappa() const { return kappa_; }

  // Non-emptiness for basic b with the given Kottwitz point: the chain plus
  // the elliptic terminal decide it by Kottwitz comparison alone.
  bool verdict(const KottwitzPoint& b_kappa) const;

private:
  AffineElement start_;
  std::vector<ReductionStep> steps_;
  AffineElement terminal_;
  bool terminal_elliptic_;
  KottwitzPoint kappa_;
};

// A non-elliptic state from which no valid step exists.  Unreachable in type
// A; surfaced as a reportable finding for C2/G2 rather than an assertion.
struct ReductionStuckError : std::runtime_error {
  explicit ReductionStuckError(const std::string& what) : std::runtime_error(what) {}
};

// S_w = { s in D(w) | len(sws) <= len(w), w != sws }.  Requires x additive
// with regular dominant mu.
GenSet candidate_set(const AffineElement& x);

// Classifies the step at (x, s) without building it; s must be in S_w.
CaseLabel classify_step(const AffineElement& x, int s);

// Builds and validates the full step, including the affine length pattern
// and additivity of the successor.
ReductionStep apply_case(const AffineElement& x, int s);

// Drives x to an elliptic element.  Strict finite-length drops are taken
// greedily; when only length-preserving steps exist the cyclic shift class
// of w is searched breadth-first for an exit.  Deterministic: fixed
// priorities, smallest generator first.
ReductionCertificate reduce(const AffineElement& x);

struct VerifyResult {
  bool ok = true;
  std::size_t failed_step = 0;  // index into steps(), or steps().size() for
                                // certificate-level failures
  std::string reason;

  explicit operator bool() const { return ok; }
};

// Full re-check of a certificate from scratch: chain linkage, case dispatch,
// length patterns against the hyperplane-count oracle, additivity and Reuman
// type at every node, Kottwitz constancy, terminal ellipticity.
VerifyResult verify_certificate(const ReductionCertificate& cert);

struct NonemptinessResult {
  bool nonempty = false;
  ReductionCertificate certificate;
};

NonemptinessResult nonemptiness(const AffineElement& x, const KottwitzPoint& b_kappa);

}  // namespace adlv
