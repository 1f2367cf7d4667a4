// Extended affine Weyl group elements pi^lambda w, cocharacter arithmetic,
// length formulas, and the classification predicates (additive, Reuman type,
// dominance, regularity, eta maps, Kottwitz point).
//
// Every element stores its raw translation lambda together with the derived
// decomposition lambda = v(mu), mu dominant and v of minimal length.  The
// closed length formula
//
//     len(pi^{v(mu)} w) = len(pi^mu) + len(v^{-1} w) - len(v^{-1})
//
// requires mu regular; affine_length_oracle counts separating affine
// hyperplanes instead and works for arbitrary lambda.  The sign convention of
// the oracle matches an Iwahori opposite to the dominant chamber and is
// pinned down by tests against the closed formula and an independent
// breadth-first word-length computation.

#pragma once

#include <memory>
#include <string>

#include "adlv/coxeter.hpp"

namespace adlv {

enum class GroupMode { GL, SL, C2, G2 };

struct Cocharacter {
  IntVec coords;

  bool operator==(const Cocharacter& o) const { return coords == o.coords; }
  bool operator!=(const Cocharacter& o) const { return !(*this == o); }
  bool is_zero() const;
  std::string str() const;  // "2,1,0,-1,-2"
};

// Image in Lambda_G = X_*(A) / coroot lattice.  GL_n keeps the coordinate
// sum, C2 keeps it mod 2, SL_n and G2 have trivial quotient.
struct KottwitzPoint {
  GroupMode mode;
  long long value = 0;

  bool operator==(const KottwitzPoint& o) const;
  bool operator!=(const KottwitzPoint& o) const { return !(*this == o); }
  KottwitzPoint operator+(const KottwitzPoint& o) const;
};

// Group datum: a mode (GL_n, SL_n, C2, G2) on top of the finite Weyl group.
// The mode fixes the cocharacter lattice constraints and the Kottwitz map.
class Group {
public:
  static std::shared_ptr<const Group> make(GroupMode mode, int n);

  GroupMode mode() const { return mode_; }
  int n() const { return n_; }  // GL_n/SL_n size; 2 for C2/G2
  const CoxeterSystem& weyl() const { return *weyl_; }
  std::shared_ptr<const CoxeterSystem> weyl_ptr() const { return weyl_; }

  std::string name() const;  // "SL5", "GL3", "C2", "G2"
  static std::shared_ptr<const Group> from_name(const std::string& name);

  void validate(const Cocharacter& lambda) const;
  KottwitzPoint kappa(const Cocharacter& lambda) const;

private:
  Group(GroupMode mode, int n, std::shared_ptr<const CoxeterSystem> weyl);

  GroupMode mode_;
  int n_;
  std::shared_ptr<const CoxeterSystem> weyl_;
};

int pairing(const IntVec& root, const Cocharacter& lambda);
Cocharacter act(const FiniteElement& w, const Cocharacter& lambda);
IntVec act_on_root(const FiniteElement& w, const IntVec& root);

bool is_dominant(const CoxeterSystem& W, const Cocharacter& lambda);
// Off every root hyperplane; the chamber containing lambda is well defined.
bool is_regular(const CoxeterSystem& W, const Cocharacter& lambda);
bool is_regular_dominant(const CoxeterSystem& W, const Cocharacter& lambda);

struct Decomposition {
  FiniteElement v;
  Cocharacter mu;  // dominant, with v(mu) = lambda
};

// v has minimal length among all elements carrying mu to lambda; it is the
// unique such element when mu is regular.
Decomposition decompose(const CoxeterSystem& W, const Cocharacter& lambda);

// len(pi^mu) = <2 rho, mu>; requires mu dominant.
long long translation_length(const CoxeterSystem& W, const Cocharacter& mu);

class AffineElement {
public:
  AffineElement(std::shared_ptr<const Group> group, Cocharacter lambda, FiniteElement w);

  const Group& group() const { return *group_; }
  std::shared_ptr<const Group> group_ptr() const { return group_; }
  const Cocharacter& lambda() const { return lambda_; }
  const FiniteElement& finite_part() const { return w_; }
  const FiniteElement& chamber_part() const { return v_; }    // lambda = v(mu)
  const Cocharacter& dominant_part() const { return mu_; }

  bool operator==(const AffineElement& o) const;
  bool operator!=(const AffineElement& o) const { return !(*this == o); }
  std::string str() const;  // "t[2,1,0,-1,-2] * w[4321234]"

private:
  std::shared_ptr<const Group> group_;
  Cocharacter lambda_;
  FiniteElement w_;
  FiniteElement v_;
  Cocharacter mu_;
};

// Closed formula; requires the dominant part to be regular (or lambda = 0).
long long affine_length(const AffineElement& x);
// Hyperplane count, valid for every lambda.
long long affine_length_oracle(const AffineElement& x);

bool is_additive(const AffineElement& x);     // len(v^-1 w) = len(v^-1) + len(w)
bool is_reuman_type(const AffineElement& x);  // Supp(w) = S

FiniteElement eta1(const AffineElement& x);
FiniteElement eta2(const AffineElement& x);  // requires lambda regular
// Full support of eta2^{-1} eta1 eta2; requires lambda regular.
bool reuman_criterion(const AffineElement& x);

KottwitzPoint kottwitz_point(const AffineElement& x);

AffineElement left_mul(const AffineElement& x, int s);   // pi^{s(lambda)} (s w)
AffineElement right_mul(const AffineElement& x, int s);  // pi^lambda (w s)
AffineElement multiply(const AffineElement& x, const AffineElement& y);

}  // namespace adlv
