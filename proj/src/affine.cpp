#include "adlv/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace adlv {

bool Cocharacter::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

std::string Cocharacter::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << coords[i];
  }
  return os.str();
}

bool KottwitzPoint::operator==(const KottwitzPoint& o) const {
  return mode == o.mode && value == o.value;
}

KottwitzPoint KottwitzPoint::operator+(const KottwitzPoint& o) const {
  if (mode != o.mode) throw std::invalid_argument("Kottwitz points from different groups");
  switch (mode) {
    case GroupMode::GL: return {mode, value + o.value};
    case GroupMode::C2: return {mode, (value + o.value) & 1};
    default: return {mode, 0};
  }
}

Group::Group(GroupMode mode, int n, std::shared_ptr<const CoxeterSystem> weyl)
    : mode_(mode), n_(n), weyl_(std::move(weyl)) {}

std::shared_ptr<const Group> Group::make(GroupMode mode, int n) {
  switch (mode) {
    case GroupMode::GL:
    case GroupMode::SL:
      if (n < 2) throw std::invalid_argument("GL/SL size must be at least 2");
      return std::shared_ptr<const Group>(new Group(mode, n, CoxeterSystem::type_a(n - 1)));
    case GroupMode::C2:
      if (n != 2) throw std::invalid_argument("C2 has rank 2");
      return std::shared_ptr<const Group>(new Group(mode, 2, CoxeterSystem::c2()));
    case GroupMode::G2:
      if (n != 2) throw std::invalid_argument("G2 has rank 2");
      return std::shared_ptr<const Group>(new Group(mode, 2, CoxeterSystem::g2()));
  }
  throw std::invalid_argument("unknown group mode");
}

std::string Group::name() const {
  switch (mode_) {
    case GroupMode::GL: return "GL" + std::to_string(n_);
    case GroupMode::SL: return "SL" + std::to_string(n_);
    case GroupMode::C2: return "C2";
    case GroupMode::G2: return "G2";
  }
  return "?";
}

std::shared_ptr<const Group> Group::from_name(const std::string& name) {
  auto parse_size = [&](std::size_t prefix) {
    int n = std::atoi(name.c_str() + prefix);
    if (n < 2) throw std::invalid_argument("bad group name: " + name);
    return n;
  };
  if (name.rfind("GL", 0) == 0) return make(GroupMode::GL, parse_size(2));
  if (name.rfind("SL", 0) == 0) return make(GroupMode::SL, parse_size(2));
  if (name == "C2") return make(GroupMode::C2, 2);
  if (name == "G2") return make(GroupMode::G2, 2);
  throw std::invalid_argument("bad group name: " + name);
}

void Group::validate(const Cocharacter& lambda) const {
  if (static_cast<int>(lambda.coords.size()) != weyl_->lattice_dim())
    throw std::invalid_argument("cocharacter has wrong dimension");
  if (mode_ == GroupMode::SL) {
    long long sum = 0;
    for (int c : lambda.coords) sum += c;
    if (sum != 0) throw std::invalid_argument("SL cocharacters must sum to zero");
  }
}

KottwitzPoint Group::kappa(const Cocharacter& lambda) const {
  long long sum = 0;
  for (int c : lambda.coords) sum += c;
  switch (mode_) {
    case GroupMode::GL: return {mode_, sum};
    case GroupMode::SL: return {mode_, 0};
    case GroupMode::C2: return {mode_, ((sum % 2) + 2) % 2};
    case GroupMode::G2: return {mode_, 0};
  }
  return {mode_, 0};
}

int pairing(const IntVec& root, const Cocharacter& lambda) {
  if (root.size() != lambda.coords.size())
    throw std::invalid_argument("root and cocharacter dimensions differ");
  int acc = 0;
  for (std::size_t i = 0; i < root.size(); ++i) acc += root[i] * lambda.coords[i];
  return acc;
}

Cocharacter act(const FiniteElement& w, const Cocharacter& lambda) {
  const CoxeterSystem& sys = w.system();
  if (static_cast<int>(lambda.coords.size()) != sys.lattice_dim())
    throw std::invalid_argument("cocharacter has wrong dimension");
  if (sys.type() == CoxeterType::A) {
    const auto& oneline = w.oneline();
    IntVec out(lambda.coords.size());
    for (std::size_t i = 0; i < oneline.size(); ++i)
      out[oneline[i] - 1] = lambda.coords[i];
    return {out};
  }
  // Apply the reduced word right to left: s(la) = la - <alpha, la> alpha^vee.
  Cocharacter cur = lambda;
  Word word = reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int m = pairing(sys.simple_root(*it), cur);
    const IntVec& coroot = sys.simple_coroot(*it);
    for (std::size_t k = 0; k < cur.coords.size(); ++k) cur.coords[k] -= m * coroot[k];
  }
  return cur;
}

IntVec act_on_root(const FiniteElement& w, const IntVec& root) {
  const CoxeterSystem& sys = w.system();
  IntVec cur = root;
  Word word = reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    // s(beta) = beta - <beta, alpha^vee> alpha, on the pairing-vector side.
    int m = 0;
    const IntVec& coroot = sys.simple_coroot(*it);
    for (std::size_t k = 0; k < cur.size(); ++k) m += cur[k] * coroot[k];
    const IntVec& alpha = sys.simple_root(*it);
    for (std::size_t k = 0; k < cur.size(); ++k) cur[k] -= m * alpha[k];
  }
  return cur;
}

bool is_dominant(const CoxeterSystem& W, const Cocharacter& lambda) {
  for (int i = 1; i <= W.rank(); ++i)
    if (pairing(W.simple_root(i), lambda) < 0) return false;
  return true;
}

bool is_regular(const CoxeterSystem& W, const Cocharacter& lambda) {
  for (const IntVec& root : W.positive_roots())
    if (pairing(root, lambda) == 0) return false;
  return true;
}

bool is_regular_dominant(const CoxeterSystem& W, const Cocharacter& lambda) {
  for (int i = 1; i <= W.rank(); ++i)
    if (pairing(W.simple_root(i), lambda) <= 0) return false;
  return true;
}

Decomposition decompose(const CoxeterSystem& W, const Cocharacter& lambda) {
  if (static_cast<int>(lambda.coords.size()) != W.lattice_dim())
    throw std::invalid_argument("cocharacter has wrong dimension");
  // Reflect negative simple pairings away; each step fixes one inverted
  // positive root, so the accumulated v has minimal length.
  Cocharacter mu = lambda;
  FiniteElement v = W.identity();
  for (;;) {
    int neg = 0;
    for (int i = 1; i <= W.rank(); ++i)
      if (pairing(W.simple_root(i), mu) < 0) {
        neg = i;
        break;
      }
    if (neg == 0) break;
    mu = act(W.generator(neg), mu);
    v = v * W.generator(neg);
  }
  return {v, mu};
}

long long translation_length(const CoxeterSystem& W, const Cocharacter& mu) {
  if (!is_dominant(W, mu))
    throw std::invalid_argument("translation_length requires a dominant cocharacter");
  return pairing(W.rho2(), mu);
}

AffineElement::AffineElement(std::shared_ptr<const Group> group, Cocharacter lambda,
                             FiniteElement w)
    : group_(std::move(group)),
      lambda_(std::move(lambda)),
      w_(std::move(w)),
      v_(group_->weyl().identity()),
      mu_({}) {
  group_->validate(lambda_);
  if (!w_.system().same_as(group_->weyl()))
    throw std::invalid_argument("finite part belongs to a different Weyl group");
  Decomposition d = decompose(group_->weyl(), lambda_);
  v_ = d.v;
  mu_ = d.mu;
}

bool AffineElement::operator==(const AffineElement& o) const {
  return group_->mode() == o.group_->mode() && group_->n() == o.group_->n() &&
         lambda_ == o.lambda_ && w_ == o.w_;
}

std::string AffineElement::str() const {
  std::ostringstream os;
  os << "t[" << lambda_.str() << "] * w[" << w_.str() << "]";
  return os.str();
}

long long affine_length(const AffineElement& x) {
  const CoxeterSystem& W = x.group().weyl();
  if (!x.lambda().is_zero() && !is_regular_dominant(W, x.dominant_part()))
    throw std::invalid_argument("affine_length requires a regular translation part");
  FiniteElement vinv = x.chamber_part().inverse();
  return translation_length(W, x.dominant_part()) + (vinv * x.finite_part()).length() -
         vinv.length();
}

long long affine_length_oracle(const AffineElement& x) {
  const CoxeterSystem& W = x.group().weyl();
  const FiniteElement winv = x.finite_part().inverse();
  auto positive = [&W](const IntVec& root) {
    return std::find(W.positive_roots().begin(), W.positive_roots().end(), root) !=
           W.positive_roots().end();
  };
  long long total = 0;
  for (const IntVec& alpha : W.positive_roots()) {
    int m = pairing(alpha, x.lambda());
    if (positive(act_on_root(winv, alpha)))
      total += std::abs(m);
    else
      total += std::abs(m + 1);
  }
  return total;
}

bool is_additive(const AffineElement& x) {
  FiniteElement vinv = x.chamber_part().inverse();
  return (vinv * x.finite_part()).length() == vinv.length() + x.finite_part().length();
}

bool is_reuman_type(const AffineElement& x) {
  return static_cast<int>(support(x.finite_part()).size()) == x.group().weyl().rank();
}

FiniteElement eta1(const AffineElement& x) { return x.finite_part(); }

FiniteElement eta2(const AffineElement& x) {
  if (!is_regular(x.group().weyl(), x.lambda()))
    throw std::invalid_argument("eta2 requires a regular translation part");
  return x.chamber_part();
}

bool reuman_criterion(const AffineElement& x) {
  FiniteElement v = eta2(x);
  FiniteElement conj = v.inverse() * eta1(x) * v;
  return static_cast<int>(support(conj).size()) == x.group().weyl().rank();
}

KottwitzPoint kottwitz_point(const AffineElement& x) { return x.group().kappa(x.lambda()); }

AffineElement left_mul(const AffineElement& x, int s) {
  const CoxeterSystem& W = x.group().weyl();
  FiniteElement gen = W.generator(s);
  return AffineElement(x.group_ptr(), act(gen, x.lambda()), gen * x.finite_part());
}

AffineElement right_mul(const AffineElement& x, int s) {
  const CoxeterSystem& W = x.group().weyl();
  return AffineElement(x.group_ptr(), x.lambda(), x.finite_part() * W.generator(s));
}

AffineElement multiply(const AffineElement& x, const AffineElement& y) {
  if (x.group().mode() != y.group().mode() || x.group().n() != y.group().n())
    throw std::invalid_argument("affine elements from different groups");
  Cocharacter shifted = act(x.finite_part(), y.lambda());
  IntVec sum(x.lambda().coords);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += shifted.coords[i];
  return AffineElement(x.group_ptr(), {sum}, x.finite_part() * y.finite_part());
}

}  // namespace adlv
