#include "adlv/reduction.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <sstream>

namespace adlv {

bool is_equivalence_case(CaseLabel label) {
  return label == CaseLabel::Case2a || label == CaseLabel::Case3a;
}

const char* case_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::Case1: return "1";
    case CaseLabel::Case2a: return "2a";
    case CaseLabel::Case2b: return "2b";
    case CaseLabel::Case3a: return "3a";
    case CaseLabel::Case3b: return "3b";
  }
  return "?";
}

CaseLabel case_from_name(const std::string& name) {
  if (name == "1") return CaseLabel::Case1;
  if (name == "2a") return CaseLabel::Case2a;
  if (name == "2b") return CaseLabel::Case2b;
  if (name == "3a") return CaseLabel::Case3a;
  if (name == "3b") return CaseLabel::Case3b;
  throw std::invalid_argument("unknown case label: " + name);
}

ReductionCertificate::ReductionCertificate(AffineElement start,
                                           std::vector<ReductionStep> steps,
                                           AffineElement terminal, bool terminal_elliptic)
    : start_(std::move(start)),
      steps_(std::move(steps)),
      terminal_(std::move(terminal)),
      terminal_elliptic_(terminal_elliptic),
      kappa_(kottwitz_point(start_)) {}

bool ReductionCertificate::verdict(const KottwitzPoint& b_kappa) const {
  return terminal_elliptic_ && kappa_ == b_kappa;
}

namespace {

void require_reducible(const AffineElement& x, const char* who) {
  if (!is_additive(x))
    throw std::invalid_argument(std::string(who) + ": element is not additive");
  if (!x.lambda().is_zero() &&
      !is_regular_dominant(x.group().weyl(), x.dominant_part()))
    throw std::invalid_argument(std::string(who) +
                                ": translation part is not regular dominant");
}

}  // namespace

GenSet candidate_set(const AffineElement& x) {
  require_reducible(x, "candidate_set");
  const CoxeterSystem& W = x.group().weyl();
  const FiniteElement& w = x.finite_part();
  GenSet all = descents(w, Side::Left);
  GenSet right = descents(w, Side::Right);
  all.insert(right.begin(), right.end());
  GenSet out;
  for (int s : all) {
    FiniteElement gen = W.generator(s);
    FiniteElement conj = gen * w * gen;
    if (conj != w && conj.length() <= w.length()) out.insert(s);
  }
  return out;
}

CaseLabel classify_step(const AffineElement& x, int s) {
  const CoxeterSystem& W = x.group().weyl();
  const FiniteElement& w = x.finite_part();
  FiniteElement gen = W.generator(s);
  FiniteElement conj = gen * w * gen;
  if (conj == w || conj.length() > w.length())
    throw std::invalid_argument("generator is not in the candidate set");
  if (conj.length() < w.length()) return CaseLabel::Case1;

  FiniteElement vinv = x.chamber_part().inverse();
  if (descents(w, Side::Left).count(s)) {
    int base = (vinv * w).length();
    int moved = (vinv * w * gen).length();
    return (moved == base + 1) ? CaseLabel::Case2a : CaseLabel::Case2b;
  }
  if (!descents(w, Side::Right).count(s))
    throw std::invalid_argument("generator is not a descent");
  int base = vinv.length();
  int moved = (vinv * gen).length();
  return (moved == base - 1) ? CaseLabel::Case3a : CaseLabel::Case3b;
}

ReductionStep apply_case(const AffineElement& x, int s) {
  require_reducible(x, "apply_case");
  CaseLabel label = classify_step(x, s);

  AffineElement sx = left_mul(x, s);
  AffineElement xs = right_mul(x, s);
  AffineElement sxs = right_mul(sx, s);
  LengthPattern lengths{affine_length(x), affine_length(sx), affine_length(xs),
                        affine_length(sxs)};

  bool pattern_ok = false;
  switch (label) {
    case CaseLabel::Case1:
    case CaseLabel::Case2b:
    case CaseLabel::Case3b:
      pattern_ok = lengths.lx > lengths.lsx && lengths.lsx == lengths.lxs &&
                   lengths.lxs > lengths.lsxs;
      break;
    case CaseLabel::Case2a:
      pattern_ok = lengths.lxs > lengths.lx && lengths.lx == lengths.lsxs &&
                   lengths.lsxs > lengths.lsx;
      break;
    case CaseLabel::Case3a:
      pattern_ok = lengths.lsx > lengths.lx && lengths.lx == lengths.lsxs &&
                   lengths.lsxs > lengths.lxs;
      break;
  }
  if (!pattern_ok)
    throw std::logic_error("affine length pattern contradicts the case dispatch");

  AffineElement after = [&] {
    switch (label) {
      case CaseLabel::Case1:
      case CaseLabel::Case2b: return sx;
      case CaseLabel::Case3b: return xs;
      default: return sxs;
    }
  }();
  if (!is_additive(after))
    throw std::logic_error("reduction successor lost additivity");
  return {x, s, after, label, lengths};
}

namespace {

// One descent move from x0: zero or more equal-length conjugation steps
// walking the cyclic shift class of the finite part, ended by a step that
// strictly drops the finite length.  Case 1 exits are preferred, then
// support-retaining one-sided drops; the class is explored breadth-first
// with ascending generators, one visit per class member.
std::optional<std::vector<ReductionStep>> find_descent_path(const AffineElement& x0) {
  const CoxeterSystem& W = x0.group().weyl();
  const int rank = W.rank();

  std::map<FiniteElement, std::pair<FiniteElement, ReductionStep>> parent;
  std::set<FiniteElement> seen{x0.finite_part()};
  std::queue<AffineElement> queue;
  queue.push(x0);

  auto path_to = [&](const AffineElement& node, ReductionStep exit_step) {
    std::vector<ReductionStep> chain{std::move(exit_step)};
    FiniteElement walk = node.finite_part();
    while (walk != x0.finite_part()) {
      auto& link = parent.at(walk);
      chain.push_back(link.second);
      walk = link.first;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  };

  while (!queue.empty()) {
    AffineElement x = queue.front();
    queue.pop();
    GenSet candidates = candidate_set(x);
    const FiniteElement& w = x.finite_part();

    for (int s : candidates) {
      FiniteElement gen = W.generator(s);
      if ((gen * w * gen).length() < w.length())
        return path_to(x, apply_case(x, s));  // Case 1
    }
    for (int s : candidates) {
      CaseLabel label = classify_step(x, s);
      if (label != CaseLabel::Case2b && label != CaseLabel::Case3b) continue;
      ReductionStep step = apply_case(x, s);
      if (static_cast<int>(support(step.after.finite_part()).size()) == rank)
        return path_to(x, std::move(step));
    }
    for (int s : candidates) {
      CaseLabel label = classify_step(x, s);
      if (label != CaseLabel::Case2a && label != CaseLabel::Case3a) continue;
      ReductionStep step = apply_case(x, s);
      const FiniteElement& next = step.after.finite_part();
      if (!seen.insert(next).second) continue;
      parent.emplace(next, std::make_pair(w, step));
      queue.push(step.after);
    }
  }
  return std::nullopt;
}

}  // namespace

ReductionCertificate reduce(const AffineElement& x) {
  require_reducible(x, "reduce");
  if (!is_reuman_type(x))
    throw std::invalid_argument("reduce: finite part does not have full support");

  std::vector<ReductionStep> steps;
  AffineElement cur = x;
  while (!is_elliptic(cur.finite_part())) {
    auto path = find_descent_path(cur);
    if (!path) {
      std::string msg = "no valid reduction step from non-elliptic state " + cur.str();
      // A full-support element stuck here would have a terminal cyclic shift
      // class, hence be elliptic; in type A that is a contradiction.
      if (cur.group().weyl().type() == CoxeterType::A) throw std::logic_error(msg);
      throw ReductionStuckError(msg);
    }
    steps.insert(steps.end(), path->begin(), path->end());
    cur = steps.back().after;
  }
  return ReductionCertificate(x, std::move(steps), cur, true);
}

namespace {

VerifyResult fail(std::size_t step, std::string reason) {
  return {false, step, std::move(reason)};
}

}  // namespace

VerifyResult verify_certificate(const ReductionCertificate& cert) {
  const std::size_t n = cert.steps().size();
  const AffineElement* expect_before = &cert.start();
  if (cert.kappa() != kottwitz_point(cert.start()))
    return fail(n, "stored Kottwitz point does not match the start element");

  for (std::size_t i = 0; i < n; ++i) {
    const ReductionStep& step = cert.steps()[i];
    const AffineElement& x = step.before;
    if (x != *expect_before) return fail(i, "broken chain linkage");

    if (!is_additive(x)) return fail(i, "step source is not additive");
    if (!is_reuman_type(x)) return fail(i, "step source is not Reuman type");
    if (!x.lambda().is_zero() &&
        !is_regular_dominant(x.group().weyl(), x.dominant_part()))
      return fail(i, "translation part is not regular dominant");

    GenSet candidates;
    try {
      candidates = candidate_set(x);
    } catch (const std::invalid_argument&) {
      return fail(i, "candidate set preconditions violated");
    }
    if (!candidates.count(step.generator))
      return fail(i, "generator is not a valid candidate");

    CaseLabel expected = classify_step(x, step.generator);
    if (expected != step.label) return fail(i, "case label mismatch");

    AffineElement sx = left_mul(x, step.generator);
    AffineElement xs = right_mul(x, step.generator);
    AffineElement sxs = right_mul(sx, step.generator);
    LengthPattern oracle{affine_length_oracle(x), affine_length_oracle(sx),
                         affine_length_oracle(xs), affine_length_oracle(sxs)};
    if (!(oracle == step.lengths)) return fail(i, "length pattern fails the oracle");

    bool pattern_ok = false;
    switch (step.label) {
      case CaseLabel::Case1:
      case CaseLabel::Case2b:
      case CaseLabel::Case3b:
        pattern_ok = oracle.lx > oracle.lsx && oracle.lsx == oracle.lxs &&
                     oracle.lxs > oracle.lsxs;
        break;
      case CaseLabel::Case2a:
        pattern_ok = oracle.lxs > oracle.lx && oracle.lx == oracle.lsxs &&
                     oracle.lsxs > oracle.lsx;
        break;
      case CaseLabel::Case3a:
        pattern_ok = oracle.lsx > oracle.lx && oracle.lx == oracle.lsxs &&
                     oracle.lsxs > oracle.lxs;
        break;
    }
    if (!pattern_ok) return fail(i, "length pattern does not fit the case");

    const AffineElement* prescribed = nullptr;
    switch (step.label) {
      case CaseLabel::Case1:
      case CaseLabel::Case2b: prescribed = &sx; break;
      case CaseLabel::Case3b: prescribed = &xs; break;
      default: prescribed = &sxs; break;
    }
    if (step.after != *prescribed) return fail(i, "successor is not the prescribed element");
    if (!is_additive(step.after)) return fail(i, "successor is not additive");
    if (kottwitz_point(step.after) != cert.kappa())
      return fail(i, "Kottwitz point changed along the chain");
    expect_before = &step.after;
  }

  if (cert.terminal() != *expect_before) return fail(n, "terminal does not close the chain");
  if (cert.terminal_elliptic() != is_elliptic(eta1(cert.terminal())))
    return fail(n, "terminal ellipticity flag is wrong");
  if (cert.terminal_elliptic() && !is_reuman_type(cert.terminal()))
    return fail(n, "elliptic terminal lost full support");
  return {};
}

NonemptinessResult nonemptiness(const AffineElement& x, const KottwitzPoint& b_kappa) {
  ReductionCertificate cert = reduce(x);
  bool verdict = cert.verdict(b_kappa);
  return {verdict, std::move(cert)};
}

}  // namespace adlv
