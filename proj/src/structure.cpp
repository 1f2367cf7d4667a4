#include "adlv/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace adlv {

namespace {

bool full_support(const FiniteElement& w) {
  return static_cast<int>(support(w).size()) == w.system().rank();
}

void require_type_a(const CoxeterSystem& W, const char* what) {
  if (W.type() != CoxeterType::A)
    throw std::invalid_argument(std::string(what) + " is a type A statement");
}

}  // namespace

bool loses_support(const FiniteElement& w, int s, Side side) {
  if (!descents(w, side).count(s))
    throw std::invalid_argument("generator is not a descent on the requested side");
  const CoxeterSystem& sys = w.system();
  FiniteElement shorter =
      (side == Side::Left) ? sys.generator(s) * w : w * sys.generator(s);
  return static_cast<int>(support(shorter).size()) != sys.rank();
}

std::optional<WformDecomposition> wform_decompose(const FiniteElement& w) {
  const CoxeterSystem& sys = w.system();
  if (!full_support(w)) throw std::invalid_argument("wform_decompose needs full support");
  GenSet left = descents(w, Side::Left);
  for (int s : left)
    if (!loses_support(w, s, Side::Left)) return std::nullopt;

  for (int s : left)
    for (int t : left)
      if (s < t && sys.coxeter_m(s, t) != 2)
        throw std::logic_error("support-losing left descents fail to commute");

  WformDecomposition out{sys.identity(), {}};
  for (int s : left) out.w_ell = out.w_ell * sys.generator(s);
  FiniteElement rest = out.w_ell.inverse() * w;
  if (out.w_ell.length() + rest.length() != w.length())
    throw std::logic_error("descent product does not split off reducibly");

  // Maximal runs of consecutive generators avoiding the descent set.
  std::vector<GenSet> blocks;
  for (int g = 1; g <= sys.rank(); ++g) {
    if (left.count(g)) continue;
    if (blocks.empty() || left.count(g - 1) || !blocks.back().count(g - 1))
      blocks.emplace_back();
    blocks.back().insert(g);
  }

  Word letters = reduced_word(rest);
  std::vector<Word> bucket(blocks.size());
  for (int g : letters) {
    bool placed = false;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (blocks[b].count(g)) {
        bucket[b].push_back(g);
        placed = true;
        break;
      }
    if (!placed) throw std::logic_error("descent generator re-occurs outside w_ell");
  }

  FiniteElement recomposed = out.w_ell;
  int factor_lengths = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    FiniteElement piece = sys.from_word(bucket[b]);
    if (support(piece) != blocks[b])
      throw std::logic_error("block factor misses part of its support interval");
    factor_lengths += piece.length();
    recomposed = recomposed * piece;
    out.factors.emplace_back(blocks[b], piece);
  }
  if (recomposed != w || factor_lengths != rest.length())
    throw std::logic_error("block factors do not recompose the element");
  return out;
}

GenSet commuting_descents(const FiniteElement& w) {
  const CoxeterSystem& sys = w.system();
  GenSet all = descents(w, Side::Left);
  GenSet right = descents(w, Side::Right);
  all.insert(right.begin(), right.end());
  GenSet out;
  for (int s : all) {
    FiniteElement gen = sys.generator(s);
    if (gen * w == w * gen) out.insert(s);
  }
  return out;
}

VerificationReport check_unique_descent_coxeter(const CoxeterSystem& W) {
  require_type_a(W, "the unique-descent characterization");
  VerificationReport report{"unique_descent_coxeter", W.name()};
  const int n = W.rank();
  for (const FiniteElement& w : W.elements()) {
    if (!full_support(w)) continue;
    GenSet left = descents(w, Side::Left);
    if (left.size() == 1) {
      int j = *left.begin();
      if (loses_support(w, j, Side::Left)) {
        ++report.checked;
        Word expected;
        for (int g = j; g >= 1; --g) expected.push_back(g);
        for (int g = j + 1; g <= n; ++g) expected.push_back(g);
        if (W.from_word(expected) != w) report.counterexamples.push_back(w.str());
      }
    }
    GenSet right = descents(w, Side::Right);
    if (right.size() == 1) {
      int k = *right.begin();
      if (loses_support(w, k, Side::Right)) {
        ++report.checked;
        Word expected;
        for (int g = 1; g < k; ++g) expected.push_back(g);
        for (int g = n; g >= k; --g) expected.push_back(g);
        if (W.from_word(expected) != w) report.counterexamples.push_back(w.str());
      }
    }
  }
  return report;
}

VerificationReport check_descent_support_loss_coxeter(const CoxeterSystem& W) {
  require_type_a(W, "the support-loss Coxeter characterization");
  VerificationReport report{"descent_support_loss_coxeter", W.name()};
  for (const FiniteElement& w : W.elements()) {
    if (!full_support(w)) continue;
    auto all_lose = [&](Side side) {
      for (int s : descents(w, side))
        if (!loses_support(w, s, side)) return false;
      return true;
    };
    if (!all_lose(Side::Left) || !all_lose(Side::Right)) continue;
    ++report.checked;
    if (!is_coxeter(w)) report.counterexamples.push_back(w.str());
  }
  return report;
}

VerificationReport check_w0_or_coxeter(const CoxeterSystem& W) {
  require_type_a(W, "the lose-or-commute Coxeter characterization");
  VerificationReport report{"lose_or_commute_coxeter", W.name()};
  for (const FiniteElement& w : W.elements()) {
    if (!full_support(w)) continue;
    GenSet comm = commuting_descents(w);
    auto ok = [&](Side side) {
      for (int s : descents(w, side))
        if (!loses_support(w, s, side) && !comm.count(s)) return false;
      return true;
    };
    if (!ok(Side::Left) || !ok(Side::Right)) continue;
    ++report.checked;
    if (!is_coxeter(w)) report.counterexamples.push_back(w.str());
  }
  return report;
}

VerificationReport check_commuting_descent_full_support(const CoxeterSystem& W) {
  VerificationReport report{"commuting_descent_keeps_support", W.name()};
  for (const FiniteElement& w : W.elements()) {
    if (!full_support(w)) continue;
    for (int s : commuting_descents(w)) {
      ++report.checked;
      FiniteElement rest = W.generator(s) * w;
      if (!full_support(rest))
        report.counterexamples.push_back(w.str() + " / s" + std::to_string(s));
    }
  }
  return report;
}

VerificationReport check_commuting_descents_commute(const CoxeterSystem& W) {
  VerificationReport report{"commuting_descents_commute", W.name()};
  if (W.type() != CoxeterType::A) {
    report.skipped = true;
    report.note = "fails outside type A (longest element of B_n)";
    return report;
  }
  for (const FiniteElement& w : W.elements()) {
    if (!full_support(w)) continue;
    GenSet comm = commuting_descents(w);
    for (int s : comm)
      for (int t : comm) {
        if (s >= t) continue;
        ++report.checked;
        if (W.coxeter_m(s, t) != 2)
          report.counterexamples.push_back(w.str() + " / s" + std::to_string(s) + ",s" +
                                           std::to_string(t));
      }
  }
  return report;
}

VerificationReport check_coxeter_no_commuting_descents(const CoxeterSystem& W) {
  VerificationReport report{"coxeter_no_commuting_descents", W.name()};
  for (const FiniteElement& w : W.elements()) {
    if (!is_coxeter(w)) continue;
    ++report.checked;
    if (!commuting_descents(w).empty()) report.counterexamples.push_back(w.str());
  }
  return report;
}

VerificationReport check_wform_decomposition(const CoxeterSystem& W) {
  VerificationReport report{"wform_decomposition", W.name()};
  for (const FiniteElement& w : W.elements()) {
    if (!full_support(w)) continue;
    try {
      auto decomposition = wform_decompose(w);
      if (!decomposition) continue;
      ++report.checked;
      // Partition of S: left descents plus the blocks, no overlap.
      GenSet covered = descents(w, Side::Left);
      bool ok = true;
      for (const auto& [block, piece] : decomposition->factors)
        for (int g : block) ok &= covered.insert(g).second;
      ok &= static_cast<int>(covered.size()) == W.rank();
      if (!ok) report.counterexamples.push_back(w.str());
    } catch (const std::logic_error&) {
      report.counterexamples.push_back(w.str());
    }
  }
  return report;
}

}  // namespace adlv
