#include "adlv/geck_pfeiffer.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>

namespace adlv {

std::vector<ArrowStep> arrow_targets(const FiniteElement& w) {
  const CoxeterSystem& sys = w.system();
  std::vector<ArrowStep> out;
  for (int g = 1; g <= sys.rank(); ++g) {
    FiniteElement s = sys.generator(g);
    FiniteElement target = s * w * s;
    if (target.length() <= w.length()) out.push_back({w, g, target});
  }
  return out;
}

bool CyclicShiftClass::contains(const FiniteElement& w) const {
  return std::find(members.begin(), members.end(), w) != members.end();
}

CyclicShiftClass cyclic_shift_class(const FiniteElement& w) {
  CyclicShiftClass cls{w, {}, true};
  std::set<FiniteElement> seen{w};
  std::queue<FiniteElement> queue;
  queue.push(w);
  cls.members.push_back(w);
  while (!queue.empty()) {
    FiniteElement cur = queue.front();
    queue.pop();
    for (const ArrowStep& step : arrow_targets(cur)) {
      if (step.target.length() < cur.length()) {
        cls.terminal = false;
        continue;
      }
      if (seen.insert(step.target).second) {
        cls.members.push_back(step.target);
        queue.push(step.target);
      }
    }
  }
  return cls;
}

namespace {

// Breadth-first search through the equal-length arrow component of `from`,
// returning the chain to the first member with a strictly shorter conjugate
// (plus that dropping arrow), or nothing when the component is terminal.
std::optional<std::vector<ArrowStep>> find_drop(const FiniteElement& from) {
  std::map<FiniteElement, std::pair<FiniteElement, ArrowStep>> parent;
  std::set<FiniteElement> seen{from};
  std::queue<FiniteElement> queue;
  queue.push(from);
  while (!queue.empty()) {
    FiniteElement cur = queue.front();
    queue.pop();
    for (const ArrowStep& step : arrow_targets(cur)) {
      if (step.target.length() < cur.length()) {
        std::vector<ArrowStep> chain{step};
        FiniteElement walk = cur;
        while (walk != from) {
          auto& link = parent.at(walk);
          chain.push_back(link.second);
          walk = link.first;
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
    }
    for (const ArrowStep& step : arrow_targets(cur)) {
      if (step.target.length() == cur.length() && seen.insert(step.target).second) {
        parent.emplace(step.target, std::make_pair(cur, step));
        queue.push(step.target);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

MinimizationResult reduce_to_min(const FiniteElement& w) {
  MinimizationResult result{w, {}};
  for (;;) {
    auto chain = find_drop(result.minimum);
    if (!chain) return result;  // terminal component, minimal length
    result.minimum = chain->back().target;
    result.chain.insert(result.chain.end(), chain->begin(), chain->end());
  }
}

VerificationReport check_min_full_support_elliptic(const CoxeterSystem& W) {
  VerificationReport report{"min_full_support_elliptic", W.name()};
  const int rank = W.rank();
  for (const FiniteElement& w : W.elements()) {
    if (static_cast<int>(support(w).size()) != rank) continue;
    std::vector<FiniteElement> cls = conjugacy_class(w);
    int min_len = w.length();
    for (const FiniteElement& u : cls) min_len = std::min(min_len, u.length());
    if (w.length() != min_len) continue;
    ++report.checked;
    if (!is_elliptic(w)) report.counterexamples.push_back(w.str());
  }
  return report;
}

VerificationReport check_terminal_elliptic(const CoxeterSystem& W) {
  VerificationReport report{"terminal_cyc_elliptic", W.name()};
  for (const FiniteElement& w : W.elements()) {
    if (static_cast<int>(support(w).size()) != W.rank()) continue;
    if (!cyclic_shift_class(w).terminal) continue;
    ++report.checked;
    if (!is_elliptic(w)) report.counterexamples.push_back(w.str());
  }
  return report;
}

}  // namespace adlv
