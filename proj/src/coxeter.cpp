#include "adlv/coxeter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace adlv {

namespace {

std::array<int, 4> mat_mul(const std::array<int, 4>& a, const std::array<int, 4>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

int inversion_count(const std::vector<int>& oneline) {
  int inv = 0;
  for (std::size_t i = 0; i < oneline.size(); ++i)
    for (std::size_t j = i + 1; j < oneline.size(); ++j)
      if (oneline[i] > oneline[j]) ++inv;
  return inv;
}

}  // namespace

std::shared_ptr<const CoxeterSystem> CoxeterSystem::type_a(int rank) {
  if (rank < 1 || rank > 9)
    throw std::invalid_argument("type A rank must be between 1 and 9");
  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  sys->type_ = CoxeterType::A;
  sys->rank_ = rank;
  sys->lattice_dim_ = rank + 1;
  sys->coxeter_matrix_.assign(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) {
    sys->coxeter_matrix_[i][i] = 1;
    if (i + 1 < rank) sys->coxeter_matrix_[i][i + 1] = sys->coxeter_matrix_[i + 1][i] = 3;
  }
  for (int i = 1; i <= rank; ++i) {
    IntVec root(rank + 1, 0);
    root[i - 1] = 1;
    root[i] = -1;
    sys->simple_roots_.push_back(root);
    sys->simple_coroots_.push_back(root);
  }
  for (int i = 0; i < rank + 1; ++i)
    for (int j = i + 1; j < rank + 1; ++j) {
      IntVec root(rank + 1, 0);
      root[i] = 1;
      root[j] = -1;
      sys->positive_roots_.push_back(root);
    }
  sys->rho2_.assign(rank + 1, 0);
  for (const auto& root : sys->positive_roots_)
    for (int k = 0; k < rank + 1; ++k) sys->rho2_[k] += root[k];
  return sys;
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::c2() {
  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  sys->type_ = CoxeterType::C2;
  sys->rank_ = 2;
  sys->lattice_dim_ = 2;
  sys->coxeter_matrix_ = {{1, 4}, {4, 1}};
  // Realized on Z^2 with roots e1-e2, e2, e1, e1+e2; the cocharacter lattice
  // contains the coroot lattice with index 2.
  sys->simple_roots_ = {{1, -1}, {0, 1}};
  sys->simple_coroots_ = {{1, -1}, {0, 2}};
  sys->positive_roots_ = {{1, -1}, {0, 1}, {1, 0}, {1, 1}};
  sys->rho2_ = {3, 1};
  sys->build_dihedral_table();
  return sys;
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::g2() {
  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  sys->type_ = CoxeterType::G2;
  sys->rank_ = 2;
  sys->lattice_dim_ = 2;
  sys->coxeter_matrix_ = {{1, 6}, {6, 1}};
  // Fundamental coweight coordinates; the coroot lattice is all of Z^2.
  // Roots are written by their coefficients on the simple roots, alpha_1
  // short, so the pairing is the plain dot product.
  sys->simple_roots_ = {{1, 0}, {0, 1}};
  sys->simple_coroots_ = {{2, -3}, {-1, 2}};
  sys->positive_roots_ = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  sys->rho2_ = {10, 6};
  sys->build_dihedral_table();
  return sys;
}

void CoxeterSystem::build_dihedral_table() {
  const std::array<int, 4> id_mat = {1, 0, 0, 1};
  std::vector<std::array<int, 4>> gens;
  for (int i = 0; i < 2; ++i) {
    const IntVec& root = simple_roots_[i];
    const IntVec& coroot = simple_coroots_[i];
    std::array<int, 4> m = id_mat;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m[r * 2 + c] -= coroot[r] * root[c];
    gens.push_back(m);
  }

  std::map<std::array<int, 4>, int> index;
  table_.push_back({Word{}, id_mat, 0});
  index[id_mat] = 0;
  // Breadth-first over appended generators; first arrival fixes the ShortLex
  // normal form.
  for (std::size_t head = 0; head < table_.size(); ++head) {
    for (int g = 1; g <= 2; ++g) {
      auto mat = mat_mul(table_[head].mat, gens[g - 1]);
      if (index.count(mat)) continue;
      Word word = table_[head].word;
      word.push_back(g);
      index[mat] = static_cast<int>(table_.size());
      table_.push_back({std::move(word), mat, 0});
    }
  }
  const std::size_t n = table_.size();
  if (n != 2u * coxeter_matrix_[0][1])
    throw std::logic_error("dihedral table has unexpected size");
  mult_.assign(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mult_[a][b] = index.at(mat_mul(table_[a].mat, table_[b].mat));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mult_[a][b] == 0) table_[a].inverse = static_cast<int>(b);
}

int CoxeterSystem::coxeter_m(int i, int j) const {
  if (i < 1 || i > rank_ || j < 1 || j > rank_)
    throw std::out_of_range("generator index out of range");
  return coxeter_matrix_[i - 1][j - 1];
}

const IntVec& CoxeterSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("generator index out of range");
  return simple_roots_[i - 1];
}

const IntVec& CoxeterSystem::simple_coroot(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("generator index out of range");
  return simple_coroots_[i - 1];
}

std::size_t CoxeterSystem::order() const {
  if (type_ == CoxeterType::A) {
    std::size_t f = 1;
    for (int k = 2; k <= rank_ + 1; ++k) f *= k;
    return f;
  }
  return table_.size();
}

FiniteElement CoxeterSystem::identity() const {
  if (type_ == CoxeterType::A) {
    std::vector<int> oneline(lattice_dim_);
    std::iota(oneline.begin(), oneline.end(), 1);
    return FiniteElement(shared_from_this(), std::move(oneline));
  }
  return FiniteElement(shared_from_this(), 0);
}

FiniteElement CoxeterSystem::generator(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("generator index out of range");
  return from_word({i});
}

FiniteElement CoxeterSystem::from_word(const Word& word) const {
  if (type_ == CoxeterType::A) {
    std::vector<int> oneline(lattice_dim_);
    std::iota(oneline.begin(), oneline.end(), 1);
    for (int g : word) {
      if (g < 1 || g > rank_) throw std::invalid_argument("generator index out of range");
      std::swap(oneline[g - 1], oneline[g]);  // right-multiply by s_g
    }
    return FiniteElement(shared_from_this(), std::move(oneline));
  }
  int id = 0;
  for (int g : word) {
    if (g < 1 || g > rank_) throw std::invalid_argument("generator index out of range");
    id = mult_[id][g];  // generators occupy table slots 1 and 2
  }
  return FiniteElement(shared_from_this(), id);
}

FiniteElement CoxeterSystem::from_oneline(const std::vector<int>& oneline) const {
  if (type_ != CoxeterType::A)
    throw std::invalid_argument("one-line form only applies to type A");
  if (static_cast<int>(oneline.size()) != lattice_dim_)
    throw std::invalid_argument("one-line form has wrong size");
  std::vector<bool> seen(lattice_dim_, false);
  for (int v : oneline) {
    if (v < 1 || v > lattice_dim_ || seen[v - 1])
      throw std::invalid_argument("one-line form is not a permutation");
    seen[v - 1] = true;
  }
  return FiniteElement(shared_from_this(), oneline);
}

std::vector<FiniteElement> CoxeterSystem::elements() const {
  std::vector<FiniteElement> out;
  if (type_ == CoxeterType::A) {
    std::vector<int> oneline(lattice_dim_);
    std::iota(oneline.begin(), oneline.end(), 1);
    do {
      out.push_back(FiniteElement(shared_from_this(), oneline));
    } while (std::next_permutation(oneline.begin(), oneline.end()));
    return out;
  }
  for (std::size_t id = 0; id < table_.size(); ++id)
    out.push_back(FiniteElement(shared_from_this(), static_cast<int>(id)));
  return out;
}

std::string CoxeterSystem::name() const {
  switch (type_) {
    case CoxeterType::A: return "A" + std::to_string(rank_);
    case CoxeterType::C2: return "C2";
    case CoxeterType::G2: return "G2";
  }
  return "?";
}

bool CoxeterSystem::same_as(const CoxeterSystem& other) const {
  return type_ == other.type_ && rank_ == other.rank_;
}

FiniteElement::FiniteElement(std::shared_ptr<const CoxeterSystem> sys, std::vector<int> oneline)
    : sys_(std::move(sys)), oneline_(std::move(oneline)) {}

FiniteElement::FiniteElement(std::shared_ptr<const CoxeterSystem> sys, int id)
    : sys_(std::move(sys)), id_(id) {}

int FiniteElement::length() const {
  if (sys_->type() == CoxeterType::A) return inversion_count(oneline_);
  return static_cast<int>(sys_->table_[id_].word.size());
}

bool FiniteElement::is_identity() const { return length() == 0; }

FiniteElement FiniteElement::operator*(const FiniteElement& other) const {
  if (!sys_->same_as(*other.sys_))
    throw std::invalid_argument("elements belong to different Coxeter systems");
  if (sys_->type() == CoxeterType::A) {
    std::vector<int> prod(oneline_.size());
    for (std::size_t i = 0; i < oneline_.size(); ++i)
      prod[i] = oneline_[other.oneline_[i] - 1];
    return FiniteElement(sys_, std::move(prod));
  }
  return FiniteElement(sys_, sys_->mult_[id_][other.id_]);
}

FiniteElement FiniteElement::inverse() const {
  if (sys_->type() == CoxeterType::A) {
    std::vector<int> inv(oneline_.size());
    for (std::size_t i = 0; i < oneline_.size(); ++i) inv[oneline_[i] - 1] = static_cast<int>(i) + 1;
    return FiniteElement(sys_, std::move(inv));
  }
  return FiniteElement(sys_, sys_->table_[id_].inverse);
}

bool FiniteElement::operator==(const FiniteElement& other) const {
  return sys_->same_as(*other.sys_) && oneline_ == other.oneline_ && id_ == other.id_;
}

bool FiniteElement::operator<(const FiniteElement& other) const {
  if (id_ != other.id_) return id_ < other.id_;
  return oneline_ < other.oneline_;
}

const std::vector<int>& FiniteElement::oneline() const {
  if (sys_->type() != CoxeterType::A)
    throw std::logic_error("one-line form only applies to type A");
  return oneline_;
}

int FiniteElement::dihedral_id() const {
  if (sys_->type() == CoxeterType::A)
    throw std::logic_error("dihedral id only applies to C2/G2");
  return id_;
}

std::string FiniteElement::str() const {
  Word word = reduced_word(*this);
  if (word.empty()) return "e";
  std::ostringstream os;
  for (int g : word) os << g;
  return os.str();
}

Word reduced_word(const FiniteElement& w) {
  const CoxeterSystem& sys = w.system();
  // Peeling the smallest left descent at each stage yields the
  // lexicographically least reduced word, in every type.
  Word word;
  FiniteElement cur = w;
  for (;;) {
    GenSet left = descents(cur, Side::Left);
    if (left.empty()) break;
    int g = *left.begin();
    word.push_back(g);
    cur = sys.generator(g) * cur;
  }
  return word;
}

GenSet descents(const FiniteElement& w, Side side) {
  const CoxeterSystem& sys = w.system();
  GenSet out;
  if (sys.type() == CoxeterType::A) {
    if (side == Side::Right) {
      const auto& oneline = w.oneline();
      for (int i = 1; i < static_cast<int>(oneline.size()); ++i)
        if (oneline[i - 1] > oneline[i]) out.insert(i);
      return out;
    }
    return descents(w.inverse(), Side::Right);
  }
  for (int g = 1; g <= sys.rank(); ++g) {
    FiniteElement s = sys.generator(g);
    FiniteElement prod = (side == Side::Left) ? s * w : w * s;
    if (prod.length() < w.length()) out.insert(g);
  }
  return out;
}

GenSet support(const FiniteElement& w) {
  const CoxeterSystem& sys = w.system();
  GenSet out;
  if (sys.type() == CoxeterType::A) {
    // Generator i lies outside the support exactly when w stabilizes
    // {1, ..., i}, so track the running maximum of the one-line form.
    const auto& oneline = w.oneline();
    int running = 0;
    for (int i = 1; i < static_cast<int>(oneline.size()); ++i) {
      running = std::max(running, oneline[i - 1]);
      if (running != i) out.insert(i);
    }
    return out;
  }
  for (int g : reduced_word(w)) out.insert(g);
  return out;
}

bool is_coxeter(const FiniteElement& w) {
  return w.length() == w.system().rank() &&
         static_cast<int>(support(w).size()) == w.system().rank();
}

bool is_elliptic(const FiniteElement& w) {
  const CoxeterSystem& sys = w.system();
  if (sys.type() == CoxeterType::A) {
    // Elliptic = a single cycle through all points.
    const auto& oneline = w.oneline();
    int steps = 1;
    for (int p = oneline[0]; p != 1; p = oneline[p - 1]) ++steps;
    return steps == static_cast<int>(oneline.size());
  }
  return is_elliptic_by_parabolic_exhaustion(w);
}

namespace {

std::set<FiniteElement> subgroup_closure(const CoxeterSystem& sys, const GenSet& gens) {
  std::set<FiniteElement> members{sys.identity()};
  std::queue<FiniteElement> queue;
  queue.push(sys.identity());
  while (!queue.empty()) {
    FiniteElement cur = queue.front();
    queue.pop();
    for (int g : gens) {
      FiniteElement next = cur * sys.generator(g);
      if (members.insert(next).second) queue.push(next);
    }
  }
  return members;
}

}  // namespace

bool is_elliptic_by_parabolic_exhaustion(const FiniteElement& w) {
  const CoxeterSystem& sys = w.system();
  std::vector<FiniteElement> cls = conjugacy_class(w);
  // Containment in a conjugate of a proper parabolic is detected on the
  // maximal ones: drop a single generator at a time.
  for (int skip = 1; skip <= sys.rank(); ++skip) {
    GenSet gens;
    for (int g = 1; g <= sys.rank(); ++g)
      if (g != skip) gens.insert(g);
    std::set<FiniteElement> sub = subgroup_closure(sys, gens);
    for (const FiniteElement& u : cls)
      if (sub.count(u)) return false;
  }
  return true;
}

std::vector<FiniteElement> conjugacy_class(const FiniteElement& w) {
  const CoxeterSystem& sys = w.system();
  std::set<FiniteElement> seen{w};
  std::queue<FiniteElement> queue;
  queue.push(w);
  while (!queue.empty()) {
    FiniteElement cur = queue.front();
    queue.pop();
    for (int g = 1; g <= sys.rank(); ++g) {
      FiniteElement s = sys.generator(g);
      FiniteElement conj = s * cur * s;
      if (seen.insert(conj).second) queue.push(conj);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace adlv
