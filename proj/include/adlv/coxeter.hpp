// Finite Weyl group arithmetic for the types A_n, C2, G2: canonical element
// forms, length and descent computations, support, conjugacy classes, and the
// Coxeter / elliptic classification.
//
// Type A elements are stored as one-line permutations of {1, ..., n+1} with
// s_i = (i, i+1).  The dihedral groups C2 and G2 are stored as indices into a
// precomputed element table holding ShortLex normal forms and the action on
// the cocharacter lattice.  Equality of canonical forms is structural.

#pragma once

#include <array>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace adlv {

enum class CoxeterType { A, C2, G2 };
enum class Side { Left, Right };

using Word = std::vector<int>;    // generator indices, 1-based
using GenSet = std::set<int>;     // descent / support sets
using IntVec = std::vector<int>;  // lattice and root coordinate vectors

class FiniteElement;

class CoxeterSystem : public std::enable_shared_from_this<CoxeterSystem> {
public:
  static std::shared_ptr<const CoxeterSystem> type_a(int rank);
  static std::shared_ptr<const CoxeterSystem> c2();
  static std::shared_ptr<const CoxeterSystem> g2();

  CoxeterType type() const { return type_; }
  int rank() const { return rank_; }
  // Dimension of the cocharacter coordinate space (n+1 for A_n, 2 otherwise).
  int lattice_dim() const { return lattice_dim_; }
  int coxeter_m(int i, int j) const;

  // Roots are stored as pairing vectors: <alpha, lambda> is the dot product
  // of the root vector with the cocharacter coordinates.
  const std::vector<IntVec>& positive_roots() const { return positive_roots_; }
  const IntVec& simple_root(int i) const;
  const IntVec& simple_coroot(int i) const;
  const IntVec& rho2() const { return rho2_; }  // sum of all positive roots

  std::size_t order() const;

  FiniteElement identity() const;
  FiniteElement generator(int i) const;
  FiniteElement from_word(const Word& word) const;
  FiniteElement from_oneline(const std::vector<int>& oneline) const;  // type A
  std::vector<FiniteElement> elements() const;

  std::string name() const;  // "A4", "C2", "G2"
  bool same_as(const CoxeterSystem& other) const;

private:
  struct DihedralEntry {
    Word word;               // ShortLex-minimal reduced word
    std::array<int, 4> mat;  // row-major 2x2 action on cocharacters
    int inverse = 0;
  };

  CoxeterSystem() = default;
  void build_dihedral_table();

  friend class FiniteElement;

  CoxeterType type_ = CoxeterType::A;
  int rank_ = 0;
  int lattice_dim_ = 0;
  std::vector<std::vector<int>> coxeter_matrix_;
  std::vector<IntVec> simple_roots_;
  std::vector<IntVec> simple_coroots_;
  std::vector<IntVec> positive_roots_;
  IntVec rho2_;

  // C2/G2 only.
  std::vector<DihedralEntry> table_;
  std::vector<std::vector<int>> mult_;
};

class FiniteElement {
public:
  const CoxeterSystem& system() const { return *sys_; }
  std::shared_ptr<const CoxeterSystem> system_ptr() const { return sys_; }

  int length() const;
  bool is_identity() const;

  FiniteElement operator*(const FiniteElement& other) const;
  FiniteElement inverse() const;

  bool operator==(const FiniteElement& other) const;
  bool operator!=(const FiniteElement& other) const { return !(*this == other); }
  bool operator<(const FiniteElement& other) const;  // arbitrary total order

  // Type A accessor; throws elsewhere.  Values are 1-based.
  const std::vector<int>& oneline() const;
  int dihedral_id() const;

  std::string str() const;

private:
  friend class CoxeterSystem;
  FiniteElement(std::shared_ptr<const CoxeterSystem> sys, std::vector<int> oneline);
  FiniteElement(std::shared_ptr<const CoxeterSystem> sys, int id);

  std::shared_ptr<const CoxeterSystem> sys_;
  std::vector<int> oneline_;  // type A
  int id_ = 0;                // dihedral
};

// ShortLex-minimal reduced word for w.
Word reduced_word(const FiniteElement& w);

GenSet descents(const FiniteElement& w, Side side);
GenSet support(const FiniteElement& w);

bool is_coxeter(const FiniteElement& w);

// Type A tests for a full cycle; C2/G2 exhaust the parabolic conjugates.
bool is_elliptic(const FiniteElement& w);
// Independent route, valid in every type: w avoids every conjugate of every
// proper parabolic subgroup.  Kept as a mutual oracle for is_elliptic.
bool is_elliptic_by_parabolic_exhaustion(const FiniteElement& w);

std::vector<FiniteElement> conjugacy_class(const FiniteElement& w);

}  // namespace adlv
