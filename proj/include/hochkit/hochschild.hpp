#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hochkit/complexes.hpp"
#include "hochkit/dgalg.hpp"

namespace hochkit {

struct HochschildOptions {
  /// Normalized bar construction on Ā = A / k·1.
  bool reduced = true;
  /// Lifts the dimension cap of 16.
  bool allow_large = false;
};

/// Tensor words in the letters of Ā (reduced) or A, encoded in base
/// letters(): word (w_1, ..., w_n) has index sum w_i * letters()^{n-i}.
class BarBasis {
 public:
  BarBasis(std::shared_ptr<const DgAlgebra> algebra, bool reduced);

  const DgAlgebra& algebra() const { return *algebra_; }
  bool reduced() const { return reduced_; }
  size_t letters() const { return letter_to_index_.size(); }
  /// Algebra basis index of a letter, and the letter of a basis index
  /// (-1 for the unit in the reduced case).
  uint32_t letter_index(size_t letter) const { return letter_to_index_[letter]; }
  int32_t letter_of(size_t index) const { return index_to_letter_[index]; }
  int letter_degree(size_t letter) const { return algebra_->degree(letter_to_index_[letter]); }

  /// letters()^n; throws CapExceeded beyond 2^32.
  uint64_t count(int n) const;
  std::vector<uint32_t> decode(uint64_t word, int n) const;
  uint64_t encode(const std::vector<uint32_t>& word) const;
  std::string word_label(uint64_t word, int n) const;

 private:
  std::shared_ptr<const DgAlgebra> algebra_;
  bool reduced_;
  std::vector<uint32_t> letter_to_index_;
  std::vector<int32_t> index_to_letter_;
};

/// Generator of a Hochschild (co)chain space: simplicial level, bar word,
/// and algebra basis element (the value of a cochain, or a_0 of a chain).
struct BarCell {
  int level;
  uint64_t word;
  uint32_t element;
};

/// The basis of each total degree of a bar-type complex, as runs of cells
/// sharing a level. Cells inside a run are sorted by (word, element).
class BarLayout {
 public:
  struct Run {
    int level;
    size_t offset;
    std::vector<uint64_t> keys;  // word * dim A + element
  };

  BarLayout() = default;
  BarLayout(int lo, int hi) : lo_(lo), runs_(static_cast<size_t>(hi - lo + 1)) {}

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(runs_.size()) - 1; }
  const std::vector<Run>& runs(int degree) const { return runs_[static_cast<size_t>(degree - lo_)]; }
  std::vector<Run>& runs(int degree) { return runs_[static_cast<size_t>(degree - lo_)]; }
  size_t dim(int degree) const;

  BarCell cell(int degree, size_t index, size_t algebra_dim) const;
  /// Position of a cell in its degree, or -1 when absent.
  int64_t position(int degree, int level, uint64_t key) const;

 private:
  int lo_ = 0;
  std::vector<std::vector<Run>> runs_;
};

/// Hochschild cochains Hom((sĀ)^{⊗n}, A), |sa| = |a| - 1, in total degree
/// n + |f|. The differential is the twisted convolution differential
/// D F = d∘F - (-1)^{|F|} F∘d_bar - [π, F] with π[a] = a, rescaled by
/// (-1)^{n(n+1)/2} on level n so that for ungraded algebras it is the
/// classical δ. The complex is built through simplicial level `level`; the
/// reliable range is recorded on `complex`.
struct HochschildCochainComplex {
  std::shared_ptr<const DgAlgebra> algebra;
  std::shared_ptr<const BarBasis> bar;
  int level = 0;
  BarLayout layout;
  CochainComplex complex;

  /// Internal degree of a cochain cell: |value| - sum of letter degrees.
  int internal_degree(const BarCell& c) const;
};

/// Hochschild chains A ⊗ (sĀ)^{⊗n}; a_0[a_1|...|a_n] sits in cohomological
/// degree |a_0| + ... + |a_n| - n. The differential is d ⊗ 1 + 1 ⊗ d_bar plus
/// the two twisting terms a_0 a_1[a_2|...] and the cyclic term with a_n moved
/// to the front, all with Koszul signs in the shifted degrees. For ungraded
/// algebras it is the classical b.
struct HochschildChainComplex {
  std::shared_ptr<const DgAlgebra> algebra;
  std::shared_ptr<const BarBasis> bar;
  int level = 0;
  BarLayout layout;
  CochainComplex complex;
};

/// Cochain complex built through simplicial level n_max; its reliable range
/// ends at total degree n_max - 1 + min degree. Throws InvalidAlgebra,
/// CapExceeded, TruncationError (n_max < 2, or Ā has positive degrees so
/// that total degrees are not finite).
HochschildCochainComplex hochschild_cochain_complex(const DgAlgebra& a, int n_max,
                                                    HochschildOptions options = {});
HochschildChainComplex hochschild_chain_complex(const DgAlgebra& a, int n_max,
                                                HochschildOptions options = {});

/// dim HH^n(A) for n = 0 .. n_max - 1 (the bar complex is built as deep as
/// needed for these degrees to be exact).
std::vector<size_t> hh_cohomology_dims(const DgAlgebra& a, int n_max, HochschildOptions options = {});
/// dim HH_n(A) for n = 0 .. n_max - 1.
std::vector<size_t> hh_homology_dims(const DgAlgebra& a, int n_max, HochschildOptions options = {});

/// Cup product of cochains of total degrees p and q. For f of level r and g
/// of level s and total degree q:
/// (f⌣g)(a_1..a_{r+s}) = (-1)^{rs + q(|sa_1|+...+|sa_r|)} f(a_1..a_r) g(a_{r+1}..a_{r+s}),
/// which has no sign for ungraded algebras. D is a derivation of ⌣.
/// Throws TruncationError past the constructed level.
SparseVector cup_product(const HochschildCochainComplex& c, int p, const SparseVector& f, int q,
                         const SparseVector& g);

/// The cochain of total degree 0 sending the empty word to the unit.
SparseVector unit_cochain(const HochschildCochainComplex& c);

/// Shuffle map C(A) ⊗ C(B) -> C(A⊗B). The source is the tensor product of
/// the factor chain complexes built through level n_max; maps are given in
/// the degrees -n with n <= n_max.
struct ShuffleMap {
  std::shared_ptr<const HochschildChainComplex> left;
  std::shared_ptr<const HochschildChainComplex> right;
  std::shared_ptr<const HochschildChainComplex> product;
  ChainMap map;
};
ShuffleMap shuffle_map(const DgAlgebra& a, const DgAlgebra& b, int n_max, HochschildOptions options = {});
/// Image of the cell a_0[a_1..a_p] ⊗ b_0[b_1..b_q] under the shuffle map,
/// in the chain basis of A⊗B at level p + q.
SparseVector shuffle_cells(const HochschildChainComplex& product, const HochschildChainComplex& left,
                           const HochschildChainComplex& right, const BarCell& x, const BarCell& y);

struct DegreeCheck {
  int degree;
  long expected;
  long actual;
  bool pass;
};

struct KunnethReport {
  std::string name;
  std::vector<DegreeCheck> checks;
  /// Extra verifications (shuffle cycles, injectivity, chain map).
  std::vector<std::pair<std::string, bool>> witnesses;
  bool pass() const;
};

/// dim HH^n(A⊗B) against sum_{p+q=n} dim HH^p(A) dim HH^q(B), n = 0..max_degree.
KunnethReport kunneth_check_cohomology(const DgAlgebra& a, const DgAlgebra& b, int max_degree,
                                       HochschildOptions options = {});
/// Same for HH_*, plus: the shuffle map is a chain map in the checked range
/// and sends tensor products of homology representatives to independent
/// classes.
KunnethReport kunneth_check_homology(const DgAlgebra& a, const DgAlgebra& b, int max_degree,
                                     HochschildOptions options = {});
/// HH^* of a and matrix_algebra(a, n) in degrees 0..max_degree.
KunnethReport morita_check(const DgAlgebra& a, int n, int max_degree, HochschildOptions options = {});

}  // namespace hochkit
