#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hochkit/complexes.hpp"
#include "hochkit/dgalg.hpp"
#include "hochkit/hochschild.hpp"

namespace hochkit {

/// Chain groups C_0..C_top with b: C_n -> C_{n-1} and B: C_n -> C_{n+1}.
/// b[0] is the zero map to a 0-dimensional space; B is stored for n < top.
struct MixedComplex {
  Field field;
  int top = 0;
  std::vector<size_t> dims;
  std::vector<SparseMatrix> b;
  std::vector<SparseMatrix> B;
  std::function<std::string(int, size_t)> labeler;

  size_t dim(int n) const { return n < 0 || n > top ? 0 : dims[static_cast<size_t>(n)]; }
  std::string label(int n, size_t i) const;
};

/// Normalized Hochschild chains of a degree-0 algebra through level n_max, with
/// B(a_0[a_1|...|a_n]) = sum_i (-1)^{ni} 1[a_i|...|a_n|a_0|...|a_{i-1}].
/// Throws InvalidAlgebra for algebras with nonzero degrees, CapExceeded,
/// TruncationError for n_max < 2.
MixedComplex mixed_complex(const DgAlgebra& a, int n_max, HochschildOptions options = {});

/// Degrees (n, what) where b², B² or bB + Bb fail.
std::vector<std::string> check_mixed(const MixedComplex& m);

/// (M⊗N)_n = ⊕ M_p⊗N_q with blocks ordered by p descending (the order of
/// tensor() on the complexes stored in degrees -n), b = b⊗1 + (-1)^p 1⊗b and
/// B = B⊗1 + (-1)^p 1⊗B.
MixedComplex tensor(const MixedComplex& m, const MixedComplex& n);

/// The (b,B)-bicomplex totalization Tot_n = ⊕_k C_{n-2k} u^{-k} stored in
/// degree -n, d(x u^{-k}) = bx u^{-k} + Bx u^{-k+1}. Degrees -top..0, exact
/// homology for n <= top - 1.
CochainComplex cyclic_total(const MixedComplex& m);
/// Position of the block C_{n-2k} u^{-k} inside Tot_n.
size_t cyclic_block_offset(const MixedComplex& m, int n, int k);

/// dim HC_n(A) for n = 0..n_max-2, from the total complex through level n_max.
std::vector<size_t> cyclic_homology_dims(const DgAlgebra& a, int n_max, HochschildOptions options = {});

struct SequenceNode {
  std::string label;
  int degree;
  size_t dim;
  bool exact;
};

/// Long exact sequence verified as im = ker at every listed node, plus
/// auxiliary chain-level witnesses.
struct ExactSequenceReport {
  std::string name;
  std::vector<SequenceNode> nodes;
  std::vector<std::pair<std::string, bool>> witnesses;
  bool pass() const;
};

/// Connes' sequence ... -> HH_n -I-> HC_n -S-> HC_{n-2} -B-> HH_{n-1} -> ...
/// with exactness checked at every node with n <= n_max - 2.
ExactSequenceReport periodicity_sequence_check(const DgAlgebra& a, int n_max, HochschildOptions options = {});

/// ... -> HC_n(A⊗B) -Δ-> ⊕ HC_p(A)⊗HC_q(B) -(S⊗1 - 1⊗S)-> ⊕_{p+q=n-2} HC_p(A)⊗HC_q(B)
///     -∂-> HC_{n-1}(A⊗B) -> ...
/// The first family is computed on the mixed complex C(A)⊗C(B). The sequence
/// comes from 0 -> CC(C(A)⊗C(B)) -Δ-> CC(A)⊗CC(B) -Φ-> CC(A)⊗CC(B)[2] -> 0.
/// sh + u·sh', with sh' the cyclic shuffle map, is checked to be a chain map
/// of total complexes inducing isomorphisms onto HC_*(A⊗B).
ExactSequenceReport hc_kunneth_sequence_check(const DgAlgebra& a, const DgAlgebra& b, int n_max,
                                              HochschildOptions options = {});

}  // namespace hochkit
