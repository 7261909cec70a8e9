#pragma once

#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hochkit/complexes.hpp"
#include "hochkit/hochschild.hpp"

namespace hochkit {

/// Section spaces are spans of Laurent monomials t^j with |j| <= bound.
struct MonomialWindow {
  int bound = 6;
};

/// Throws TruncationError unless bound >= max(4, |d| + 2) for every twist d.
void check_window(MonomialWindow m, std::initializer_list<int> twists);

/// Exponent range [lo, hi] of the windowed sections of O(d) over a set of
/// charts of the standard cover of P^1, as a bitmask: 1 = U_0, 2 = U_1,
/// 3 = U_0 ∩ U_1. In the U_0 trivialization U_0 gets [0, M], U_1 gets
/// [-M, min(d, M)] and the overlap [-M, M].
std::pair<int, int> section_range(int d, unsigned charts, MonomialWindow m);

/// A basis element: a chart tuple and one exponent per factor.
struct CechCell {
  std::vector<int> tuple;
  std::vector<int> exponents;
};

/// Čech complex on strictly increasing chart tuples.
struct CechComplex {
  int charts = 0;
  std::vector<int> twists;
  MonomialWindow window;
  std::vector<std::vector<CechCell>> cells;
  CochainComplex complex;
};

/// O(d) on P^1 with the two-chart cover; degrees 0 and 1. Labels look like
/// "(0,1):t^-2".
CechComplex cech_complex(int d, MonomialWindow m, Field field = Field::rationals());
/// O(a)⊠O(b) on P^1×P^1 with the charts U_i×V_j numbered 2i + j; degrees 0..3.
/// Labels look like "(00,11):s^1t^-1".
CechComplex product_cech_complex(int a, int b, MonomialWindow m, Field field = Field::rationals());
/// C(P^1, O(d1)^∨ ⊗ O(d2)), i.e. the complex of O(d2 - d1).
CochainComplex hom_complex_cech(int d1, int d2, MonomialWindow m, Field field = Field::rationals());

/// Cosimplicial vector space truncated at level top.
struct CosimplicialObject {
  Field field;
  int top = 0;
  std::vector<size_t> dims;
  /// coface[p][i] = ∂^i : V^{p-1} -> V^p for 1 <= p <= top, 0 <= i <= p.
  std::vector<std::vector<SparseMatrix>> coface;
  /// codegeneracy[p][i] = s^i : V^{p+1} -> V^p for p < top, 0 <= i <= p.
  std::vector<std::vector<SparseMatrix>> codegeneracy;
  std::function<std::string(int, size_t)> labeler;

  size_t dim(int p) const { return p < 0 || p > top ? 0 : dims[static_cast<size_t>(p)]; }
  std::string label(int p, size_t i) const;
};

/// Descriptions of the failing cosimplicial identities; empty when all hold.
std::vector<std::string> check_cosimplicial(const CosimplicialObject& v);
/// V^p = field^dim, every structure map the identity.
CosimplicialObject constant_cosimplicial(Field field, size_t dim, int top);
/// Levelwise tensor product V^p ⊗ W^p (index a * dim W^p + b) with
/// diagonal structure maps.
CosimplicialObject diagonal(const CosimplicialObject& v, const CosimplicialObject& w);
/// V^0..V^top with d = sum (-1)^i ∂^i, reliable up to top - 1.
CochainComplex unnormalized_complex(const CosimplicialObject& v);

struct NormalizedComplex {
  CochainComplex complex;
  /// N^p -> V^p; the columns are a reduced echelon basis of ∩ ker s^i.
  std::vector<SparseMatrix> inclusion;
  /// Pivot coordinates of that basis.
  std::vector<std::vector<uint32_t>> pivots;

  /// Coordinates in N^p of a vector of V^p that lies in N^p.
  SparseVector coordinates(int p, const SparseVector& v) const;
};

/// N^p = ∩_{i<p} ker(s^i : V^p -> V^{p-1}) with the restricted alternating
/// differential. Throws InvalidCosimplicial when an identity fails.
NormalizedComplex normalize(const CosimplicialObject& v);

/// Ordered Čech object of Hom(O(d1), O(d2)): V^p is the sum over all tuples
/// in {0,1}^{p+1} of the windowed sections of O(d2 - d1). Cofaces delete an
/// index (a monomial inclusion), codegeneracies repeat one.
struct CechObject {
  int source = 0;
  int target = 0;
  MonomialWindow window;
  std::vector<std::vector<CechCell>> cells;
  CosimplicialObject object;

  int twist() const { return target - source; }
  int top() const { return object.top; }
  /// Basis index of t^j over a tuple, or nullopt outside the window.
  std::optional<size_t> index(const std::vector<int>& tuple, int j) const;
};

CechObject cech_object(int d, MonomialWindow m, int top, Field field = Field::rationals());
CechObject cech_hom_object(int d1, int d2, MonomialWindow m, int top, Field field = Field::rationals());
/// The identity of Hom(O(d), O(d)) as a 0-cochain. Requires twist 0.
SparseVector identity_cochain(const CechObject& c);
/// The same cochain in an object with the same twist and a larger window.
SparseVector rewindow(const CechObject& from, int p, const SparseVector& v, const CechObject& to);

/// Hom(O(f.source), O(g.target)) with window f.bound + g.bound, which holds
/// every product of sections. Throws ShapeMismatch unless f.target == g.source.
CechObject compose_target(const CechObject& f, const CechObject& g);
/// (α⌣β)(i_0..i_{p+q}) = α(i_0..i_p) β(i_p..i_{p+q}), a (p+q)-cochain of
/// compose_target(f, g). Throws ShapeMismatch on non-composable inputs or
/// p + q > top.
SparseVector aw_compose(const CechObject& f, int p, const SparseVector& alpha, const CechObject& g, int q,
                        const SparseVector& beta, const CechObject& target);

/// Cup pairing H^p Hom(O(d1), O(d2)) × H^q Hom(O(d2), O(d3)) -> H^{p+q} Hom(O(d1), O(d3)),
/// one dim H^p × dim H^q matrix per coordinate of the target.
std::vector<SparseMatrix> yoneda_pairing(int d1, int d2, int d3, int p, int q, MonomialWindow m,
                                         Field field = Field::rationals());

/// x ∈ V^p, y ∈ W^q to (front face x) ⊗ (back face y) in V^{p+q} ⊗ W^{p+q}.
SparseVector box_product(const CosimplicialObject& v, int p, const SparseVector& x, const CosimplicialObject& w,
                         int q, const SparseVector& y);

struct EilenbergZilber {
  NormalizedComplex left;
  NormalizedComplex right;
  NormalizedComplex diagonal;
  /// N(V) ⊗ N(W), degrees 0..2 top, reliable up to top - 1.
  std::shared_ptr<const CochainComplex> tensor;
  /// Alexander–Whitney, N(V) ⊗ N(W) -> N(V⊗W): front cofaces on V, back
  /// cofaces on W. Degrees 0..top.
  ChainMap aw;
  /// Eilenberg–Zilber, N(V⊗W) -> N(V) ⊗ N(W): signed sum over shuffles of
  /// codegeneracies. Degrees 0..top.
  ChainMap ez;
};

EilenbergZilber eilenberg_zilber(const CosimplicialObject& v, const CosimplicialObject& w);

/// dim H^n(P^1×P^1, O(a)⊠O(b)) against the convolution of the factor dims
/// for n = 0..2, plus witnesses: the normalized diagonal of the two ordered
/// Čech objects computes the same dims, AW and EZ are chain maps inducing
/// isomorphisms, and EZ∘AW is the identity on N⊗N in degrees <= 2.
KunnethReport kunneth_cech_check(int a, int b, MonomialWindow m, Field field = Field::rationals());

}  // namespace hochkit
