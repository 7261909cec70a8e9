#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hochkit/complexes.hpp"
#include "hochkit/linalg.hpp"

namespace hochkit {

/// One failed axiom with the basis tuple that witnesses it.
struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Finite-dimensional dg-algebra given by structure constants on a labeled
/// homogeneous basis. Products and differentials are sparse combinations of
/// basis indices. Products with the unit are preset to the unit law.
class DgAlgebra {
 public:
  DgAlgebra() = default;
  DgAlgebra(Field field, std::vector<std::string> labels, std::vector<int> degrees,
            uint32_t unit);

  Field field() const { return field_; }
  size_t dim() const { return labels_.size(); }
  const std::string& label(size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int degree(size_t i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }
  uint32_t unit() const { return unit_; }
  std::optional<uint32_t> index_of(const std::string& label) const;

  const SparseVector& product(size_t i, size_t j) const { return mult_[i * dim() + j]; }
  const SparseVector& differential(size_t i) const { return diff_[i]; }
  /// Values are reduced into the field and canonicalized.
  void set_product(size_t i, size_t j, SparseVector v);
  void set_differential(size_t i, SparseVector v);

  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
  SparseVector apply_d(const SparseVector& a) const;
  SparseVector basis_vector(size_t i) const { return {{static_cast<uint32_t>(i), Rational(1)}}; }

  /// All degrees zero (then the differential vanishes on valid algebras).
  bool is_degree_zero() const;
  bool has_zero_differential() const;
  int min_degree() const;
  int max_degree() const;

  friend bool operator==(const DgAlgebra& a, const DgAlgebra& b);
  friend bool operator!=(const DgAlgebra& a, const DgAlgebra& b) { return !(a == b); }

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  uint32_t unit_ = 0;
  std::vector<SparseVector> mult_;
  std::vector<SparseVector> diff_;
};

/// Degree-preserving, unital, multiplicative chain map of algebras, given on
/// basis elements.
struct AlgebraMorphism {
  std::shared_ptr<const DgAlgebra> source;
  std::shared_ptr<const DgAlgebra> target;
  std::vector<SparseVector> images;
};

/// Left A, right B dg-bimodule on a labeled homogeneous basis.
/// left_action(a, m) = a·m and right_action(m, b) = m·b.
class DgBimodule {
 public:
  DgBimodule() = default;
  DgBimodule(std::shared_ptr<const DgAlgebra> left, std::shared_ptr<const DgAlgebra> right,
             std::vector<std::string> labels, std::vector<int> degrees);

  const DgAlgebra& left() const { return *left_; }
  const DgAlgebra& right() const { return *right_; }
  std::shared_ptr<const DgAlgebra> left_ptr() const { return left_; }
  std::shared_ptr<const DgAlgebra> right_ptr() const { return right_; }
  Field field() const { return left_->field(); }
  size_t dim() const { return labels_.size(); }
  const std::string& label(size_t i) const { return labels_[i]; }
  int degree(size_t i) const { return degrees_[i]; }

  const SparseVector& left_action(size_t a, size_t m) const { return left_act_[a * dim() + m]; }
  const SparseVector& right_action(size_t m, size_t b) const {
    return right_act_[m * right_->dim() + b];
  }
  const SparseVector& differential(size_t m) const { return diff_[m]; }
  void set_left_action(size_t a, size_t m, SparseVector v);
  void set_right_action(size_t m, size_t b, SparseVector v);
  void set_differential(size_t m, SparseVector v);

  SparseVector act_left(const SparseVector& a, const SparseVector& m) const;
  SparseVector act_right(const SparseVector& m, const SparseVector& b) const;
  SparseVector apply_d(const SparseVector& m) const;

 private:
  std::shared_ptr<const DgAlgebra> left_, right_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::vector<SparseVector> left_act_;
  std::vector<SparseVector> right_act_;
  std::vector<SparseVector> diff_;
};

ValidationReport validate(const DgAlgebra& a);
ValidationReport validate(const AlgebraMorphism& f);
ValidationReport validate(const DgBimodule& m);

/// Throws InvalidAlgebra carrying the first violation.
void require_valid(const DgAlgebra& a);

DgAlgebra ground_field(Field field);

/// Same labels; mu_op(i, j) = (-1)^{|i||j|} mu(j, i).
DgAlgebra opposite(const DgAlgebra& a);
/// Basis (i, j) in i-major order labeled "a⊗b", unit 1⊗1,
/// (a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa'⊗bb', d(a⊗b) = da⊗b + (-1)^{|a|} a⊗db.
DgAlgebra tensor_algebras(const DgAlgebra& a, const DgAlgebra& b);
/// opposite(a) ⊗ a, with the opposite factor's labels marked by "°".
DgAlgebra enveloping(const DgAlgebra& a);
/// M_n(a) on the basis e_ij⊗a_k, except that e_nn⊗1 is replaced by the
/// unit "1", which is moved to the front. n = 1 returns a unchanged.
DgAlgebra matrix_algebra(const DgAlgebra& a, int n);

/// Isomorphism k⊗A -> A sending 1⊗a to a.
AlgebraMorphism unit_tensor_isomorphism(const DgAlgebra& a);

DgBimodule diagonal_bimodule(std::shared_ptr<const DgAlgebra> a);
/// A as a left module over A^e = enveloping(A) (right algebra the ground
/// field), (a°⊗b)·m = (-1)^{|a|(|b|+|m|)} b m a.
DgBimodule enveloping_module(std::shared_ptr<const DgAlgebra> a);

/// M ⊗_A N as the cokernel of
///   Sigma(v, f, w) = M(f)(v)⊗w - (-1)^{|v||f|} v⊗f·w,   M(f)(v) = (-1)^{|v||f|} v·f,
/// with the induced differential d(v⊗w) = dv⊗w + (-1)^{|v|} v⊗dw. The
/// basis of each degree is the set of v⊗w not among the pivots of the
/// image, labeled "v⊗w". Throws InvalidModule when the actions do not
/// match a.
CochainComplex tensor_over(const DgBimodule& m, const DgAlgebra& a, const DgBimodule& n);

/// {z : za = az for all a}. Throws InvalidAlgebra unless a is concentrated
/// in degree 0.
Subspace center_degree0(const DgAlgebra& a);

}  // namespace hochkit
