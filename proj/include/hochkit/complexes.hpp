#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hochkit/linalg.hpp"

namespace hochkit {

/// Cochain complex of finite-dimensional spaces supported in the degree
/// window [lo, hi]; d^n maps degree n to degree n + 1.
///
/// A complex may be a truncation of an infinite one. The reliable range is
/// the set of degrees where cohomology equals that of the untruncated
/// complex; asking for cohomology outside it throws TruncationError.
/// Degrees outside [lo, hi] but inside the reliable range are zero.
class CochainComplex {
 public:
  using Labeler = std::function<std::string(int degree, size_t index)>;

  CochainComplex() = default;
  CochainComplex(Field field, int lo, int hi);

  Field field() const { return field_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }

  size_t dim(int n) const;
  /// Basis label; explicit labels win over the labeler, then "e<index>".
  std::string label(int n, size_t i) const;
  std::vector<std::string> labels(int n) const;
  /// d^n : C^n -> C^{n+1}; a zero matrix of the right shape when unset.
  SparseMatrix d(int n) const;

  /// Resizes degree n and resets the adjacent differentials to zero.
  void set_component(int n, size_t dim, std::vector<std::string> labels = {});
  void set_differential(int n, SparseMatrix d);
  void set_labeler(Labeler labeler) { labeler_ = std::move(labeler); }

  /// nullopt means unbounded on that side.
  std::optional<int> reliable_lo() const { return reliable_lo_; }
  std::optional<int> reliable_hi() const { return reliable_hi_; }
  void set_reliable(std::optional<int> lo, std::optional<int> hi) {
    reliable_lo_ = lo;
    reliable_hi_ = hi;
  }
  bool is_reliable(int n) const {
    return (!reliable_lo_ || n >= *reliable_lo_) && (!reliable_hi_ || n <= *reliable_hi_);
  }
  /// Throws TruncationError unless n is reliable.
  void require_reliable(int n) const;

  size_t total_dimension() const;
  /// sum (-1)^n dim C^n over the window.
  long euler_characteristic() const;

 private:
  size_t slot(int n) const { return static_cast<size_t>(n - lo_); }

  Field field_;
  int lo_ = 0;
  int hi_ = -1;
  std::vector<size_t> dims_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<SparseMatrix> diffs_;
  Labeler labeler_;
  std::optional<int> reliable_lo_;
  std::optional<int> reliable_hi_;
};

/// Degrees n where d^{n+1} d^n != 0. Empty means the differentials square
/// to zero.
std::vector<int> check_complex(const CochainComplex& c);

/// H^n with representative cocycles. Throws NotAComplex or TruncationError.
CohomologyData cohomology(const CochainComplex& c, int n);
/// Dimension only; cheaper for large complexes.
size_t cohomology_dim(const CochainComplex& c, int n);

/// c[k]: degree n holds c^{n+k}, differential (-1)^k d^{n+k}.
CochainComplex shift(const CochainComplex& c, int k);
/// Degree n holds the sum over p + q = n of c^p (x) d^q, blocks in order of
/// increasing p, labels "a⊗b".
CochainComplex tensor(const CochainComplex& c, const CochainComplex& d);
/// Hom^n = prod_i Hom(c^i, d^{i+n}), df = d_d f + (-1)^{n+1} f d_c. The
/// basis of each block is the elementary maps "f[a→b]", ordered by source
/// label then target label.
CochainComplex hom_complex(const CochainComplex& c, const CochainComplex& d);

/// Offset of the c^p (x) d^q block inside tensor(c, d) in degree p + q.
size_t tensor_block_offset(const CochainComplex& c, const CochainComplex& d, int p, int q);

/// Chain map f : source -> target of degree k, f^n : C^n -> D^{n+k}, with
/// d_D f^n = f^{n+1} d_C (no sign).
struct ChainMap {
  std::shared_ptr<const CochainComplex> source;
  std::shared_ptr<const CochainComplex> target;
  int degree = 0;
  std::map<int, SparseMatrix> maps;

  /// Zero matrix of the right shape when the degree is unset.
  SparseMatrix at(int n) const;
};

ChainMap identity_map(std::shared_ptr<const CochainComplex> c);
/// Degrees n where the commutation fails.
std::vector<int> check_chain_map(const ChainMap& f);

/// cone^n = source^{n+1} (+) target^n with differential [[-d_s, 0], [f, d_t]].
/// Requires a degree-zero chain map, otherwise InvalidChainMap.
CochainComplex cone(const ChainMap& f);

/// Matrix of H^n(f) : H^n(source) -> H^{n+k}(target) in the representative
/// bases returned by cohomology(). Throws InvalidChainMap when a cocycle or
/// a boundary does not map where it should.
SparseMatrix induced_map_on_cohomology(const ChainMap& f, int n);

}  // namespace hochkit
