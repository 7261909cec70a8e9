#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hochkit/sparse_matrix.hpp"

namespace hochkit {

/// Subspace of field^ambient, stored as the reduced row-echelon basis.
/// Because RREF is canonical, two Subspaces are equal iff their bases are.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field field, size_t ambient) : field_(field), ambient_(ambient) {}
  /// Spans the given vectors (any spanning set; the basis is recomputed).
  static Subspace span(Field field, size_t ambient,
                       const std::vector<SparseVector>& vectors);

  Field field() const { return field_; }
  size_t ambient() const { return ambient_; }
  size_t dimension() const { return rows_.size(); }
  const std::vector<SparseVector>& basis() const { return rows_; }
  /// Basis vectors as the rows of a matrix.
  SparseMatrix matrix() const;

  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Field field_;
  size_t ambient_ = 0;
  std::vector<SparseVector> rows_;
};

/// Incremental row echelon form over a field. Pivot rows are normalized to a
/// leading coefficient of one; the leading index is the smallest index.
class Echelon {
 public:
  Echelon(Field field, size_t ambient);
  ~Echelon();
  Echelon(Echelon&&) noexcept;
  Echelon& operator=(Echelon&&) noexcept;

  Field field() const { return field_; }
  size_t ambient() const { return ambient_; }
  size_t rank() const;

  /// Adds v to the span. Returns true iff v was independent.
  bool insert(const SparseVector& v);
  /// Full reduction of v against the current rows (zero iff v in span).
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Rows in reduced row-echelon form, ordered by pivot.
  std::vector<SparseVector> rref() const;
  std::vector<uint32_t> pivots() const;

 private:
  struct Impl;
  Field field_;
  size_t ambient_;
  std::unique_ptr<Impl> impl_;
};

size_t rank(const SparseMatrix& m);

/// rank(a) and rank([a | s]) for matrices with the same row count.
std::pair<size_t, size_t> rank_extension(const SparseMatrix& a,
                                         const SparseMatrix& s);

/// {v : m v = 0}; dimension cols - rank.
Subspace kernel_basis(const SparseMatrix& m);
/// Column space of m inside field^rows.
Subspace image_basis(const SparseMatrix& m);

struct CohomologyData {
  size_t dimension = 0;
  /// Cocycles whose classes form a basis of ker(d_out) / im(d_in).
  std::vector<SparseVector> representatives;
};

/// Cohomology at the middle space of U --d_in--> V --d_out--> W.
/// Throws ShapeMismatch, FieldMismatch or NotAComplex.
CohomologyData cohomology_at(const SparseMatrix& d_in, const SparseMatrix& d_out);
size_t cohomology_dimension(const SparseMatrix& d_in, const SparseMatrix& d_out);

/// Coordinates of cocycles with respect to a chosen representative basis of
/// a cohomology group.
class QuotientCoordinates {
 public:
  QuotientCoordinates(Field field, size_t ambient,
                      const std::vector<SparseVector>& boundaries,
                      const std::vector<SparseVector>& representatives);
  ~QuotientCoordinates();
  QuotientCoordinates(QuotientCoordinates&&) noexcept;

  /// c with z = sum c_i rep_i + boundary, or nullopt when z is not in
  /// span(reps) + boundaries.
  std::optional<std::vector<Rational>> coordinates(const SparseVector& z) const;
  size_t size() const { return count_; }

 private:
  size_t ambient_;
  size_t count_;
  std::unique_ptr<Echelon> echelon_;
};

}  // namespace hochkit
