#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hochkit/field.hpp"

namespace hochkit {

/// Sparse vector: (index, nonzero value) pairs sorted by index.
using SparseVector = std::vector<std::pair<uint32_t, Rational>>;

struct Triplet {
  uint32_t row;
  uint32_t col;
  Rational value;
};

/// Sparse matrix over a single field, stored column-compressed. Entries are
/// sorted, duplicate free and nonzero. Matrices act on column vectors, so a
/// map V -> W has dim W rows and dim V columns.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(Field field, size_t rows, size_t cols);

  /// Duplicate coordinates are summed; zero sums are dropped.
  static SparseMatrix from_triplets(Field field, size_t rows, size_t cols,
                                    std::vector<Triplet> entries);
  /// Every scalar must live in `field`, otherwise FieldMismatch.
  static SparseMatrix from_scalars(
      Field field, size_t rows, size_t cols,
      const std::vector<std::tuple<size_t, size_t, Scalar>>& entries);
  /// Columns must already be canonical (sorted, nonzero, reduced in field).
  static SparseMatrix from_columns(Field field, size_t rows,
                                   const std::vector<SparseVector>& columns);
  static SparseMatrix identity(Field field, size_t n);
  static SparseMatrix from_dense(Field field,
                                 const std::vector<std::vector<int64_t>>& rows);

  Field field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t nnz() const { return row_index_.size(); }
  bool is_zero() const { return row_index_.empty(); }

  const std::vector<size_t>& col_ptr() const { return col_ptr_; }
  const std::vector<uint32_t>& row_index() const { return row_index_; }
  const std::vector<Rational>& values() const { return values_; }

  SparseVector column(size_t c) const;
  /// All rows as sparse vectors (a transposed view).
  std::vector<SparseVector> row_vectors() const;
  std::vector<SparseVector> column_vectors() const;
  Scalar at(size_t r, size_t c) const;
  /// Coordinate list sorted by (row, col).
  std::vector<Triplet> triplets() const;

  SparseMatrix transpose() const;
  SparseMatrix scaled(const Rational& factor) const;
  /// Rows [r0, r0 + n) as a new matrix.
  SparseMatrix row_block(size_t r0, size_t n) const;
  SparseMatrix col_block(size_t c0, size_t n) const;

  SparseVector apply(const SparseVector& v) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  friend class ColumnBuilder;

  Field field_;
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<size_t> col_ptr_{0};
  std::vector<uint32_t> row_index_;
  std::vector<Rational> values_;
};

/// Block matrices [[a],[b]] and [a | b].
SparseMatrix vstack(const std::vector<SparseMatrix>& blocks, Field field,
                    size_t cols);
SparseMatrix hstack(const std::vector<SparseMatrix>& blocks, Field field,
                    size_t rows);
/// Block diagonal / general block placement helper.
SparseMatrix direct_sum(const SparseMatrix& a, const SparseMatrix& b);

/// a ⊗ b with entry (ra * b.rows + rb, ca * b.cols + cb) = a(ra, ca) b(rb, cb).
SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b);

/// Accumulates unsorted entries column by column and canonicalizes them.
class ColumnBuilder {
 public:
  ColumnBuilder(Field field, size_t rows) : field_(field), rows_(rows) {}

  void add(uint32_t row, const Rational& value) {
    if (!value.is_zero()) pending_.emplace_back(row, value);
  }
  /// Closes the current column. Entries added after the last call to
  /// finish_column() are discarded by build().
  void finish_column();
  size_t cols() const { return col_ptr_.size() - 1; }
  SparseMatrix build() &&;

 private:
  Field field_;
  size_t rows_;
  SparseVector pending_;
  std::vector<size_t> col_ptr_{0};
  std::vector<uint32_t> row_index_;
  std::vector<Rational> values_;
};

/// Sorts, merges duplicates and drops zeros, with arithmetic in `field`.
void canonicalize(SparseVector& v, Field field);
SparseVector axpy(const SparseVector& y, const Rational& a,
                  const SparseVector& x, Field field);  // y + a x

}  // namespace hochkit
