#include "hochkit/sparse_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "hochkit/error.hpp"

namespace hochkit {

void canonicalize(SparseVector& v, Field field) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t out = 0;
  for (size_t i = 0; i < v.size();) {
    uint32_t idx = v[i].first;
    Rational sum = field.element(v[i].second);
    size_t j = i + 1;
    for (; j < v.size() && v[j].first == idx; ++j)
      sum = field.add(sum, field.element(v[j].second));
    if (!sum.is_zero()) v[out++] = {idx, std::move(sum)};
    i = j;
  }
  v.resize(out);
}

SparseVector axpy(const SparseVector& y, const Rational& a,
                  const SparseVector& x, Field field) {
  SparseVector out;
  out.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      Rational v = field.mul(a, x[j].second);
      if (!v.is_zero()) out.emplace_back(x[j].first, std::move(v));
      ++j;
    } else {
      Rational v = field.add(y[i].second, field.mul(a, x[j].second));
      if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseMatrix::SparseMatrix(Field field, size_t rows, size_t cols)
    : field_(field), rows_(rows), cols_(cols), col_ptr_(cols + 1, 0) {}

SparseMatrix SparseMatrix::from_triplets(Field field, size_t rows, size_t cols,
                                         std::vector<Triplet> entries) {
  for (const auto& t : entries)
    if (t.row >= rows || t.col >= cols)
      throw ShapeMismatch("matrix entry (" + std::to_string(t.row) + ", " +
                          std::to_string(t.col) + ") out of bounds " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  std::vector<SparseVector> columns(cols);
  for (auto& t : entries) columns[t.col].emplace_back(t.row, std::move(t.value));
  for (auto& c : columns) canonicalize(c, field);
  return from_columns(field, rows, columns);
}

SparseMatrix SparseMatrix::from_scalars(
    Field field, size_t rows, size_t cols,
    const std::vector<std::tuple<size_t, size_t, Scalar>>& entries) {
  std::vector<Triplet> t;
  t.reserve(entries.size());
  for (const auto& [r, c, s] : entries) {
    if (s.field() != field)
      throw FieldMismatch("matrix entry over " + s.field().name() +
                          " in a matrix over " + field.name());
    t.push_back({static_cast<uint32_t>(r), static_cast<uint32_t>(c), s.value()});
  }
  return from_triplets(field, rows, cols, std::move(t));
}

SparseMatrix SparseMatrix::from_columns(Field field, size_t rows,
                                        const std::vector<SparseVector>& columns) {
  SparseMatrix m(field, rows, columns.size());
  size_t total = 0;
  for (const auto& c : columns) total += c.size();
  m.row_index_.reserve(total);
  m.values_.reserve(total);
  for (size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [r, v] : columns[j]) {
      if (r >= rows) throw ShapeMismatch("column entry out of bounds");
      m.row_index_.push_back(r);
      m.values_.push_back(v);
    }
    m.col_ptr_[j + 1] = m.row_index_.size();
  }
  return m;
}

SparseMatrix SparseMatrix::identity(Field field, size_t n) {
  std::vector<SparseVector> cols(n);
  for (size_t i = 0; i < n; ++i)
    cols[i].emplace_back(static_cast<uint32_t>(i), Rational(1));
  return from_columns(field, n, cols);
}

SparseMatrix SparseMatrix::from_dense(
    Field field, const std::vector<std::vector<int64_t>>& rows) {
  size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
  std::vector<Triplet> t;
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeMismatch("ragged dense matrix");
    for (size_t j = 0; j < c; ++j)
      if (rows[i][j] != 0)
        t.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j),
                     Rational(rows[i][j])});
  }
  return from_triplets(field, r, c, std::move(t));
}

SparseVector SparseMatrix::column(size_t c) const {
  SparseVector v;
  v.reserve(col_ptr_[c + 1] - col_ptr_[c]);
  for (size_t k = col_ptr_[c]; k < col_ptr_[c + 1]; ++k)
    v.emplace_back(row_index_[k], values_[k]);
  return v;
}

std::vector<SparseVector> SparseMatrix::column_vectors() const {
  std::vector<SparseVector> out(cols_);
  for (size_t c = 0; c < cols_; ++c) out[c] = column(c);
  return out;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<size_t> count(rows_, 0);
  for (uint32_t r : row_index_) ++count[r];
  std::vector<SparseVector> out(rows_);
  for (size_t r = 0; r < rows_; ++r) out[r].reserve(count[r]);
  for (size_t c = 0; c < cols_; ++c)
    for (size_t k = col_ptr_[c]; k < col_ptr_[c + 1]; ++k)
      out[row_index_[k]].emplace_back(static_cast<uint32_t>(c), values_[k]);
  return out;
}

Scalar SparseMatrix::at(size_t r, size_t c) const {
  auto first = row_index_.begin() + static_cast<std::ptrdiff_t>(col_ptr_[c]);
  auto last = row_index_.begin() + static_cast<std::ptrdiff_t>(col_ptr_[c + 1]);
  auto it = std::lower_bound(first, last, static_cast<uint32_t>(r));
  if (it != last && *it == r)
    return Scalar(field_, values_[static_cast<size_t>(it - row_index_.begin())]);
  return Scalar(field_, 0);
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  auto rows = row_vectors();
  for (size_t r = 0; r < rows_; ++r)
    for (auto& [c, v] : rows[r]) out.push_back({static_cast<uint32_t>(r), c, v});
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  return from_columns(field_, cols_, row_vectors());
}

SparseMatrix SparseMatrix::scaled(const Rational& factor) const {
  Rational f = field_.element(factor);
  if (f.is_zero()) return SparseMatrix(field_, rows_, cols_);
  SparseMatrix m = *this;
  for (auto& v : m.values_) v = field_.mul(v, f);
  return m;
}

SparseMatrix SparseMatrix::row_block(size_t r0, size_t n) const {
  std::vector<SparseVector> cols(cols_);
  for (size_t c = 0; c < cols_; ++c)
    for (size_t k = col_ptr_[c]; k < col_ptr_[c + 1]; ++k)
      if (row_index_[k] >= r0 && row_index_[k] < r0 + n)
        cols[c].emplace_back(static_cast<uint32_t>(row_index_[k] - r0), values_[k]);
  return from_columns(field_, n, cols);
}

SparseMatrix SparseMatrix::col_block(size_t c0, size_t n) const {
  std::vector<SparseVector> cols(n);
  for (size_t c = 0; c < n; ++c) cols[c] = column(c0 + c);
  return from_columns(field_, rows_, cols);
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector acc;
  for (const auto& [j, x] : v) {
    if (j >= cols_) throw ShapeMismatch("vector index out of bounds");
    for (size_t k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k)
      acc.emplace_back(row_index_[k], field_.mul(values_[k], x));
  }
  canonicalize(acc, field_);
  return acc;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.field_ != b.field_) throw FieldMismatch("matrix product across fields");
  if (a.cols_ != b.rows_)
    throw ShapeMismatch("matrix product " + std::to_string(a.rows_) + "x" +
                        std::to_string(a.cols_) + " * " + std::to_string(b.rows_) +
                        "x" + std::to_string(b.cols_));
  std::vector<SparseVector> cols(b.cols_);
  for (size_t c = 0; c < b.cols_; ++c) cols[c] = a.apply(b.column(c));
  return SparseMatrix::from_columns(a.field_, a.rows_, cols);
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.field_ != b.field_) throw FieldMismatch("matrix sum across fields");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ShapeMismatch("matrix sum of different shapes");
  std::vector<SparseVector> cols(a.cols_);
  for (size_t c = 0; c < a.cols_; ++c)
    cols[c] = axpy(a.column(c), Rational(1), b.column(c), a.field_);
  return SparseMatrix::from_columns(a.field_, a.rows_, cols);
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  return a + b.scaled(Rational(-1));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.col_ptr_ == b.col_ptr_ && a.row_index_ == b.row_index_ &&
         a.values_ == b.values_;
}

std::string SparseMatrix::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " over " << field_.name() << " {";
  bool first = true;
  for (const auto& t : triplets()) {
    os << (first ? "" : ", ") << "(" << t.row << "," << t.col
       << ")=" << t.value.to_string();
    first = false;
  }
  os << "}";
  return os.str();
}

SparseMatrix vstack(const std::vector<SparseMatrix>& blocks, Field field,
                    size_t cols) {
  size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeMismatch("vstack column mismatch");
    if (b.field() != field) throw FieldMismatch("vstack across fields");
    rows += b.rows();
  }
  std::vector<SparseVector> out(cols);
  size_t offset = 0;
  for (const auto& b : blocks) {
    for (size_t c = 0; c < cols; ++c)
      for (size_t k = b.col_ptr()[c]; k < b.col_ptr()[c + 1]; ++k)
        out[c].emplace_back(static_cast<uint32_t>(b.row_index()[k] + offset),
                            b.values()[k]);
    offset += b.rows();
  }
  return SparseMatrix::from_columns(field, rows, out);
}

SparseMatrix hstack(const std::vector<SparseMatrix>& blocks, Field field,
                    size_t rows) {
  std::vector<SparseVector> out;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw ShapeMismatch("hstack row mismatch");
    if (b.field() != field) throw FieldMismatch("hstack across fields");
    for (size_t c = 0; c < b.cols(); ++c) out.push_back(b.column(c));
  }
  return SparseMatrix::from_columns(field, rows, out);
}

SparseMatrix direct_sum(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("direct sum across fields");
  std::vector<SparseVector> out;
  for (size_t c = 0; c < a.cols(); ++c) out.push_back(a.column(c));
  for (size_t c = 0; c < b.cols(); ++c) {
    SparseVector v = b.column(c);
    for (auto& e : v) e.first += static_cast<uint32_t>(a.rows());
    out.push_back(std::move(v));
  }
  return SparseMatrix::from_columns(a.field(), a.rows() + b.rows(), out);
}

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("kronecker product across fields");
  Field f = a.field();
  ColumnBuilder out(f, a.rows() * b.rows());
  for (size_t ca = 0; ca < a.cols(); ++ca) {
    SparseVector x = a.column(ca);
    for (size_t cb = 0; cb < b.cols(); ++cb) {
      SparseVector y = b.column(cb);
      for (const auto& [ra, va] : x)
        for (const auto& [rb, vb] : y) out.add(static_cast<uint32_t>(ra * b.rows() + rb), f.mul(va, vb));
      out.finish_column();
    }
  }
  return std::move(out).build();
}

void ColumnBuilder::finish_column() {
  canonicalize(pending_, field_);
  for (auto& [r, v] : pending_) {
    if (r >= rows_) throw ShapeMismatch("column entry out of bounds");
    row_index_.push_back(r);
    values_.push_back(std::move(v));
  }
  pending_.clear();
  col_ptr_.push_back(row_index_.size());
}

SparseMatrix ColumnBuilder::build() && {
  SparseMatrix m(field_, rows_, 0);
  m.cols_ = col_ptr_.size() - 1;
  m.col_ptr_ = std::move(col_ptr_);
  m.row_index_ = std::move(row_index_);
  m.values_ = std::move(values_);
  return m;
}

}  // namespace hochkit
