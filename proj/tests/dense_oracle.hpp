#pragma once

// Small dense reference eliminator used to cross-check the sparse code.

#include <random>
#include <vector>

#include "hochkit/field.hpp"
#include "hochkit/sparse_matrix.hpp"

namespace oracle {

using hochkit::Field;
using hochkit::Rational;
using Dense = std::vector<std::vector<Rational>>;

inline Dense to_dense(const hochkit::SparseMatrix& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols()));
  for (const auto& t : m.triplets()) d[t.row][t.col] = t.value;
  return d;
}

inline size_t dense_rank(Dense a, Field f) {
  size_t rank = 0;
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t p = rank;
    while (p < rows && f.element(a[p][c]).is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    Rational inv = f.inv(f.element(a[rank][c]));
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || f.element(a[r][c]).is_zero()) continue;
      Rational factor = f.mul(f.element(a[r][c]), inv);
      for (size_t k = c; k < cols; ++k)
        a[r][k] = f.sub(f.element(a[r][k]), f.mul(factor, f.element(a[rank][k])));
    }
    ++rank;
  }
  return rank;
}

inline size_t dense_rank(const hochkit::SparseMatrix& m) {
  return dense_rank(to_dense(m), m.field());
}

inline hochkit::SparseMatrix random_matrix(Field f, size_t rows, size_t cols, double density,
                                           std::mt19937& rng, int range = 3) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(-range, range);
  std::vector<hochkit::Triplet> t;
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c)
      if (coin(rng) < density)
        t.push_back({static_cast<uint32_t>(r), static_cast<uint32_t>(c),
                     f.element(Rational(value(rng)))});
  return hochkit::SparseMatrix::from_triplets(f, rows, cols, t);
}

}  // namespace oracle
