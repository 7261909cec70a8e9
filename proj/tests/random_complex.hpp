#pragma once

#include <random>

#include "dense_oracle.hpp"
#include "hochkit/complexes.hpp"

namespace oracle {

/// Random complex on [lo, hi]; each differential is a random combination of
/// functionals vanishing on the previous image.
inline hochkit::CochainComplex random_complex(hochkit::Field f, int lo, int hi, size_t max_dim,
                                              std::mt19937& rng) {
  hochkit::CochainComplex c(f, lo, hi);
  for (int n = lo; n <= hi; ++n) c.set_component(n, rng() % (max_dim + 1));
  for (int n = lo; n < hi; ++n) {
    hochkit::SparseMatrix prev = c.d(n - 1);
    hochkit::Subspace left = hochkit::kernel_basis(prev.transpose());
    if (left.dimension() == 0) continue;
    hochkit::SparseMatrix mix = random_matrix(f, c.dim(n + 1), left.dimension(), 0.6, rng);
    c.set_differential(n, mix * left.matrix());
  }
  return c;
}

}  // namespace oracle
