#pragma once

#include <string>
#include <vector>

#include "hochkit/dgalg.hpp"

namespace hochkit {

/// k[x]/(x^2) on the basis 1, x.
DgAlgebra dual_numbers(Field field);
/// k[x]/(x^n) on the basis 1, x, x^2, ..., x^{n-1}.
DgAlgebra trunc_poly(Field field, int n);
/// Upper triangular 2x2 matrices on the basis 1, e11, e12.
DgAlgebra upper_triangular(Field field, int n = 2);
/// k[x]/(x^2) ⊗ Λ(ξ) with |ξ| = -1 and dξ = x, basis 1, x, ξ, xξ.
DgAlgebra koszul_example(Field field);

/// Looks up a catalogue entry. Accepted names: ground_field, k,
/// dual_numbers, trunc_poly(n) (or trunc<n>), upper_triangular(2),
/// koszul_example and matrix(n, inner) with inner any catalogue name.
/// Throws std::invalid_argument for unknown names.
DgAlgebra builtin(const std::string& name, Field field);
std::vector<std::string> builtin_names();

}  // namespace hochkit
