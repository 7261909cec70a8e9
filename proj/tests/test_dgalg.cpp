#include <map>

#include "doctest.h"
#include "hochkit/builtins.hpp"
#include "hochkit/dgalg.hpp"
#include "hochkit/error.hpp"

using namespace hochkit;

namespace {

const Field Q = Field::rationals();

SparseVector e(uint32_t i, int64_t c = 1) { return {{i, Rational(c)}}; }

std::vector<DgAlgebra> library(Field f) {
  return {ground_field(f),     dual_numbers(f),        trunc_poly(f, 3),
          matrix_algebra(ground_field(f), 2), upper_triangular(f), koszul_example(f)};
}

std::map<int, size_t> degree_counts(const std::vector<int>& degrees) {
  std::map<int, size_t> out;
  for (int d : degrees) ++out[d];
  return out;
}

}  // namespace

TEST_CASE("validate examples") {
  CHECK(validate(ground_field(Q)).ok());
  DgAlgebra bad = dual_numbers(Q);
  bad.set_differential(1, e(0));
  ValidationReport r = validate(bad);
  CHECK_FALSE(r.ok());
  bool degree_reported = false;
  for (const auto& v : r.violations)
    if (v.axiom == "differential degree" && v.witness == std::vector<std::string>{"x"}) degree_reported = true;
  CHECK(degree_reported);
  DgAlgebra k = koszul_example(Q);
  CHECK_FALSE(k.has_zero_differential());
  CHECK(validate(k).ok());

  DgAlgebra nonassoc(Q, {"1", "a", "b"}, {0, 0, 0}, 0);
  nonassoc.set_product(1, 1, e(2));
  nonassoc.set_product(2, 1, e(1));
  ValidationReport rn = validate(nonassoc);
  CHECK_FALSE(rn.ok());
  CHECK(rn.violations.front().axiom == "associativity");
}

TEST_CASE("every catalogue algebra and constructor output validates") {
  for (Field f : {Q, Field::prime(2), Field::prime(3)}) {
    auto lib = library(f);
    for (const auto& a : lib) {
      CHECK(validate(a).ok());
      CHECK(validate(opposite(a)).ok());
      CHECK(validate(enveloping(a)).ok());
      if (a.dim() <= 4) CHECK(validate(matrix_algebra(a, 2)).ok());
      for (const auto& b : lib)
        if (a.dim() * b.dim() <= 16) CHECK(validate(tensor_algebras(a, b)).ok());
    }
  }
}

TEST_CASE("opposite") {
  for (const auto& a : library(Q)) CHECK(opposite(opposite(a)) == a);
  DgAlgebra d = dual_numbers(Q);
  CHECK(opposite(d) == d);
  // The transpose is an isomorphism M_2(k)^op -> M_2(k).
  DgAlgebra m = matrix_algebra(ground_field(Q), 2);
  REQUIRE(m.labels() == std::vector<std::string>{"1", "e11", "e12", "e21"});
  DgAlgebra op = opposite(m);
  // e12 ∘op e21 = e21 e12 = e22 = 1 - e11
  CHECK(op.product(2, 3) == SparseVector{{0, Rational(1)}, {1, Rational(-1)}});
  CHECK(op.product(3, 2) == e(1));
  AlgebraMorphism t{std::make_shared<DgAlgebra>(op), std::make_shared<DgAlgebra>(m),
                    {e(0), e(1), e(3), e(2)}};
  CHECK(validate(t).ok());
  // Odd elements anticommute past each other in the opposite.
  DgAlgebra k = koszul_example(Q);
  DgAlgebra kop = opposite(k);
  CHECK(kop.product(1, 2) == k.product(2, 1));
}

TEST_CASE("tensor products of algebras") {
  for (const auto& a : library(Q)) {
    CHECK(validate(unit_tensor_isomorphism(a)).ok());
    CHECK(tensor_algebras(a, dual_numbers(Q)).dim() == 2 * a.dim());
  }
  DgAlgebra dd = tensor_algebras(dual_numbers(Q), dual_numbers(Q));
  REQUIRE(dd.labels() == std::vector<std::string>{"1⊗1", "1⊗x", "x⊗1", "x⊗x"});
  CHECK(dd.product(1, 2) == e(3));
  CHECK(dd.product(2, 1) == e(3));
  CHECK(dd.product(1, 1).empty());
  CHECK(dd.product(2, 2).empty());
  CHECK(dd.product(3, 1).empty());

  // Associativity on the nose, including Koszul signs.
  for (const auto& [a, b, c] : {std::tuple{koszul_example(Q), koszul_example(Q), dual_numbers(Q)},
                                std::tuple{koszul_example(Q), upper_triangular(Q), koszul_example(Q)}}) {
    DgAlgebra left = tensor_algebras(tensor_algebras(a, b), c);
    DgAlgebra right = tensor_algebras(a, tensor_algebras(b, c));
    CHECK(left == right);
  }
  // (1⊗ξ)(ξ⊗1) = -ξ⊗ξ
  DgAlgebra kk = tensor_algebras(koszul_example(Q), koszul_example(Q));
  auto i1 = kk.index_of("1⊗ξ"), i2 = kk.index_of("ξ⊗1"), i3 = kk.index_of("ξ⊗ξ");
  REQUIRE((i1 && i2 && i3));
  CHECK(kk.product(*i1, *i2) == e(*i3, -1));
  CHECK(kk.product(*i2, *i1) == e(*i3, 1));
  CHECK_THROWS_AS(tensor_algebras(dual_numbers(Q), dual_numbers(Field::prime(2))), FieldMismatch);
}

TEST_CASE("enveloping algebra and A as an enveloping module") {
  DgAlgebra ek = enveloping(ground_field(Q));
  CHECK(ek.dim() == 1);
  CHECK(ek.product(0, 0) == e(0));
  CHECK(enveloping(dual_numbers(Q)).dim() == 4);
  for (const auto& a : library(Q)) {
    DgBimodule m = enveloping_module(std::make_shared<DgAlgebra>(a));
    CHECK(validate(m).ok());
  }
}

TEST_CASE("matrix algebras") {
  DgAlgebra k = ground_field(Q);
  CHECK(matrix_algebra(k, 1) == k);
  CHECK(matrix_algebra(dual_numbers(Q), 1) == dual_numbers(Q));
  DgAlgebra m2 = matrix_algebra(k, 2);
  CHECK(m2.dim() == 4);
  CHECK(center_degree0(m2).dimension() == 1);
  DgAlgebra md = matrix_algebra(dual_numbers(Q), 2);
  CHECK(md.dim() == 8);
  CHECK(validate(md).ok());
  CHECK(validate(matrix_algebra(k, 3)).ok());
  CHECK(center_degree0(matrix_algebra(k, 3)).dimension() == 1);
  CHECK(validate(matrix_algebra(koszul_example(Q), 2)).ok());
  CHECK_THROWS_AS(matrix_algebra(k, 5), CapExceeded);
}

TEST_CASE("diagonal bimodules") {
  for (const auto& a : library(Q)) {
    auto p = std::make_shared<DgAlgebra>(a);
    CHECK(validate(diagonal_bimodule(p)).ok());
  }
  CHECK(diagonal_bimodule(std::make_shared<DgAlgebra>(ground_field(Q))).dim() == 1);
}

TEST_CASE("tensor over an algebra") {
  auto k = std::make_shared<DgAlgebra>(ground_field(Q));
  CochainComplex kk = tensor_over(diagonal_bimodule(k), *k, diagonal_bimodule(k));
  CHECK(kk.lo() == 0);
  CHECK(kk.hi() == 0);
  CHECK(kk.dim(0) == 1);

  // Unit collapse A ⊗_A A = A degree by degree, also with odd elements.
  for (const auto& a : library(Q)) {
    auto p = std::make_shared<DgAlgebra>(a);
    DgBimodule d = diagonal_bimodule(p);
    CochainComplex c = tensor_over(d, a, d);
    auto counts = degree_counts(a.degrees());
    for (const auto& [deg, count] : counts) CHECK(c.dim(deg) == count);
    CHECK(check_complex(c).empty());
    for (int n = c.lo(); n <= c.hi(); ++n) {
      // Cohomology of the collapse equals cohomology of A itself.
      CochainComplex ac(Q, a.min_degree(), a.max_degree());
      std::map<int, std::vector<uint32_t>> idx;
      for (uint32_t i = 0; i < a.dim(); ++i) idx[a.degree(i)].push_back(i);
      for (auto& [deg, v] : idx) ac.set_component(deg, v.size());
      for (int m = ac.lo(); m < ac.hi(); ++m) {
        std::vector<Triplet> t;
        for (size_t col = 0; col < idx[m].size(); ++col)
          for (const auto& [r, x] : a.differential(idx[m][col])) {
            auto pos = std::find(idx[m + 1].begin(), idx[m + 1].end(), r) - idx[m + 1].begin();
            t.push_back({static_cast<uint32_t>(pos), static_cast<uint32_t>(col), x});
          }
        ac.set_differential(m, SparseMatrix::from_triplets(Q, ac.dim(m + 1), ac.dim(m), t));
      }
      CHECK(cohomology(c, n).dimension == cohomology(ac, n).dimension);
    }
  }
  auto dual = std::make_shared<DgAlgebra>(dual_numbers(Q));
  CHECK(tensor_over(diagonal_bimodule(dual), *dual, diagonal_bimodule(dual)).dim(0) == 2);

  // A ⊗_{A^e} A: the underived HH_0 carrier.
  for (const auto& [a, expected] : {std::pair{dual_numbers(Q), size_t{2}},
                                    std::pair{matrix_algebra(ground_field(Q), 2), size_t{1}},
                                    std::pair{trunc_poly(Q, 3), size_t{3}}}) {
    auto p = std::make_shared<DgAlgebra>(a);
    DgBimodule left = enveloping_module(p);
    auto env = left.left_ptr();
    // A as a right A^e-module: m·(a°⊗b) = (-1)^{|m||a|...} a m b, here in degree 0.
    DgBimodule right(std::make_shared<DgAlgebra>(ground_field(Q)), env, a.labels(), a.degrees());
    const size_t n = a.dim();
    for (size_t x = 0; x < n; ++x)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          right.set_right_action(x, i * n + j, a.multiply(a.product(i, x), a.basis_vector(j)));
    REQUIRE(validate(right).ok());
    CHECK(tensor_over(right, *env, left).dim(0) == expected);
  }

  auto m2 = std::make_shared<DgAlgebra>(matrix_algebra(ground_field(Q), 2));
  CHECK_THROWS_AS(tensor_over(diagonal_bimodule(dual), *m2, diagonal_bimodule(m2)), InvalidModule);
}

TEST_CASE("center in degree zero") {
  CHECK(center_degree0(ground_field(Q)).dimension() == 1);
  CHECK(center_degree0(dual_numbers(Q)).dimension() == 2);
  CHECK(center_degree0(trunc_poly(Q, 3)).dimension() == 3);
  CHECK(center_degree0(upper_triangular(Q)).dimension() == 1);
  CHECK_THROWS_AS(center_degree0(koszul_example(Q)), InvalidAlgebra);
}

TEST_CASE("builtin catalogue") {
  CHECK(builtin("trunc_poly(3)", Q).dim() == 3);
  CHECK(builtin("matrix(2, ground_field)", Q) == matrix_algebra(ground_field(Q), 2));
  CHECK(validate(builtin("koszul_example", Q)).ok());
  CHECK_THROWS_AS(builtin("no_such_algebra", Q), std::invalid_argument);
  for (const auto& name : builtin_names()) CHECK(validate(builtin(name, Q)).ok());
}
