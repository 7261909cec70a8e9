#include <random>

#include "dense_oracle.hpp"
#include "doctest.h"
#include "hochkit/error.hpp"
#include "hochkit/linalg.hpp"

using namespace hochkit;

namespace {

const Field Q = Field::rationals();

SparseMatrix dense(Field f, std::vector<std::vector<int64_t>> rows) {
  return SparseMatrix::from_dense(f, rows);
}

SparseVector vec(std::initializer_list<std::pair<uint32_t, int64_t>> entries) {
  SparseVector v;
  for (auto [i, x] : entries) v.emplace_back(i, Rational(x));
  return v;
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical") {
  Rational a(6, -4);
  CHECK(a.small_num() == -3);
  CHECK(a.small_den() == 2);
  CHECK((a + Rational(3, 2)).is_zero());
  CHECK(Rational::parse("-12/8") == a);
  Rational big(INT64_MAX);
  Rational sq = big * big;
  CHECK_FALSE(sq.is_small());
  CHECK((sq / big) == big);
  CHECK((sq / big).is_small());
  CHECK(Rational(1, 3).mod(7) == 5);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> v(-50, 50);
  for (Field f : {Q, Field::prime(2), Field::prime(7), Field::prime(2147483647u)}) {
    for (int t = 0; t < 200; ++t) {
      Rational a = f.element(Rational(v(rng), f.is_rational() ? 1 + (t % 5) : 1));
      Rational b = f.element(Rational(v(rng)));
      Rational c = f.element(Rational(v(rng)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)).is_zero());
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      if (!a.is_zero()) CHECK(f.mul(a, f.inv(a)).is_one());
    }
  }
}

TEST_CASE("scalars of different fields do not mix") {
  Scalar a(Q, 1);
  Scalar b(Field::prime(5), 1);
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(SparseMatrix::from_scalars(Q, 1, 1, {{0, 0, b}}), FieldMismatch);
}

TEST_CASE("rank examples") {
  CHECK(rank(SparseMatrix::identity(Q, 3)) == 3);
  CHECK(rank(dense(Field::prime(2), {{1, 1}, {1, 1}})) == 1);
  // Left multiplication by x(x)1 - 1(x)x on the enveloping algebra of the
  // dual numbers, basis 1(x)1, 1(x)x, x(x)1, x(x)x.
  SparseMatrix m = dense(Q, {{0, 0, 0, 0}, {-1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, -1, 0}});
  CHECK(oracle::dense_rank(m) == 2);
  CHECK(rank(m) == 2);
}

TEST_CASE("kernel and image examples") {
  CHECK(kernel_basis(SparseMatrix::identity(Q, 3)).dimension() == 0);
  CHECK(kernel_basis(SparseMatrix(Q, 2, 3)).dimension() == 3);
  Subspace k = kernel_basis(dense(Q, {{1, 1}, {1, 1}}));
  CHECK(k == Subspace::span(Q, 2, {vec({{0, 1}, {1, -1}})}));
  CHECK(image_basis(SparseMatrix::identity(Q, 3)).dimension() == 3);
  CHECK(image_basis(SparseMatrix(Q, 3, 2)).dimension() == 0);
  Subspace im = image_basis(dense(Q, {{1, 2}, {2, 4}}));
  CHECK(im == Subspace::span(Q, 2, {vec({{0, 1}, {1, 2}})}));
}

TEST_CASE("cohomology_at examples and errors") {
  CHECK(cohomology_at(SparseMatrix(Q, 3, 0), SparseMatrix(Q, 0, 3)).dimension == 3);
  CHECK(cohomology_at(SparseMatrix::identity(Q, 2), SparseMatrix(Q, 0, 2)).dimension == 0);
  for (size_t n = 0; n <= 50; ++n)
    CHECK(cohomology_at(SparseMatrix(Q, n, n), SparseMatrix(Q, n, n)).dimension == n);
  CHECK_THROWS_AS(cohomology_at(SparseMatrix::identity(Q, 1), SparseMatrix::identity(Q, 1)),
                  NotAComplex);
  CHECK_THROWS_AS(cohomology_at(SparseMatrix(Q, 2, 1), SparseMatrix(Q, 1, 3)), ShapeMismatch);
  CHECK_THROWS_AS(rank_extension(SparseMatrix(Q, 2, 1), SparseMatrix(Field::prime(3), 2, 1)),
                  FieldMismatch);
}

TEST_CASE("rank matches the dense oracle on random matrices") {
  std::mt19937 rng(11);
  for (Field f : {Q, Field::prime(2), Field::prime(3), Field::prime(101)}) {
    for (int t = 0; t < 60; ++t) {
      size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
      SparseMatrix m = oracle::random_matrix(f, r, c, 0.05 + 0.1 * (t % 6), rng);
      size_t expected = oracle::dense_rank(m);
      CHECK(rank(m) == expected);
      CHECK(rank(m.transpose()) == expected);
      CHECK(rank(m) + kernel_basis(m).dimension() == c);
      CHECK(image_basis(m).dimension() == expected);
      SparseMatrix s = oracle::random_matrix(f, r, 1 + rng() % 5, 0.3, rng);
      auto [ra, rb] = rank_extension(m, s);
      CHECK(ra == expected);
      CHECK(rb == oracle::dense_rank(hstack({m, s}, f, r)));
    }
  }
}

TEST_CASE("kernel basis is canonical under row permutation") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    SparseMatrix m = oracle::random_matrix(Q, 6, 9, 0.3, rng);
    auto rows = m.row_vectors();
    std::shuffle(rows.begin(), rows.end(), rng);
    SparseMatrix p = SparseMatrix::from_columns(Q, 9, rows).transpose();
    Subspace k = kernel_basis(m);
    CHECK(k == kernel_basis(m));
    CHECK(k == kernel_basis(p));
    for (const auto& v : k.basis()) CHECK(m.apply(v).empty());
  }
}

TEST_CASE("cohomology representatives on random complexes") {
  std::mt19937 rng(3);
  for (Field f : {Q, Field::prime(5)}) {
    for (int t = 0; t < 40; ++t) {
      size_t u = 1 + rng() % 6, v = 2 + rng() % 8, w = 1 + rng() % 6;
      SparseMatrix d_in = oracle::random_matrix(f, v, u, 0.4, rng);
      // d_out kills the image of d_in: rows drawn from the left kernel.
      Subspace left = kernel_basis(d_in.transpose());
      SparseMatrix mix = oracle::random_matrix(f, w, left.dimension(), 0.5, rng);
      SparseMatrix d_out = left.dimension() ? mix * left.matrix() : SparseMatrix(f, w, v);
      CohomologyData h = cohomology_at(d_in, d_out);
      CHECK(h.dimension == v - rank(d_in) - rank(d_out));
      Echelon e(f, v);
      for (const auto& c : d_in.column_vectors()) e.insert(c);
      for (const auto& r : h.representatives) {
        CHECK(d_out.apply(r).empty());
        CHECK(e.insert(r));
      }
      QuotientCoordinates qc(f, v, d_in.column_vectors(), h.representatives);
      for (size_t i = 0; i < h.representatives.size(); ++i) {
        SparseVector z = h.representatives[i];
        if (u) z = axpy(z, Rational(2), d_in.column(0), f);
        auto c = qc.coordinates(z);
        REQUIRE(c);
        for (size_t j = 0; j < c->size(); ++j) CHECK((*c)[j] == Rational(i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("subspace operations") {
  Subspace a = Subspace::span(Q, 3, {vec({{0, 1}}), vec({{1, 1}})});
  Subspace b = Subspace::span(Q, 3, {vec({{1, 1}}), vec({{2, 1}})});
  CHECK(a.intersect(b) == Subspace::span(Q, 3, {vec({{1, 1}})}));
  CHECK(a.sum(b).dimension() == 3);
  CHECK(a.contains(vec({{0, 2}, {1, -3}})));
  CHECK_FALSE(a.contains(b));
}
