#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "support.hpp"
#include "unkry/errors.hpp"
#include "unkry/operator.hpp"

using testsup::make_rng;
using unkry::DenseSymmetric;
using unkry::Vector;

TEST_CASE("make_dense stores the symmetrization and applies correctly") {
  // Mildly asymmetric input inside tolerance gets averaged.
  const double eps = 1e-14;
  const DenseSymmetric h =
      unkry::make_dense(2, {1.0, 2.0, 2.0 + eps, 3.0});
  CHECK(h.entry(0, 1) == h.entry(1, 0));
  CHECK(h.entry(0, 1) == doctest::Approx(2.0).epsilon(1e-12));
  const Vector y = h.apply({1.0, -1.0});
  CHECK(y[0] == doctest::Approx(1.0 - h.entry(0, 1)));
  CHECK(y[1] == doctest::Approx(h.entry(0, 1) - 3.0));
}

TEST_CASE("make_dense input validation") {
  CHECK_THROWS_AS(unkry::make_dense(0, {}), unkry::EmptyInput);
  CHECK_THROWS_AS(unkry::make_dense(2, {1, 2, 3}), unkry::NonSquare);
  CHECK_THROWS_AS(unkry::make_dense(2, {1, 2, 3, 4}),
                  unkry::AsymmetryExceeded);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(unkry::make_dense(1, {inf}), unkry::NonFiniteInput);
}

TEST_CASE("make_diagonal behaves as the diagonal matrix") {
  const DenseSymmetric d = unkry::make_diagonal({3, 2, 1, 0, -1, -2, -3});
  CHECK(d.dim() == 7);
  const Vector ones(7, 1.0);
  const Vector y = d.apply(ones);
  for (std::size_t i = 0; i < 7; ++i) CHECK(y[i] == d.entry(i, i));
  CHECK(d.entry(0, 3) == 0.0);
  CHECK_THROWS_AS(unkry::make_diagonal({}), unkry::EmptyInput);
}

TEST_CASE("apply rejects mismatched sizes") {
  const DenseSymmetric d = unkry::make_diagonal({1, 2});
  CHECK_THROWS_AS(d.apply({1.0, 2.0, 3.0}), unkry::DimensionMismatch);
}

TEST_CASE("frobenius norm") {
  const DenseSymmetric h = unkry::make_dense(2, {3, 0, 0, 4});
  CHECK(h.frobenius_norm() == doctest::Approx(5.0));
}

TEST_CASE("assembled spectral operator applies its eigen decomposition") {
  auto rng = make_rng(7);
  const auto q = testsup::random_orthogonal(rng, 6);
  const Vector lambda{5, 3, 1, -1, -2, -4};
  const DenseSymmetric h = testsup::assemble(lambda, q);
  for (std::size_t k = 0; k < 6; ++k) {
    const Vector hv = h.apply(q[k]);
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(hv[i] == doctest::Approx(lambda[k] * q[k][i]).epsilon(1e-10));
    }
  }
}
