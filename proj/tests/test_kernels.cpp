#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "support.hpp"
#include "unkry/errors.hpp"
#include "unkry/kernels.hpp"
#include "unkry/vec.hpp"

using testsup::make_rng;
using testsup::random_vector;
using unkry::Vector;
namespace kern = unkry::kernels;

TEST_CASE("serial matvec matches a hand computation") {
  // A = [[1,2],[3,4]], x = (5,6) -> (17, 39)
  const std::vector<double> a{1, 2, 3, 4};
  const std::vector<double> x{5, 6};
  std::vector<double> y(2);
  kern::serial::matvec(2, a.data(), x.data(), y.data());
  CHECK(y[0] == 17.0);
  CHECK(y[1] == 39.0);
}

TEST_CASE("serial axpy, scal and dot match hand computations") {
  std::vector<double> y{1, 2, 3};
  const std::vector<double> x{10, 20, 30};
  kern::serial::axpy(3, 0.5, x.data(), y.data());
  CHECK(y == std::vector<double>{6, 12, 18});
  kern::serial::scal(3, 2.0, y.data());
  CHECK(y == std::vector<double>{12, 24, 36});
  CHECK(kern::serial::dot(3, x.data(), y.data()) == doctest::Approx(1680.0));
}

TEST_CASE("dispatching kernels are bitwise identical to serial") {
  auto rng = make_rng(101);
  // Sizes straddle parallel_threshold so both paths are exercised.
  for (std::size_t n : {1ul, 7ul, kern::parallel_threshold - 1,
                        kern::parallel_threshold, kern::parallel_threshold + 3,
                        1000ul}) {
    CAPTURE(n);
    const Vector a = random_vector(rng, n * n);
    const Vector x = random_vector(rng, n);

    Vector y_ref(n), y_par(n);
    kern::serial::matvec(n, a.data(), x.data(), y_ref.data());
    kern::matvec(n, a.data(), x.data(), y_par.data());
    CHECK(std::memcmp(y_ref.data(), y_par.data(), n * sizeof(double)) == 0);

    Vector z_ref = random_vector(rng, n);
    Vector z_par = z_ref;
    kern::serial::axpy(n, -1.75, x.data(), z_ref.data());
    kern::axpy(n, -1.75, x.data(), z_par.data());
    CHECK(std::memcmp(z_ref.data(), z_par.data(), n * sizeof(double)) == 0);

    kern::serial::scal(n, 0.37, z_ref.data());
    kern::scal(n, 0.37, z_par.data());
    CHECK(std::memcmp(z_ref.data(), z_par.data(), n * sizeof(double)) == 0);

    CHECK(kern::dot(n, x.data(), z_par.data()) ==
          kern::serial::dot(n, x.data(), z_ref.data()));
  }
}

TEST_CASE("zero-length kernels are safe") {
  kern::matvec(0, nullptr, nullptr, nullptr);
  kern::axpy(0, 1.0, nullptr, nullptr);
  kern::scal(0, 1.0, nullptr);
  CHECK(kern::dot(0, nullptr, nullptr) == 0.0);
}

TEST_CASE("vector helpers: dot, norm2, axpy, scaled") {
  const Vector u{3, 4};
  CHECK(unkry::norm2(u) == doctest::Approx(5.0));
  CHECK(unkry::dot(u, u) == doctest::Approx(25.0));
  CHECK(unkry::axpy(2.0, {1, 1}, {1, 2}) == Vector{3, 4});
  CHECK(unkry::scaled(-1.0, u) == Vector{-3, -4});
  CHECK_THROWS_AS(unkry::dot(u, {1, 2, 3}), unkry::DimensionMismatch);
}

TEST_CASE("require_finite rejects NaN and infinity") {
  CHECK_NOTHROW(unkry::require_finite({1, 2}, "v"));
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(unkry::require_finite({1, inf}, "v"),
                  unkry::NonFiniteInput);
  CHECK_THROWS_AS(unkry::require_finite({std::nan("")}, "v"),
                  unkry::NonFiniteInput);
  CHECK(unkry::all_finite({0, 1}));
  CHECK_FALSE(unkry::all_finite({0, inf}));
}
