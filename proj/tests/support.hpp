#pragma once

// Shared helpers for the test suite: seeded random instances with known
// spectra, so singularity and compatibility are controlled by construction.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "unkry/operator.hpp"
#include "unkry/vec.hpp"

namespace testsup {

using unkry::DenseSymmetric;
using unkry::Vector;

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n,
                            double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Vector v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

inline Vector random_unit_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Vector v(n);
  double nrm = 0.0;
  while (nrm == 0.0) {
    for (double& x : v) x = dist(rng);
    nrm = unkry::norm2(v);
  }
  for (double& x : v) x /= nrm;
  return v;
}

// Random orthogonal basis: Gaussian rows, modified Gram-Schmidt run twice.
inline std::vector<Vector> random_orthogonal(std::mt19937_64& rng,
                                             std::size_t n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<Vector> q(n, Vector(n));
  for (auto& row : q)
    for (double& x : row) x = dist(rng);
  for (std::size_t i = 0; i < n; ++i) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < i; ++j) {
        const double mu = unkry::dot(q[j], q[i]);
        for (std::size_t t = 0; t < n; ++t) q[i][t] -= mu * q[j][t];
      }
    }
    const double nrm = unkry::norm2(q[i]);
    for (double& x : q[i]) x /= nrm;
  }
  return q;
}

// Assembles sum_k lambda_k v_k v_k^T as a dense symmetric operator.
inline DenseSymmetric assemble(const Vector& eigenvalues,
                               const std::vector<Vector>& eigvecs) {
  const std::size_t n = eigenvalues.size();
  Vector a(n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (eigenvalues[k] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a[i * n + j] += eigenvalues[k] * eigvecs[k][i] * eigvecs[k][j];
  }
  return unkry::make_dense(n, a);
}

struct TestInstance {
  DenseSymmetric H;
  Vector c;
  Vector eigenvalues;             // eigenvalues[k] belongs to eigvecs[k]
  std::vector<Vector> eigvecs;
  std::optional<Vector> x_true;   // one solution, when compatible
};

// Magnitudes kept away from zero so the nonsingular/singular split is sharp.
inline Vector random_spectrum(std::mt19937_64& rng, std::size_t n,
                              std::size_t zeros, bool definite = false) {
  std::uniform_real_distribution<double> mag(0.4, 4.0);
  std::bernoulli_distribution flip(0.5);
  Vector lambda(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < zeros) {
      lambda[i] = 0.0;
    } else {
      lambda[i] = mag(rng) * (definite || !flip(rng) ? 1.0 : -1.0);
    }
  }
  return lambda;
}

inline TestInstance nonsingular_instance(std::mt19937_64& rng, std::size_t n,
                                         bool definite = false) {
  TestInstance inst;
  inst.eigenvalues = random_spectrum(rng, n, 0, definite);
  inst.eigvecs = random_orthogonal(rng, n);
  inst.H = assemble(inst.eigenvalues, inst.eigvecs);
  inst.c = random_unit_vector(rng, n);
  return inst;
}

// Singular H with `zeros` null directions; c = -H z keeps the system
// compatible with witness z.
inline TestInstance singular_compatible_instance(std::mt19937_64& rng,
                                                 std::size_t n,
                                                 std::size_t zeros) {
  TestInstance inst;
  inst.eigenvalues = random_spectrum(rng, n, zeros);
  inst.eigvecs = random_orthogonal(rng, n);
  inst.H = assemble(inst.eigenvalues, inst.eigvecs);
  const Vector z = random_unit_vector(rng, n);
  Vector hz = inst.H.apply(z);
  for (double& x : hz) x = -x;
  inst.c = hz;
  inst.x_true = z;
  return inst;
}

// As above plus a component nu on a null eigenvector: no solution exists.
inline TestInstance singular_incompatible_instance(std::mt19937_64& rng,
                                                   std::size_t n,
                                                   std::size_t zeros) {
  TestInstance inst;
  inst.eigenvalues = random_spectrum(rng, n, zeros);
  inst.eigvecs = random_orthogonal(rng, n);
  inst.H = assemble(inst.eigenvalues, inst.eigvecs);
  const Vector z = random_unit_vector(rng, n);
  Vector c = inst.H.apply(z);
  for (double& x : c) x = -x;
  std::uniform_real_distribution<double> nu_dist(0.2, 1.0);
  std::bernoulli_distribution flip(0.5);
  const double nu = nu_dist(rng) * (flip(rng) ? 1.0 : -1.0);
  for (std::size_t t = 0; t < n; ++t) c[t] += nu * inst.eigvecs[0][t];
  inst.c = c;
  return inst;
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double residual_norm(const DenseSymmetric& H, const Vector& x,
                            const Vector& c) {
  Vector r = H.apply(x);
  for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  return unkry::norm2(r);
}

}  // namespace testsup
