#include "unkry/operator.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "unkry/errors.hpp"
#include "unkry/kernels.hpp"

namespace unkry {

DenseSymmetric::DenseSymmetric(std::size_t n, Vector entries)
    : n_(n), a_(std::move(entries)) {}

void DenseSymmetric::apply(const Vector& v, Vector& out) const {
  if (v.size() != n_) {
    throw DimensionMismatch("apply: vector size " + std::to_string(v.size()) +
                            " vs operator dim " + std::to_string(n_));
  }
  out.resize(n_);
  kernels::matvec(n_, a_.data(), v.data(), out.data());
}

double DenseSymmetric::frobenius_norm() const {
  return std::sqrt(kernels::dot(a_.size(), a_.data(), a_.data()));
}

DenseSymmetric make_dense(std::size_t n, const Vector& entries) {
  if (n == 0) throw EmptyInput("make_dense: n must be positive");
  if (entries.size() != n * n) {
    throw NonSquare("make_dense: expected " + std::to_string(n * n) +
                    " entries, got " + std::to_string(entries.size()));
  }
  require_finite(entries, "make_dense: entries");

  double amax = 0.0;
  for (double e : entries) amax = std::max(amax, std::abs(e));

  Vector sym(entries.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double aij = entries[i * n + j];
      const double aji = entries[j * n + i];
      if (std::abs(aij - aji) > asymmetry_tol * amax) {
        throw AsymmetryExceeded(
            "make_dense: entry (" + std::to_string(i) + "," + std::to_string(j) +
            ") differs from its transpose by " + std::to_string(std::abs(aij - aji)));
      }
      const double v = 0.5 * (aij + aji);
      sym[i * n + j] = v;
      sym[j * n + i] = v;
    }
  }
  return DenseSymmetric(n, std::move(sym));
}

DenseSymmetric make_diagonal(const Vector& diag) {
  if (diag.empty()) throw EmptyInput("make_diagonal: empty diagonal");
  require_finite(diag, "make_diagonal: diagonal");
  const std::size_t n = diag.size();
  Vector a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = diag[i];
  return DenseSymmetric(n, std::move(a));
}

}  // namespace unkry
