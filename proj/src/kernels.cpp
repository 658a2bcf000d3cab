#include "unkry/kernels.hpp"

#include <cstdint>

namespace unkry::kernels {

namespace serial {

void matvec(std::size_t n, const double* a, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a + i * n;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

void axpy(std::size_t n, double alpha, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal(std::size_t n, double alpha, double* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double dot(std::size_t n, const double* x, const double* y) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

}  // namespace serial

void matvec(std::size_t n, const double* a, const double* x, double* y) {
#ifdef _OPENMP
  if (n >= parallel_threshold) {
    const std::int64_t sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < sn; ++i) {
      const double* row = a + static_cast<std::size_t>(i) * n;
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
      y[i] = s;
    }
    return;
  }
#endif
  serial::matvec(n, a, x, y);
}

void axpy(std::size_t n, double alpha, const double* x, double* y) {
#ifdef _OPENMP
  if (n >= parallel_threshold) {
    const std::int64_t sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < sn; ++i) y[i] += alpha * x[i];
    return;
  }
#endif
  serial::axpy(n, alpha, x, y);
}

void scal(std::size_t n, double alpha, double* x) {
#ifdef _OPENMP
  if (n >= parallel_threshold) {
    const std::int64_t sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < sn; ++i) x[i] *= alpha;
    return;
  }
#endif
  serial::scal(n, alpha, x);
}

double dot(std::size_t n, const double* x, const double* y) {
  return serial::dot(n, x, y);
}

}  // namespace unkry::kernels
