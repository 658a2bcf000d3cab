#include "unkry/vec.hpp"

#include <cmath>

#include "unkry/errors.hpp"
#include "unkry/kernels.hpp"

namespace unkry {

double dot(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("dot: size " + std::to_string(u.size()) + " vs " +
                            std::to_string(v.size()));
  }
  return kernels::dot(u.size(), u.data(), v.data());
}

double norm2(const Vector& v) {
  return std::sqrt(kernels::dot(v.size(), v.data(), v.data()));
}

Vector axpy(double a, const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw DimensionMismatch("axpy: size " + std::to_string(x.size()) + " vs " +
                            std::to_string(y.size()));
  }
  Vector out = y;
  kernels::axpy(x.size(), a, x.data(), out.data());
  return out;
}

Vector scaled(double a, const Vector& x) {
  Vector out = x;
  kernels::scal(out.size(), a, out.data());
  return out;
}

bool all_finite(const Vector& v) {
  for (double e : v) {
    if (!std::isfinite(e)) return false;
  }
  return true;
}

void require_finite(const Vector& v, const std::string& what) {
  if (!all_finite(v)) throw NonFiniteInput(what + " contains NaN or Inf");
}

}  // namespace unkry
