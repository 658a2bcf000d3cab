#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace unkry {

// Default tolerance for "numerically zero" decisions, sqrt of machine epsilon.
inline const double kSqrtEps = std::sqrt(std::numeric_limits<double>::epsilon());

// Dense real vector. Entries are expected to be finite; boundary routines
// (file readers, operator factories, solver entry points) enforce this.
using Vector = std::vector<double>;

// Inner product. Throws DimensionMismatch if sizes differ.
double dot(const Vector& u, const Vector& v);

// Euclidean norm.
double norm2(const Vector& v);

// Returns a * x + y. Throws DimensionMismatch if sizes differ.
Vector axpy(double a, const Vector& x, const Vector& y);

// Returns a * x.
Vector scaled(double a, const Vector& x);

// Throws NonFiniteInput if any entry is NaN or infinite. what names the
// offending argument in the message.
void require_finite(const Vector& v, const std::string& what);

bool all_finite(const Vector& v);

}  // namespace unkry
