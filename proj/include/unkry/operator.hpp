#pragma once

#include <cstddef>

#include "unkry/vec.hpp"

namespace unkry {

// Abstract symmetric linear operator. Implementations must be const in the
// mathematical sense: apply is deterministic and distinct solves on the same
// operator may run concurrently.
class SymmetricOperator {
 public:
  virtual ~SymmetricOperator() = default;

  virtual std::size_t dim() const = 0;

  // out = H v. Throws DimensionMismatch if v.size() != dim().
  virtual void apply(const Vector& v, Vector& out) const = 0;

  Vector apply(const Vector& v) const {
    Vector out(dim(), 0.0);
    apply(v, out);
    return out;
  }
};

// Dense symmetric operator backed by row-major storage. Construction
// symmetrizes the entries; asymmetry beyond tolerance is rejected upstream
// by make_dense.
class DenseSymmetric final : public SymmetricOperator {
 public:
  DenseSymmetric() = default;  // empty operator, dim() == 0
  DenseSymmetric(std::size_t n, Vector entries);

  std::size_t dim() const override { return n_; }
  void apply(const Vector& v, Vector& out) const override;
  using SymmetricOperator::apply;

  double entry(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const Vector& data() const { return a_; }

  // Frobenius norm, used for relative tolerances.
  double frobenius_norm() const;

 private:
  std::size_t n_ = 0;
  Vector a_;
};

// Relative asymmetry tolerance for make_dense: |a_ij - a_ji| above
// asymmetry_tol * max|entries| is an error rather than silently averaged.
inline constexpr double asymmetry_tol = 1e-12;

// Builds a DenseSymmetric from n x n row-major entries. The stored matrix is
// the symmetrization (a_ij + a_ji) / 2. Throws NonSquare, EmptyInput,
// NonFiniteInput, or AsymmetryExceeded.
DenseSymmetric make_dense(std::size_t n, const Vector& entries);

// Diagonal operator with the given diagonal. Throws EmptyInput or
// NonFiniteInput.
DenseSymmetric make_diagonal(const Vector& diag);

}  // namespace unkry
