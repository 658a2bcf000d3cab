#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "unkry/lanczos.hpp"
#include "unkry/operator.hpp"
#include "unkry/vec.hpp"

// Brute-force reference implementations used by the tests. Everything here
// is independent of the iterative solvers: dense factorization, cyclic
// Jacobi eigendecomposition, explicit Krylov bases, and the direct solution
// of the residual-minimization quadratic program.
namespace unkry::oracle {

struct EigenDecomposition {
  Vector eigenvalues;                // ascending
  std::vector<Vector> eigenvectors;  // eigenvectors[j] pairs with eigenvalues[j]

  std::size_t dim() const { return eigenvalues.size(); }
  double max_abs_eigenvalue() const;
};

struct KrylovBasis {
  std::vector<Vector> columns;  // c, Hc, H^2 c, ..., up to the first dependent one
  std::size_t rank = 0;         // grade r: columns 0..r-1 independent, column r dependent
};

// Relative threshold separating "zero" eigenvalues from the rest.
inline constexpr double nullspace_tol = 1e-10;

// Solves H x = b by Gaussian elimination with partial pivoting.
// Throws SingularMatrix when a pivot collapses.
Vector dense_solve(const DenseSymmetric& H, const Vector& b);

// Cyclic Jacobi rotations until the off-diagonal mass falls below
// 1e-12 relative to the Frobenius norm. Throws JacobiNoConvergence.
EigenDecomposition eigendecompose(const DenseSymmetric& H);

// Orthonormal eigenvectors with |lambda| <= tol * max|lambda|.
// Empty when H is numerically nonsingular.
std::vector<Vector> nullspace_basis(const EigenDecomposition& ed,
                                    double tol = nullspace_tol);

// Minimum-norm minimizer of ||Hx + c||:
// x = -sum over |lambda_i| > tol * max|lambda| of (v_i.c / lambda_i) v_i.
Vector pinv_solve(const EigenDecomposition& ed, const Vector& c,
                  double tol = nullspace_tol);

// Explicit Krylov basis and the grade r of c with respect to H, via
// rank-revealing Gram-Schmidt with relative tolerance 1e-10 per column.
// Throws ZeroRightHandSide.
std::pair<KrylovBasis, std::size_t> krylov_grade(const SymmetricOperator& H,
                                                 const Vector& c);

// Direct solution of the order-k residual-minimization program:
// minimize 1/2 sum gamma_i^2 q_i.q_i subject to sum gamma_i delta_i = 1,
// via the closed form gamma_i = (1 / sum_j delta_j^2/(q_j.q_j)) *
// delta_i/(q_i.q_i); x = sum gamma_i y_i. triples must hold the first k+1
// triples of a run with all q_i nonzero. Throws ZeroQInBasis.
std::pair<std::vector<double>, Vector> minres_qp(
    const SymmetricOperator& H, const Vector& c, std::size_t k,
    const std::vector<LanczosTriple>& triples);

}  // namespace unkry::oracle
