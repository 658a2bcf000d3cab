#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "unkry/krylov.hpp"
#include "unkry/lanczos.hpp"
#include "unkry/operator.hpp"
#include "unkry/vec.hpp"

namespace unkry {

// Running state of the minimum-residual recursion:
//   delta_{k+1}^MR = (q_{k+1}.q_{k+1} / q_k.q_k) delta_k^MR + delta_{k+1}^2
//   y_{k+1}^MR     = (q_{k+1}.q_{k+1} / q_k.q_k) y_k^MR + delta_{k+1} y_{k+1}
//   x_k^MR = y_k^MR / delta_k^MR, the minimizer of ||Hx + c|| over K_k.
struct MinresAccumulator {
  Vector y_mr;
  double delta_mr = 1.0;
  Vector x_mr;
  Vector g_mr;  // H x_mr + c
  std::vector<double> residual_history;  // ||g_k^MR|| per step
};

struct MinresReport : SolveReport {
  Vector x_mr;
  Vector g_mr;
  std::vector<double> residual_history;
  // When compatible: ||x_r - x_mr|| / (1 + ||x_r||), the observed gap
  // between the direct solution and the minimum-residual iterate (zero in
  // exact arithmetic).
  std::optional<double> x_gap;
};

// Starts the accumulator from the initial triple: y_mr = 0, delta_mr = 1,
// x_mr = 0, g_mr = c.
MinresAccumulator minres_init(const Vector& c, const LanczosTriple& t0);

// One recursion step. q_prev_sq must be q_k.q_k of the previous triple.
// Intended for interior steps and for the final step of a compatible run;
// the final step of an incompatible run goes through
// minres_finalize_incompatible instead. Throws NonpositiveDenominator.
void minres_update(MinresAccumulator& acc, const LanczosTriple& t_new,
                   double q_prev_sq, const SymmetricOperator& H,
                   const Vector& c);

// Least step onto the null direction: x_r^MR = x_{r-1}^MR + gamma_r y_r with
// gamma_r = -(y_r . x_{r-1}^MR)/(y_r . y_r), the minimum-Euclidean-norm
// minimizer. acc must be the state at r-1. Throws ZeroCertificate.
Vector minres_finalize_incompatible(const MinresAccumulator& acc,
                                    const Vector& y_r);

// Full driver: the triple recursion of solve_krylov with the accumulator
// carried along. Compatible runs report x_mr = y_r^MR / delta_r^MR (equal to
// x_r in exact arithmetic); incompatible runs report the minimum-norm
// least-squares solution. Errors as solve_krylov.
MinresReport solve_minres(const SymmetricOperator& H, const Vector& c,
                          const KrylovConfig& cfg = {});

}  // namespace unkry
