#pragma once

#include <cstddef>
#include <utility>

#include "unkry/krylov.hpp"
#include "unkry/operator.hpp"
#include "unkry/vec.hpp"

namespace unkry {

// Conjugate-gradient state for H x + c = 0 with H positive definite:
// x_0 = 0, g_0 = c, p_0 = -g_0, and per step
//   theta_k = -(g_k . p_k)/(p_k . H p_k)
//   x_{k+1} = x_k + theta_k p_k
//   g_{k+1} = g_k + theta_k H p_k
//   p_{k+1} = -g_{k+1} + (g_{k+1}.g_{k+1} / g_k.g_k) p_k
struct CgState {
  Vector x;
  Vector g;  // H x + c
  Vector p;
  double g_dot_g = 0.0;
  std::size_t k = 0;
};

CgState cg_init(const Vector& c);

// One step; returns the new state and the step length theta_k.
// Throws NonpositiveCurvature when p . H p <= 0.
std::pair<CgState, double> cg_step(const SymmetricOperator& H,
                                   const CgState& state);

// Iterates until ||g_k|| <= q_tol * ||c|| or max_iter. The report reuses the
// krylov SolveReport shape: thetas holds the step lengths, qnorms the
// gradient norms, deltas is all ones (the normalized triples are
// (g_k, x_k, 1)); alphas and betas stay empty.
// Throws ZeroRightHandSide, NonpositiveCurvature, DidNotTerminate.
SolveReport solve_cg(const SymmetricOperator& H, const Vector& c,
                     const KrylovConfig& cfg = {});

}  // namespace unkry
