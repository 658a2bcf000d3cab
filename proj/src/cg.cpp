#include "unkry/cg.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "unkry/errors.hpp"
#include "unkry/kernels.hpp"

namespace unkry {

CgState cg_init(const Vector& c) {
  require_finite(c, "cg_init: c");
  if (norm2(c) == 0.0) throw ZeroRightHandSide("cg_init: c = 0");
  CgState s;
  s.x.assign(c.size(), 0.0);
  s.g = c;
  s.p = scaled(-1.0, c);
  s.g_dot_g = dot(c, c);
  s.k = 0;
  return s;
}

std::pair<CgState, double> cg_step(const SymmetricOperator& H,
                                   const CgState& state) {
  const Vector hp = H.apply(state.p);
  const double curvature = dot(state.p, hp);
  if (curvature <= 0.0) {
    throw NonpositiveCurvature(
        "cg_step: nonpositive curvature p.Hp = " + std::to_string(curvature) +
            " at step " + std::to_string(state.k) +
            "; the operator is not positive definite on this subspace",
        state.k, curvature);
  }
  const double theta = -dot(state.g, state.p) / curvature;

  CgState next;
  next.k = state.k + 1;
  next.x = axpy(theta, state.p, state.x);
  next.g = axpy(theta, hp, state.g);
  next.g_dot_g = dot(next.g, next.g);
  next.p = scaled(-1.0, next.g);
  kernels::axpy(next.p.size(), next.g_dot_g / state.g_dot_g, state.p.data(),
                next.p.data());
  return {std::move(next), theta};
}

SolveReport solve_cg(const SymmetricOperator& H, const Vector& c,
                     const KrylovConfig& cfg) {
  if (c.size() != H.dim()) {
    throw DimensionMismatch("solve_cg: c size " + std::to_string(c.size()) +
                            " vs operator dim " + std::to_string(H.dim()));
  }
  CgState state = cg_init(c);
  const double c_norm = norm2(c);
  const std::size_t cap = cfg.effective_max_iter(H.dim());

  SolveReport rep;
  rep.trace.qnorms.push_back(c_norm);
  rep.trace.deltas.push_back(1.0);

  while (norm2(state.g) > cfg.q_tol * c_norm) {
    if (state.k >= cap) {
      rep.status = SolveStatus::max_iter_reached;
      rep.r = state.k;
      rep.delta_r = 1.0;
      throw DidNotTerminate(
          "solve_cg: ||g|| = " + std::to_string(norm2(state.g)) +
              " still above tolerance after " + std::to_string(cap) + " steps",
          std::move(rep));
    }
    auto [next, theta] = cg_step(H, state);
    state = std::move(next);
    rep.trace.thetas.push_back(theta);
    rep.trace.qnorms.push_back(norm2(state.g));
    rep.trace.deltas.push_back(1.0);
  }

  rep.status = SolveStatus::converged;
  rep.verdict = Verdict::compatible;
  rep.r = state.k;
  rep.delta_r = 1.0;
  rep.x = state.x;
  rep.residual_norm = norm2(state.g);
  LanczosTriple t;
  t.q = state.g;
  t.y = state.x;
  t.delta = 1.0;
  t.k = state.k;
  rep.triples_kept.push_back(std::move(t));
  return rep;
}

}  // namespace unkry
