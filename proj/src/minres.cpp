#include "unkry/minres.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "unkry/errors.hpp"
#include "unkry/kernels.hpp"

namespace unkry {

namespace {

// Joint rescale guard: x_mr = y_mr / delta_mr is invariant, so once
// delta_mr grows past this bound both are scaled down together.
constexpr double rescale_above = 1e150;

void refresh_iterate(MinresAccumulator& acc, const SymmetricOperator& H,
                     const Vector& c) {
  acc.x_mr = scaled(1.0 / acc.delta_mr, acc.y_mr);
  acc.g_mr = H.apply(acc.x_mr);
  kernels::axpy(c.size(), 1.0, c.data(), acc.g_mr.data());
  acc.residual_history.push_back(norm2(acc.g_mr));
}

}  // namespace

MinresAccumulator minres_init(const Vector& c, const LanczosTriple& t0) {
  if (t0.k != 0) {
    throw DimensionMismatch("minres_init: t0 must be the initial triple");
  }
  MinresAccumulator acc;
  acc.y_mr = scaled(t0.delta, t0.y);          // = 0
  acc.delta_mr = t0.delta * t0.delta;         // = 1
  acc.x_mr.assign(c.size(), 0.0);
  acc.g_mr = c;
  acc.residual_history.push_back(norm2(c));
  return acc;
}

void minres_update(MinresAccumulator& acc, const LanczosTriple& t_new,
                   double q_prev_sq, const SymmetricOperator& H,
                   const Vector& c) {
  if (q_prev_sq <= 0.0) {
    throw NonpositiveDenominator("minres_update: q_k.q_k = " +
                                 std::to_string(q_prev_sq));
  }
  const double ratio = dot(t_new.q, t_new.q) / q_prev_sq;
  acc.delta_mr = ratio * acc.delta_mr + t_new.delta * t_new.delta;
  kernels::scal(acc.y_mr.size(), ratio, acc.y_mr.data());
  kernels::axpy(acc.y_mr.size(), t_new.delta, t_new.y.data(), acc.y_mr.data());

  if (acc.delta_mr > rescale_above) {
    const double down = std::ldexp(1.0, -512);
    acc.delta_mr *= down;
    kernels::scal(acc.y_mr.size(), down, acc.y_mr.data());
  }
  refresh_iterate(acc, H, c);
}

Vector minres_finalize_incompatible(const MinresAccumulator& acc,
                                    const Vector& y_r) {
  const double yy = dot(y_r, y_r);
  if (std::sqrt(yy) <= kSqrtEps) {
    throw ZeroCertificate(
        "minres_finalize_incompatible: y_r is numerically zero");
  }
  const double gamma = -dot(y_r, acc.x_mr) / yy;
  return axpy(gamma, y_r, acc.x_mr);
}

MinresReport solve_minres(const SymmetricOperator& H, const Vector& c,
                          const KrylovConfig& cfg) {
  require_finite(c, "solve_minres: c");
  TripleGenerator gen(H, c, cfg.strategy, cfg.reorthogonalize);
  const std::size_t cap = cfg.effective_max_iter(H.dim());

  MinresAccumulator acc = minres_init(c, gen.current());

  std::vector<LanczosTriple> history;
  if (cfg.keep_history) history.push_back(gen.current());

  bool finalized_incompatible = false;
  Vector x_mr_final;

  while (norm2(gen.current().q) > cfg.q_tol) {
    if (gen.current().k >= cap) {
      MinresReport rep;
      rep.status = SolveStatus::max_iter_reached;
      rep.r = gen.current().k;
      rep.delta_r = gen.current().delta;
      rep.trace = gen.trace();
      if (gen.previous()) rep.triples_kept.push_back(*gen.previous());
      rep.triples_kept.push_back(gen.current());
      if (cfg.keep_history) rep.history = std::move(history);
      rep.x_mr = acc.x_mr;
      rep.g_mr = acc.g_mr;
      rep.residual_history = acc.residual_history;
      throw DidNotTerminate(
          "solve_minres: ||q|| still above q_tol after " + std::to_string(cap) +
              " steps",
          std::move(rep));
    }
    const double q_prev_sq = gen.current_qq();
    const LanczosTriple& t = gen.advance();
    if (cfg.keep_history) history.push_back(t);

    const bool is_final = norm2(t.q) <= cfg.q_tol;
    if (is_final && std::abs(t.delta) <= cfg.delta_tol) {
      // Incompatible termination: the recursion's denominator vanishes
      // here, so the last step is the projection onto the null direction.
      x_mr_final = minres_finalize_incompatible(acc, t.y);
      finalized_incompatible = true;
    } else {
      minres_update(acc, t, q_prev_sq, H, c);
    }
  }

  const LanczosTriple& last = gen.current();
  MinresReport rep;
  rep.status = SolveStatus::converged;
  rep.r = last.k;
  rep.delta_r = last.delta;
  rep.trace = gen.trace();
  if (gen.previous()) rep.triples_kept.push_back(*gen.previous());
  rep.triples_kept.push_back(last);
  if (cfg.keep_history) rep.history = std::move(history);

  if (finalized_incompatible) {
    rep.verdict = Verdict::incompatible;
    rep.certificate_y = last.y;
    rep.residual_norm = norm2(H.apply(last.y));
    rep.x_mr = std::move(x_mr_final);
    rep.g_mr = H.apply(rep.x_mr);
    kernels::axpy(c.size(), 1.0, c.data(), rep.g_mr.data());
    acc.residual_history.push_back(norm2(rep.g_mr));
    rep.residual_history = std::move(acc.residual_history);
  } else {
    rep.verdict = Verdict::compatible;
    // At termination delta_r is beyond delta_tol, so the accumulator's
    // iterate is the solution; x_r of the plain run is reported alongside.
    rep.x = scaled(1.0 / last.delta, last.y);
    Vector g = H.apply(*rep.x);
    kernels::axpy(g.size(), 1.0, c.data(), g.data());
    rep.residual_norm = norm2(g);
    rep.x_mr = acc.x_mr;
    rep.g_mr = acc.g_mr;
    rep.residual_history = std::move(acc.residual_history);
    Vector diff = axpy(-1.0, rep.x_mr, *rep.x);
    rep.x_gap = norm2(diff) / (1.0 + norm2(*rep.x));
  }
  return rep;
}

}  // namespace unkry
