#include "unkry/lanczos.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "unkry/errors.hpp"
#include "unkry/kernels.hpp"

namespace unkry {

namespace {

struct UnscaledStep {
  Vector q;
  Vector y;
  double delta = 0.0;
  double alpha = 0.0;
  std::optional<double> beta;
  double hq_norm = 0.0;     // ||H q_k||
  double prev_qnorm = 0.0;  // ||q_k||
  double prev2_qnorm = 0.0; // ||q_{k-1}|| (0 at the first step)
};

// Computes the recurrence before the free scaling theta_k is applied:
//   q_{k+1} = -H q_k + alpha_k q_k + beta_{k-1} q_{k-1}
//   y_{k+1} = -q_k + alpha_k y_k + beta_{k-1} y_{k-1}
//   delta_{k+1} = alpha_k delta_k + beta_{k-1} delta_{k-1}
// with the beta terms absent at k = 0.
UnscaledStep unscaled_step(const SymmetricOperator& H, const LanczosTriple& prev,
                           const std::optional<LanczosTriple>& prev2) {
  const std::size_t n = prev.q.size();
  const double qq = dot(prev.q, prev.q);
  if (qq == 0.0) {
    throw ZeroQ("next_triple: q_" + std::to_string(prev.k) + " is zero");
  }
  if (prev2.has_value() != (prev.k >= 1)) {
    throw DimensionMismatch("next_triple: prev2 must be present iff k >= 1");
  }

  const Vector hq = H.apply(prev.q);
  UnscaledStep s;
  s.hq_norm = norm2(hq);
  s.prev_qnorm = std::sqrt(qq);
  s.alpha = dot(prev.q, hq) / qq;

  s.q = hq;
  kernels::scal(n, -1.0, s.q.data());
  kernels::axpy(n, s.alpha, prev.q.data(), s.q.data());

  s.y = prev.q;
  kernels::scal(n, -1.0, s.y.data());
  kernels::axpy(n, s.alpha, prev.y.data(), s.y.data());

  s.delta = s.alpha * prev.delta;

  if (prev2) {
    const double qq2 = dot(prev2->q, prev2->q);
    if (qq2 == 0.0) {
      throw ZeroQ("next_triple: q_" + std::to_string(prev2->k) + " is zero");
    }
    s.prev2_qnorm = std::sqrt(qq2);
    const double beta = dot(prev2->q, hq) / qq2;
    s.beta = beta;
    kernels::axpy(n, beta, prev2->q.data(), s.q.data());
    kernels::axpy(n, beta, prev2->y.data(), s.y.data());
    s.delta += beta * prev2->delta;
  }
  return s;
}

// Picks theta_k for the unscaled triple. Every returned value is finite and
// nonzero; YNorm and QNorm return positive values.
double choose_theta(ScalingStrategy strategy, const UnscaledStep& s,
                    double c_norm, std::size_t k) {
  const double beta_abs = s.beta ? std::abs(*s.beta) : 0.0;
  switch (strategy) {
    case ScalingStrategy::unit:
      return 1.0;
    case ScalingStrategy::ynorm: {
      const double yn = norm2(s.y);
      const double y_scale = s.prev_qnorm + std::abs(s.alpha) * c_norm +
                             beta_abs * c_norm;
      if (yn <= 16.0 * std::numeric_limits<double>::epsilon() * y_scale) {
        throw ZeroYScaling("ynorm scaling: unscaled y_" + std::to_string(k + 1) +
                           " is numerically zero");
      }
      return c_norm / yn;
    }
    case ScalingStrategy::qnorm: {
      const double qn = norm2(s.q);
      const double q_scale = s.hq_norm + std::abs(s.alpha) * s.prev_qnorm +
                             beta_abs * s.prev2_qnorm;
      if (qn > kSqrtEps * q_scale) return c_norm / qn;
      // The new q has collapsed to rounding level: termination is imminent
      // and normalizing its length would only amplify noise. Fall back to
      // the y-based scaling, which stays well defined through the last step.
      const double yn = norm2(s.y);
      if (yn == 0.0) return 1.0;
      return c_norm / yn;
    }
    case ScalingStrategy::normalized: {
      const double denom = s.beta ? s.alpha + *s.beta : s.alpha;
      const double pivot_scale =
          s.hq_norm / s.prev_qnorm +
          (s.prev2_qnorm > 0.0 ? s.hq_norm / s.prev2_qnorm : 0.0);
      if (std::abs(denom) <= kSqrtEps * pivot_scale) {
        throw NormalizationBreakdown(
            "normalized scaling: pivot alpha_k + beta_{k-1} = " +
                std::to_string(denom) + " vanishes at step " + std::to_string(k),
            k);
      }
      return 1.0 / denom;
    }
  }
  throw Error("choose_theta: unknown strategy");
}

}  // namespace

const char* to_string(ScalingStrategy s) {
  switch (s) {
    case ScalingStrategy::ynorm: return "ynorm";
    case ScalingStrategy::qnorm: return "qnorm";
    case ScalingStrategy::unit: return "unit";
    case ScalingStrategy::normalized: return "normalized";
  }
  return "unknown";
}

LanczosTriple initial_triple(const Vector& c) {
  require_finite(c, "initial_triple: c");
  if (norm2(c) == 0.0) {
    throw ZeroRightHandSide("initial_triple: c = 0");
  }
  LanczosTriple t;
  t.q = c;
  t.y.assign(c.size(), 0.0);
  t.delta = 1.0;
  t.k = 0;
  return t;
}

StepResult next_triple(const SymmetricOperator& H, const Vector& c,
                       const LanczosTriple& prev,
                       const std::optional<LanczosTriple>& prev2,
                       ScalingStrategy strategy) {
  UnscaledStep s = unscaled_step(H, prev, prev2);
  const double theta = choose_theta(strategy, s, norm2(c), prev.k);

  StepResult out;
  kernels::scal(s.q.size(), theta, s.q.data());
  kernels::scal(s.y.size(), theta, s.y.data());
  out.triple.q = std::move(s.q);
  out.triple.y = std::move(s.y);
  out.triple.delta = theta * s.delta;
  out.triple.k = prev.k + 1;
  out.alpha = s.alpha;
  out.beta = s.beta;
  out.theta = theta;
  return out;
}

double verify_triple_identity(const SymmetricOperator& H, const Vector& c,
                              const LanczosTriple& t) {
  if (t.q.size() != c.size() || t.y.size() != c.size()) {
    throw DimensionMismatch("verify_triple_identity: component sizes disagree");
  }
  Vector rhs = H.apply(t.y);
  kernels::axpy(c.size(), t.delta, c.data(), rhs.data());
  kernels::axpy(c.size(), -1.0, t.q.data(), rhs.data());
  return norm2(rhs) / (1.0 + norm2(t.q));
}

Tridiagonal extract_tridiagonal(const IterationTrace& trace) {
  if (trace.steps() == 0) {
    throw EmptyTrace("extract_tridiagonal: trace records no steps");
  }
  Tridiagonal t;
  t.diag = trace.alphas;
  t.super = trace.betas;
  t.sub.reserve(trace.steps() - 1);
  for (std::size_t i = 0; i + 1 < trace.steps(); ++i) {
    t.sub.push_back(-1.0 / trace.thetas[i]);
  }
  t.extended_row = -1.0 / trace.thetas.back();
  return t;
}

double check_qq_identity(const LanczosTriple& t_next, const LanczosTriple& t,
                         const SymmetricOperator& H, double theta) {
  if (t_next.q.size() != t.q.size()) {
    throw DimensionMismatch("check_qq_identity: component sizes disagree");
  }
  const Vector hq = H.apply(t.q);
  const double lhs = dot(t_next.q, t_next.q);
  const double rhs = theta * dot(t_next.q, hq);
  return std::abs(lhs + rhs) / (1.0 + lhs);
}

TripleGenerator::TripleGenerator(const SymmetricOperator& H, const Vector& c,
                                 ScalingStrategy strategy, bool reorthogonalize)
    : H_(H),
      c_(c),
      strategy_(strategy),
      reorthogonalize_(reorthogonalize),
      current_(initial_triple(c)) {
  if (c_.size() != H.dim()) {
    throw DimensionMismatch("TripleGenerator: c size " +
                            std::to_string(c_.size()) + " vs operator dim " +
                            std::to_string(H.dim()));
  }
  current_qq_ = dot(current_.q, current_.q);
  trace_.qnorms.push_back(std::sqrt(current_qq_));
  trace_.deltas.push_back(current_.delta);
  if (reorthogonalize_) {
    history_.push_back(current_);
    history_qq_.push_back(current_qq_);
  }
}

const LanczosTriple& TripleGenerator::advance() {
  UnscaledStep s = unscaled_step(H_, current_, previous_);

  if (reorthogonalize_) {
    // Project the unscaled triple against every stored q_j. The same
    // coefficient corrects q, y and delta, so q = Hy + delta c survives.
    for (std::size_t j = 0; j < history_.size(); ++j) {
      const double mu = dot(history_[j].q, s.q) / history_qq_[j];
      if (mu == 0.0) continue;
      kernels::axpy(s.q.size(), -mu, history_[j].q.data(), s.q.data());
      kernels::axpy(s.y.size(), -mu, history_[j].y.data(), s.y.data());
      s.delta -= mu * history_[j].delta;
    }
  }

  const double theta = choose_theta(strategy_, s, norm2(c_), current_.k);
  kernels::scal(s.q.size(), theta, s.q.data());
  kernels::scal(s.y.size(), theta, s.y.data());

  LanczosTriple next;
  next.q = std::move(s.q);
  next.y = std::move(s.y);
  next.delta = theta * s.delta;
  next.k = current_.k + 1;

  previous_ = std::move(current_);
  current_ = std::move(next);
  current_qq_ = dot(current_.q, current_.q);

  trace_.alphas.push_back(s.alpha);
  if (s.beta) trace_.betas.push_back(*s.beta);
  trace_.thetas.push_back(theta);
  trace_.qnorms.push_back(std::sqrt(current_qq_));
  trace_.deltas.push_back(current_.delta);

  if (reorthogonalize_) {
    history_.push_back(current_);
    history_qq_.push_back(current_qq_);
  }
  return current_;
}

}  // namespace unkry
