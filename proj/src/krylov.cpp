#include "unkry/krylov.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "unkry/kernels.hpp"

namespace unkry {

const char* to_string(Verdict v) {
  return v == Verdict::compatible ? "compatible" : "incompatible";
}

const char* to_string(SolveStatus s) {
  return s == SolveStatus::converged ? "converged" : "max_iter_reached";
}

namespace {

SolveReport partial_report(TripleGenerator& gen, bool keep_history,
                           std::vector<LanczosTriple> history) {
  SolveReport rep;
  rep.status = SolveStatus::max_iter_reached;
  rep.r = gen.current().k;
  rep.delta_r = gen.current().delta;
  rep.trace = gen.trace();
  if (gen.previous()) rep.triples_kept.push_back(*gen.previous());
  rep.triples_kept.push_back(gen.current());
  if (keep_history) rep.history = std::move(history);
  return rep;
}

}  // namespace

SolveReport solve_krylov(const SymmetricOperator& H, const Vector& c,
                         const KrylovConfig& cfg) {
  require_finite(c, "solve_krylov: c");
  TripleGenerator gen(H, c, cfg.strategy, cfg.reorthogonalize);
  const std::size_t cap = cfg.effective_max_iter(H.dim());

  std::vector<LanczosTriple> history;
  if (cfg.keep_history) history.push_back(gen.current());

  while (norm2(gen.current().q) > cfg.q_tol) {
    if (gen.current().k >= cap) {
      throw DidNotTerminate(
          "solve_krylov: ||q|| = " + std::to_string(norm2(gen.current().q)) +
              " still above q_tol after " + std::to_string(cap) + " steps",
          partial_report(gen, cfg.keep_history, std::move(history)));
    }
    gen.advance();
    if (cfg.keep_history) history.push_back(gen.current());
  }

  const LanczosTriple& last = gen.current();
  SolveReport rep;
  rep.status = SolveStatus::converged;
  rep.r = last.k;
  rep.delta_r = last.delta;
  rep.trace = gen.trace();
  if (gen.previous()) rep.triples_kept.push_back(*gen.previous());
  rep.triples_kept.push_back(last);
  if (cfg.keep_history) rep.history = std::move(history);

  if (std::abs(last.delta) > cfg.delta_tol) {
    rep.verdict = Verdict::compatible;
    rep.x = scaled(1.0 / last.delta, last.y);
    Vector g = H.apply(*rep.x);
    kernels::axpy(g.size(), 1.0, c.data(), g.data());
    rep.residual_norm = norm2(g);
  } else {
    if (norm2(last.y) <= cfg.q_tol) {
      throw ZeroCertificate(
          "solve_krylov: terminated incompatible but y_r is numerically zero");
    }
    rep.verdict = Verdict::incompatible;
    rep.certificate_y = last.y;
    rep.residual_norm = norm2(H.apply(last.y));
  }
  return rep;
}

DiagnosticsSummary check_delta_laws(const IterationTrace& trace,
                                    const KrylovConfig& cfg) {
  DiagnosticsSummary out;
  const std::size_t r = trace.steps();  // deltas has r + 1 entries
  if (trace.deltas.size() < 2) return out;

  // A step stagnates when the c-loading of its triple vanishes at the
  // triple's own scale: |delta_k| ||q_0|| <= delta_tol ||q_k||. A raw
  // |delta_k| <= delta_tol test would misfire on incompatible runs, whose
  // deltas and q norms decay together toward termination with the loading
  // ratio staying far from zero.
  const double qn0 = trace.qnorms[0];
  auto stagnant = [&](std::size_t k) {
    return std::abs(trace.deltas[k]) * qn0 <= cfg.delta_tol * trace.qnorms[k];
  };

  // A stagnant step with q_k != 0 forces delta_{k+1} != 0, so stagnation
  // never occurs at two adjacent steps, up to and including (r-1, r).
  for (std::size_t k = 0; k + 1 <= r; ++k) {
    if (stagnant(k) && stagnant(k + 1)) out.consecutive_near_zero = true;
  }

  for (std::size_t k = 1; k < r; ++k) {
    if (!stagnant(k)) continue;
    out.near_zero_steps.push_back(k);
    // Around a stagnant step the neighbors obey
    // delta_{k+1} = -(theta_k/theta_{k-1}) (q_k.q_k)/(q_{k-1}.q_{k-1}) delta_{k-1}.
    const double theta_prev = trace.thetas[k - 1];
    const double theta_here = trace.thetas[k];
    const double qq_ratio = (trace.qnorms[k] * trace.qnorms[k]) /
                            (trace.qnorms[k - 1] * trace.qnorms[k - 1]);
    const double predicted =
        -(theta_here / theta_prev) * qq_ratio * trace.deltas[k - 1];
    const double observed = trace.deltas[k + 1];
    const double scale = std::abs(predicted) + std::abs(observed);
    if (scale > 0.0) {
      out.max_ratio_rel_error =
          std::max(out.max_ratio_rel_error, std::abs(predicted - observed) / scale);
    }
    if (theta_prev * theta_here > 0.0) {
      ++out.sign_checks;
      if (trace.deltas[k + 1] * trace.deltas[k - 1] >= 0.0) ++out.sign_violations;
    }
  }
  return out;
}

}  // namespace unkry
