#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "unkry/errors.hpp"
#include "unkry/lanczos.hpp"
#include "unkry/operator.hpp"
#include "unkry/vec.hpp"

namespace unkry {

struct KrylovConfig {
  // Termination: iterate while ||q_k|| > q_tol.
  double q_tol = kSqrtEps;
  // Compatibility decision: |delta_r| > delta_tol means compatible.
  double delta_tol = kSqrtEps;
  // Iteration cap; unset selects n + 2.
  std::optional<std::size_t> max_iter;
  ScalingStrategy strategy = ScalingStrategy::ynorm;
  bool reorthogonalize = false;
  // Keep every triple in the report (memory n * r); used by the text
  // report's column tables. Off by default.
  bool keep_history = false;

  std::size_t effective_max_iter(std::size_t n) const {
    return max_iter.value_or(n + 2);
  }
};

enum class Verdict { compatible, incompatible };
enum class SolveStatus { converged, max_iter_reached };

const char* to_string(Verdict v);
const char* to_string(SolveStatus s);

struct SolveReport {
  // Unset only when status is max_iter_reached: without termination the
  // compatible-vs-incompatible question is undecided.
  std::optional<Verdict> verdict;
  std::size_t r = 0;
  std::optional<Vector> x;              // solution, when compatible
  std::optional<Vector> certificate_y;  // y_r, when incompatible
  double delta_r = 0.0;
  // ||Hx + c|| when compatible, ||H y_r|| diagnostic when incompatible.
  double residual_norm = 0.0;
  IterationTrace trace;
  std::vector<LanczosTriple> triples_kept;  // last two, oldest first
  std::vector<LanczosTriple> history;       // all triples when keep_history
  SolveStatus status = SolveStatus::converged;
};

// The iteration cap was reached while ||q_k|| was still above q_tol.
// Carries the partial report; no verdict is guessed.
class DidNotTerminate : public Error {
 public:
  DidNotTerminate(const std::string& msg, SolveReport partial)
      : Error(msg), partial_(std::move(partial)) {}
  const SolveReport& partial() const { return partial_; }

 private:
  SolveReport partial_;
};

// Runs the triple recursion while ||q_k|| > q_tol, then classifies:
// |delta_r| > delta_tol yields the solution x_r = (1/delta_r) y_r, otherwise
// y_r is a null vector of H with y_r . c != 0, certifying incompatibility.
// Throws ZeroRightHandSide, DidNotTerminate, and the scaling breakdowns of
// next_triple.
SolveReport solve_krylov(const SymmetricOperator& H, const Vector& c,
                         const KrylovConfig& cfg = {});

// Diagnostics for the delta sequence of a completed run. A step counts as a
// stagnation when the c-loading of its triple vanishes at the triple's own
// scale, |delta_k| ||q_0|| <= delta_tol ||q_k||; an absolute threshold on
// delta alone would misread the tails of incompatible runs, where deltas and
// q norms decay together.
struct DiagnosticsSummary {
  // (i) two adjacent stagnation steps; must not occur.
  bool consecutive_near_zero = false;
  std::vector<std::size_t> near_zero_steps;  // interior stagnation steps
  // (ii) among near-zero interior steps with same-sign theta_{k-1}, theta_k:
  std::size_t sign_checks = 0;
  std::size_t sign_violations = 0;  // delta_{k+1} delta_{k-1} >= 0 occurrences
  // (iii) worst relative error of the predicted ratio
  // delta_{k+1} = -(theta_k/theta_{k-1}) (q_k.q_k)/(q_{k-1}.q_{k-1}) delta_{k-1}.
  double max_ratio_rel_error = 0.0;
};

DiagnosticsSummary check_delta_laws(const IterationTrace& trace,
                                    const KrylovConfig& cfg = {});

}  // namespace unkry
