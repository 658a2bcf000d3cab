#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "unkry/operator.hpp"
#include "unkry/vec.hpp"

namespace unkry {

// One member of the triple sequence. The defining identity is
// q = H y + delta c, with (q_0, y_0, delta_0) = (c, 0, 1).
struct LanczosTriple {
  Vector q;
  Vector y;
  double delta = 0.0;
  std::size_t k = 0;
};

// Choice of the free scaling factor theta_k applied to each new triple.
//   ynorm      theta_k > 0 with ||y_{k+1}|| = ||c||       (default)
//   qnorm      theta_k > 0 with ||q_{k+1}|| = ||q_0||
//   unit       theta_k = 1
//   normalized theta_0 = 1/alpha_0, theta_k = 1/(alpha_k + beta_{k-1}),
//              which forces delta_k = 1; breaks down on a vanishing pivot
enum class ScalingStrategy { ynorm, qnorm, unit, normalized };

const char* to_string(ScalingStrategy s);

// Per-step scalars of a run. After m steps: alphas, thetas have m entries,
// betas has m-1 (beta_{-1} does not exist), qnorms and deltas have m+1
// (they include the initial triple).
struct IterationTrace {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<double> thetas;
  std::vector<double> qnorms;
  std::vector<double> deltas;

  std::size_t steps() const { return alphas.size(); }
};

// The tridiagonal view T_k of a run: H Q_k = Q_{k+1} Tbar_k where Q_k
// stacks q_0..q_k, T_k has diag alpha_0..alpha_k, super beta_0..beta_{k-1},
// sub -1/theta_0..-1/theta_{k-1}, and Tbar_k appends the row
// -(1/theta_k) e_{k+1}^T.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> super;
  std::vector<double> sub;
  double extended_row = 0.0;
};

// Returns (q=c, y=0, delta=1, k=0). Throws ZeroRightHandSide when c = 0.
LanczosTriple initial_triple(const Vector& c);

struct StepResult {
  LanczosTriple triple;
  double alpha = 0.0;
  std::optional<double> beta;
  double theta = 0.0;
};

// Advances the three-term recurrence by one step:
//   alpha_k = (q_k . H q_k) / (q_k . q_k)
//   beta_{k-1} = (q_{k-1} . H q_k) / (q_{k-1} . q_{k-1})      (k >= 1)
//   q_{k+1} = theta_k (-H q_k + alpha_k q_k + beta_{k-1} q_{k-1})
//   y_{k+1} = theta_k (-q_k + alpha_k y_k + beta_{k-1} y_{k-1})
//   delta_{k+1} = theta_k (alpha_k delta_k + beta_{k-1} delta_{k-1})
// with the beta terms absent at k = 0. prev2 must be present iff prev.k >= 1.
// Throws ZeroQ, NormalizationBreakdown, ZeroYScaling.
StepResult next_triple(const SymmetricOperator& H, const Vector& c,
                       const LanczosTriple& prev,
                       const std::optional<LanczosTriple>& prev2,
                       ScalingStrategy strategy);

// Relative residual of the defining identity:
// ||q - (H y + delta c)|| / (1 + ||q||).
double verify_triple_identity(const SymmetricOperator& H, const Vector& c,
                              const LanczosTriple& t);

// Assembles T_k and the extended row from a recorded trace.
// Throws EmptyTrace when no step has been recorded.
Tridiagonal extract_tridiagonal(const IterationTrace& trace);

// Residual of q_{k+1}.q_{k+1} = -theta_k q_{k+1}.H q_k, returned as
// |q_{k+1}.q_{k+1} + theta_k q_{k+1}.H q_k| / (1 + q_{k+1}.q_{k+1}).
double check_qq_identity(const LanczosTriple& t_next, const LanczosTriple& t,
                         const SymmetricOperator& H, double theta);

// Stateful driver around next_triple. Owns the last two triples and the
// trace; optionally re-projects each new triple against the full stored
// history (the correction is applied to q, y and delta together so the
// defining identity is preserved exactly).
class TripleGenerator {
 public:
  TripleGenerator(const SymmetricOperator& H, const Vector& c,
                  ScalingStrategy strategy, bool reorthogonalize = false);

  const LanczosTriple& current() const { return current_; }
  const std::optional<LanczosTriple>& previous() const { return previous_; }
  const IterationTrace& trace() const { return trace_; }
  double current_qq() const { return current_qq_; }

  // Generates triple k+1 and makes it current. Returns the new triple.
  const LanczosTriple& advance();

 private:
  const SymmetricOperator& H_;
  Vector c_;
  ScalingStrategy strategy_;
  bool reorthogonalize_;
  LanczosTriple current_;
  std::optional<LanczosTriple> previous_;
  double current_qq_ = 0.0;
  IterationTrace trace_;
  std::vector<LanczosTriple> history_;
  std::vector<double> history_qq_;
};

}  // namespace unkry
