#pragma once

// Factor-revealing LP of the batched ordinal model: the primal over
// (c, p_1..p_k, q_1..q_k), a dense simplex solver, and the closed-form dual
// solution used as an impossibility certificate.

#include <cstddef>
#include <optional>
#include <vector>

namespace ksec {

/// max objective.x  s.t.  A x <= b, x >= 0, with A dense row-major.
struct LpModel {
  int k = 0;  // batches; 0 for a hand-built model
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> A;
  std::vector<double> b;
  std::vector<double> objective;

  double& at(std::size_t r, std::size_t c) { return A[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return A[r * cols + c]; }
};

inline constexpr int kSolverBatchCap = 5000;
inline constexpr long kPivotCap = 1'000'000;

/// Column 0 is c, columns 1..k are p_i, columns k+1..2k are q_i. Rows: the two
/// c-bounds, then k p-constraints, then k q-constraints.
LpModel build_primal(int k);

struct LpSolution {
  double optimum = 0.0;
  std::vector<double> vertex;
  long pivots = 0;
};

/// Dense simplex with Bland's rule. Needs b >= 0 so the origin is feasible.
/// Throws "solver stalled" past kPivotCap pivots and "unbounded" when the
/// objective has no upper bound.
LpSolution solve(const LpModel& model);

struct DualCertificate {
  int k = 0;
  int tau = 0;
  std::vector<double> x;  // x[i-1] is the multiplier of the i-th p-constraint
  std::vector<double> y;
  double dualAlpha = 0.0;
  double dualBeta = 0.0;
  double scale = 1.0;
};

/// Harmonic bracketing index: sum_{i=tau}^{k-1} 1/i < 1 <= sum_{i=tau-1}^{k-1} 1/i.
int harmonic_tau(int k);

/// Largest relative shortfall over the 2k+1 dual constraints when x is scaled
/// by s; <= 0 means feasible.
double dual_violation(const DualCertificate& cert, double s);

/// k >= 2; scale is the smallest s in [1, 2] (to 1e-9) that makes the
/// certificate feasible.
DualCertificate dual_certificate(int k);

/// sum_i (scale * x_i + y_i)
double dual_objective(const DualCertificate& cert);

struct ConvergenceRow {
  int k = 0;
  std::optional<double> primalOpt;  // absent above kSolverBatchCap
  double dualObj = 0.0;
  double scale = 1.0;
  int tau = 0;
};

std::vector<ConvergenceRow> convergence_report(const std::vector<int>& kList);

}  // namespace ksec
