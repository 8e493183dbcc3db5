#include "ksec/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "ksec/core.hpp"
#include "ksec/kernels.hpp"

namespace ksec {

LpModel build_primal(int k) {
  if (k < 1) throw Error("k must be at least 1");
  if (k > kSolverBatchCap) throw Error("k exceeds the solver cap");
  LpModel m;
  m.k = k;
  m.cols = static_cast<std::size_t>(2 * k + 1);
  m.rows = static_cast<std::size_t>(2 * k + 2);
  m.A.assign(m.rows * m.cols, 0.0);
  m.b.assign(m.rows, 1.0);
  m.objective.assign(m.cols, 0.0);
  m.objective[0] = 1.0;

  const auto K = static_cast<std::size_t>(k);
  const double kd = k;
  m.b[0] = m.b[1] = 0.0;
  m.at(0, 0) = m.at(1, 0) = 1.0;
  for (std::size_t i = 1; i <= K; ++i) {
    m.at(0, i) = -static_cast<double>(i) / kd;
    m.at(1, K + i) = -(1.0 - static_cast<double>(i - 1) / kd);
  }
  for (std::size_t i = 1; i <= K; ++i) {
    const std::size_t pRow = 1 + i;
    const std::size_t qRow = 1 + K + i;
    m.at(pRow, i) = static_cast<double>(i);
    m.at(qRow, K + i) = 1.0;
    for (std::size_t j = 1; j < i; ++j) {
      m.at(pRow, j) = m.at(pRow, K + j) = 1.0;
      m.at(qRow, j) = m.at(qRow, K + j) = 1.0;
    }
  }
  return m;
}

LpSolution solve(const LpModel& model) {
  const std::size_t m = model.rows;
  const std::size_t n = model.cols;
  if (model.A.size() != m * n || model.b.size() != m || model.objective.size() != n)
    throw Error("malformed model");
  for (double bi : model.b)
    if (!(bi >= 0.0)) throw Error("right-hand side must be nonnegative");

  constexpr double kEps = 1e-11;
  const std::size_t width = n + 1;  // column 0 holds the right-hand side

  // Dictionary: basic_r = T[r][0] - sum_j T[r][j] * nonbasic_j,
  //             z = -Z[0] + sum_j Z[j] * nonbasic_j.
  std::vector<double> T(m * width);
  std::vector<double> Z(width, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    T[r * width] = model.b[r];
    std::copy_n(model.A.begin() + static_cast<std::ptrdiff_t>(r * n), n, T.begin() + static_cast<std::ptrdiff_t>(r * width + 1));
  }
  std::copy(model.objective.begin(), model.objective.end(), Z.begin() + 1);

  // Variable labels: 0..n-1 structural, n..n+m-1 slack.
  std::vector<std::size_t> basic(m);
  std::vector<std::size_t> nonbasic(width);
  for (std::size_t r = 0; r < m; ++r) basic[r] = n + r;
  for (std::size_t j = 1; j <= n; ++j) nonbasic[j] = j - 1;

  auto row = [&](std::size_t r) { return std::span<double>(T.data() + r * width, width); };

  LpSolution sol;
  for (;;) {
    std::size_t enter = 0;
    for (std::size_t j = 1; j <= n; ++j)
      if (Z[j] > kEps && (enter == 0 || nonbasic[j] < nonbasic[enter])) enter = j;
    if (enter == 0) break;

    std::size_t leave = m;
    double bestRatio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      const double a = T[r * width + enter];
      if (a <= kEps) continue;
      const double ratio = T[r * width] / a;
      const bool tie = leave < m && std::abs(ratio - bestRatio) <= 1e-14;
      if (tie ? basic[r] < basic[leave] : ratio < bestRatio) {
        bestRatio = std::min(ratio, bestRatio);
        leave = r;
      }
    }
    if (leave == m) throw Error("unbounded");
    if (++sol.pivots > kPivotCap) throw Error("solver stalled");

    std::span<double> pivotRow = row(leave);
    const double pivot = pivotRow[enter];
    const double inv = 1.0 / pivot;
    pivotRow[enter] = 1.0;
    for (double& v : pivotRow) v *= inv;

    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave) continue;
      std::span<double> target = row(r);
      const double f = target[enter];
      if (f == 0.0) continue;
      target[enter] = 0.0;
      kernels::axpy(-f, pivotRow, target);
    }
    const double f = Z[enter];
    Z[enter] = 0.0;
    kernels::axpy(-f, pivotRow, Z);
    std::swap(basic[leave], nonbasic[enter]);
  }

  sol.optimum = -Z[0];
  sol.vertex.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (basic[r] < n) sol.vertex[basic[r]] = T[r * width];
  return sol;
}

int harmonic_tau(int k) {
  if (k < 2) throw Error("k must be at least 2");
  double tail = 0.0;
  int tau = k;
  while (tau > 1 && tail + 1.0 / (tau - 1) < 1.0) {
    tail += 1.0 / (tau - 1);
    --tau;
  }
  return tau;
}

double dual_violation(const DualCertificate& cert, double s) {
  const int k = cert.k;
  double worst = 1.0 - (cert.dualAlpha + cert.dualBeta);
  double suffix = 0.0;  // sum_{j>i} (s x_j + y_j)
  for (int i = k; i >= 1; --i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    const double pNeed = static_cast<double>(i) / k * cert.dualAlpha;
    const double qNeed = (1.0 - static_cast<double>(i - 1) / k) * cert.dualBeta;
    const double pHave = i * s * cert.x[idx] + suffix;
    const double qHave = cert.y[idx] + suffix;
    worst = std::max(worst, (pNeed - pHave) / pNeed);
    worst = std::max(worst, (qNeed - qHave) / qNeed);
    suffix += s * cert.x[idx] + cert.y[idx];
  }
  return worst;
}

DualCertificate dual_certificate(int k) {
  if (k < 2) throw Error("k must be at least 2");
  DualCertificate cert;
  cert.k = k;
  cert.tau = harmonic_tau(k);
  cert.dualAlpha = kE / (kE + 1.0);
  cert.dualBeta = 1.0 - cert.dualAlpha;
  cert.x.assign(static_cast<std::size_t>(k), 0.0);
  cert.y.assign(static_cast<std::size_t>(k), 0.0);
  cert.y.back() = 1.0 / ((kE + 1.0) * k);

  double tail = 0.0;  // sum_{j=i}^{k-1} 1/j
  for (int i = k; i >= cert.tau; --i) {
    if (i < k) tail += 1.0 / i;
    cert.x[static_cast<std::size_t>(i - 1)] = kE / ((kE + 1.0) * k) * (1.0 - tail);
  }

  // Rounding alone can leave a constraint short by a few ulps.
  constexpr double kFeasible = 1e-9;
  if (dual_violation(cert, 1.0) <= kFeasible) return cert;
  double lo = 1.0;
  double hi = 2.0;
  if (dual_violation(cert, hi) > kFeasible) throw Error("certificate infeasible even at scale 2");
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (dual_violation(cert, mid) <= kFeasible ? hi : lo) = mid;
  }
  cert.scale = hi;
  return cert;
}

double dual_objective(const DualCertificate& cert) {
  double sum = 0.0;
  for (std::size_t i = 0; i < cert.x.size(); ++i) sum += cert.scale * cert.x[i] + cert.y[i];
  return sum;
}

std::vector<ConvergenceRow> convergence_report(const std::vector<int>& kList) {
  std::vector<ConvergenceRow> rows;
  for (int k : kList) {
    ConvergenceRow row;
    row.k = k;
    if (k <= kSolverBatchCap) row.primalOpt = solve(build_primal(k)).optimum;
    if (k >= 2) {
      const DualCertificate cert = dual_certificate(k);
      row.dualObj = dual_objective(cert);
      row.scale = cert.scale;
      row.tau = cert.tau;
    } else {
      // k = 1: p_1 <= 1 alone bounds c, so the optimum is its own certificate.
      row.dualObj = 1.0;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ksec
