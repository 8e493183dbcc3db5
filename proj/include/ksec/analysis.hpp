#pragma once

// Scalar bounds for the 1-2 knapsack secretary analysis, all evaluated on the
// n -> infinity first-acceptance probabilities from p_closed_form.

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ksec {

struct BoundReport {
  std::string name;
  double value = 0.0;
  std::map<std::string, double> inputs;
  std::optional<double> paperTarget;
  double tolerance = 0.0;

  double abs_error() const;
  /// True when no target is attached or the value is within tolerance of it.
  bool pass() const;
};

struct CrossingPoint {
  double c = 0.0;
  double value = 0.0;
};

/// Maximizer of min{c ln(1/c), (1-c)/2} over (0, 1), found by bisection on
/// the crossing of the two branches.
CrossingPoint no_boost_upper_bound();
double no_boost_min_objective(double c);

/// (2/e - p_j - 3 p_k) / (sum_{i<k} p_i - p_j) at c = 1/e; 1 <= j < k, k >= 3.
double theta_jk(int j, int k);
/// (1/e - 3 p_k) / sum_{i=2}^{k-1} p_i at c = 1/e; k >= 3.
double theta_upper_bound_column(int k);
/// theta_{1,5} as a rational expression in e.
double theta_15_closed_form();

struct AlphaInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double alpha) const { return alpha >= lo && alpha <= hi; }
};
AlphaInterval alpha_interval();

struct BoostingCaseBounds {
  double lambdaX = 0.0;
  double lambdaY = 0.0;
  double ratioLowerBound = 0.0;  // (lambdaX + lambdaY) / 2
  double expanded = 0.0;         // (1/2)((1-alpha) p_j + 3 p_k + alpha sum_{i<k} p_i)
};
/// Two-small-item optimum with boosted ranks j < k.
BoostingCaseBounds boosting_case_bounds(int j, int k, double alpha);

/// p_1 / alpha + p_2 at c = 1/e: the single-item optimum overtaken by a boosted small item.
double single_item_case_bound(double alpha);

/// theta_y = (1/2) sum_{i<=y} p_i + p_y at sample fraction c; y >= 2.
double theta_y_noboost(int y, double c);
/// min(p_1, theta_2..theta_7, theta_7 - p_7) at sample fraction c.
double noboost_ratio(double c);

struct ReproductionRow {
  std::string name;
  int index = 0;  // k or y
  BoundReport report;
};

/// Column bound for k = 3..10 against the published table (tolerance 5e-4).
std::vector<ReproductionRow> reproduce_table1();
/// theta_y for y = 2..7 at c = 0.26888, then the final ratio theta_7 - p_7.
std::vector<ReproductionRow> reproduce_appendix();

/// CSV with header name,k_or_y,computed,paper_value,abs_err,pass.
void write_reproduction_csv(std::ostream& os, const std::vector<ReproductionRow>& rows);

}  // namespace ksec
