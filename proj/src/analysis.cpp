#include "ksec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>

#include "ksec/core.hpp"
#include "ksec/probability.hpp"

namespace ksec {

double BoundReport::abs_error() const {
  return paperTarget ? std::abs(value - *paperTarget) : 0.0;
}

bool BoundReport::pass() const { return !paperTarget || abs_error() <= tolerance; }

double no_boost_min_objective(double c) {
  return std::min(c * std::log(1.0 / c), (1.0 - c) / 2.0);
}

CrossingPoint no_boost_upper_bound() {
  // c ln(1/c) rises and (1-c)/2 falls on (0, 1/e]; their difference changes sign once.
  auto gap = [](double c) { return c * std::log(1.0 / c) - (1.0 - c) / 2.0; };
  double lo = 1e-9;
  double hi = kInvE;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) < 0.0 ? lo : hi) = mid;
  }
  const double c = 0.5 * (lo + hi);
  return {c, no_boost_min_objective(c)};
}

namespace {

double p(int i) { return p_closed_form(i, kInvE); }

double prefix_sum(int from, int to, double c) {
  double sum = 0.0;
  for (int i = from; i <= to; ++i) sum += p_closed_form(i, c);
  return sum;
}

}  // namespace

double theta_jk(int j, int k) {
  if (k < 3 || j < 1 || j >= k) throw Error("theta_jk needs 1 <= j < k and k >= 3");
  const double denominator = prefix_sum(1, k - 1, kInvE) - p(j);
  if (!(denominator > 0.0)) throw Error("theta_jk denominator is not positive");
  return (2.0 * kInvE - p(j) - 3.0 * p(k)) / denominator;
}

double theta_upper_bound_column(int k) {
  if (k < 3) throw Error("column bound needs k >= 3");
  return (kInvE - 3.0 * p(k)) / prefix_sum(2, k - 1, kInvE);
}

double theta_15_closed_form() {
  const double e = kE;
  return -51.0 / 16.0 + 9.0 / (4.0 * e) +
         (75.0 - 522.0 * e + 486.0 * e * e) / (16.0 - 96.0 * e + 288.0 * e * e - 64.0 * e * e * e);
}

AlphaInterval alpha_interval() { return {theta_15_closed_form(), kE / (kE - 1.0)}; }

BoostingCaseBounds boosting_case_bounds(int j, int k, double alpha) {
  if (j < 1 || j >= k) throw Error("boosting case needs 1 <= j < k");
  BoostingCaseBounds b;
  b.lambdaX = p(j) + p(k) + alpha * prefix_sum(1, j - 1, kInvE);
  b.lambdaY = 2.0 * p(k) + alpha * prefix_sum(j + 1, k - 1, kInvE);
  b.ratioLowerBound = 0.5 * (b.lambdaX + b.lambdaY);
  b.expanded = 0.5 * ((1.0 - alpha) * p(j) + 3.0 * p(k) + alpha * prefix_sum(1, k - 1, kInvE));
  return b;
}

double single_item_case_bound(double alpha) {
  if (!(alpha > 0.0)) throw Error("alpha must be positive");
  return p(1) / alpha + p(2);
}

double theta_y_noboost(int y, double c) {
  if (y < 2) throw Error("theta_y needs y >= 2");
  return 0.5 * prefix_sum(1, y, c) + p_closed_form(y, c);
}

double noboost_ratio(double c) {
  double ratio = p_closed_form(1, c);
  for (int y = 2; y <= 7; ++y) ratio = std::min(ratio, theta_y_noboost(y, c));
  return std::min(ratio, theta_y_noboost(7, c) - p_closed_form(7, c));
}

std::vector<ReproductionRow> reproduce_table1() {
  static constexpr double kPublished[] = {1.3475, 1.3962, 1.400382, 1.3988, 1.3968, 1.3952, 1.3941, 1.3934};
  std::vector<ReproductionRow> rows;
  for (int k = 3; k <= 10; ++k) {
    BoundReport r{"theta_column", theta_upper_bound_column(k), {{"k", k}, {"c", kInvE}}, kPublished[k - 3], 5e-4};
    rows.push_back({"table1", k, std::move(r)});
  }
  return rows;
}

std::vector<ReproductionRow> reproduce_appendix() {
  static constexpr double kC = 0.26888;
  static constexpr double kPublished[] = {0.4115, 0.3820, 0.3718, 0.3678, 0.3662, 0.3656};
  std::vector<ReproductionRow> rows;
  for (int y = 2; y <= 7; ++y) {
    BoundReport r{"theta_y", theta_y_noboost(y, kC), {{"y", y}, {"c", kC}}, kPublished[y - 2], 5e-4};
    rows.push_back({"theta_y", y, std::move(r)});
  }
  BoundReport final{"noboost_ratio", noboost_ratio(kC), {{"c", kC}}, 0.35317, 1e-4};
  rows.push_back({"noboost_ratio", 7, std::move(final)});
  return rows;
}

void write_reproduction_csv(std::ostream& os, const std::vector<ReproductionRow>& rows) {
  os << "name,k_or_y,computed,paper_value,abs_err,pass\n";
  const auto old = os.precision();
  os << std::setprecision(10);
  for (const ReproductionRow& row : rows) {
    os << row.name << ',' << row.index << ',' << row.report.value << ',';
    if (row.report.paperTarget) os << *row.report.paperTarget;
    os << ',' << row.report.abs_error() << ',' << (row.report.pass() ? "true" : "false") << '\n';
  }
  os.precision(old);
}

}  // namespace ksec
