#include "ksec/serialization.hpp"

#include <cstdio>
#include <iomanip>

namespace ksec {

std::string exact_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Json to_json(const Instance& instance) {
  Json items = Json::array();
  for (const Item& it : instance.items()) {
    Json j{{"id", it.id}, {"value", exact_real(it.value)}, {"size", it.size}};
    if (it.dummy) j["dummy"] = true;
    items.push_back(std::move(j));
  }
  return {{"capacity", instance.capacity()}, {"items", std::move(items)}};
}

Instance instance_from_json(const Json& json) {
  try {
    std::vector<ItemSpec> specs;
    for (const Json& j : json.at("items")) {
      const Json& v = j.at("value");
      const double value = v.is_string() ? std::stod(v.get<std::string>()) : v.get<double>();
      specs.push_back({value, j.at("size").get<int>(), j.value("dummy", false)});
    }
    return Instance(json.at("capacity").get<int>(), std::move(specs));
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed instance json: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(std::string("malformed instance value: ") + e.what());
  }
}

Json to_json(const SelectionOutcome& outcome) {
  Json packed = Json::array();
  for (const PackedItem& p : outcome.packed) {
    Json j{{"id", p.id}, {"pos", p.position}};
    if (p.dummy) j["dummy"] = true;
    packed.push_back(std::move(j));
  }
  Json out{{"packed", std::move(packed)}, {"totalValue", exact_real(outcome.totalValue)}};
  out["referenceValue"] = outcome.referenceValue ? Json(exact_real(*outcome.referenceValue)) : Json(nullptr);
  return out;
}

Json to_json(const Fraction& fraction) {
  const Fraction r = fraction.reduced();
  return {{"num", std::to_string(r.num)}, {"den", std::to_string(r.den)}};
}

Json to_json(const ProbabilityTable& table) {
  Json items = Json::array();
  for (int i = 1; i <= table.n(); ++i) {
    Json byPosition = Json::array();
    for (int j = 1; j <= table.capacity(); ++j) byPosition.push_back(to_json(table.p(i, j)));
    items.push_back({{"id", i}, {"P", to_json(table.P(i))}, {"p", std::move(byPosition)}});
  }
  return {{"n", table.n()},
          {"capacity", table.capacity()},
          {"sampleLength", table.sample_length()},
          {"alpha", exact_real(table.alpha())},
          {"orders", std::to_string(table.order_count())},
          {"items", std::move(items)}};
}

Json to_json(const EstimateReport& report) {
  Json items = Json::array();
  for (const auto& [id, count] : report.perItemCount)
    items.push_back({{"id", id}, {"prob", report.perItemProb.at(id)}, {"count", count}});
  return {{"algorithm", std::string(to_string(report.spec.kind))},
          {"c", report.spec.c},
          {"alpha", report.spec.alpha},
          {"trials", report.trials},
          {"seed", report.seed},
          {"meanRatio", report.meanRatio},
          {"stdError", report.stdError},
          {"items", std::move(items)}};
}

Json to_json(const LpSolution& solution) {
  return {{"optimum", solution.optimum}, {"pivots", solution.pivots}, {"vertex", solution.vertex}};
}

Json to_json(const IdentityReport& report) {
  Json violations = Json::array();
  for (const IdentityViolation& v : report.violations)
    violations.push_back(
        {{"identity", v.identity}, {"items", v.items}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}});
  return {{"checked", report.checked}, {"ok", report.ok()}, {"violations", std::move(violations)}};
}

void write_estimate_csv(std::ostream& os, const EstimateReport& report) {
  const auto old = os.precision(12);
  os << "algorithm,trials,mean_ratio,std_error,seed\n"
     << to_string(report.spec.kind) << ',' << report.trials << ',' << report.meanRatio << ',' << report.stdError << ','
     << report.seed << '\n';
  os << "item,prob,count\n";
  for (const auto& [id, count] : report.perItemCount) os << id << ',' << report.perItemProb.at(id) << ',' << count << '\n';
  os.precision(old);
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  const auto old = os.precision(12);
  os << "alpha,trials,mean_ratio,std_error,seed\n";
  for (const SweepRow& row : rows)
    os << row.alpha << ',' << row.report.trials << ',' << row.report.meanRatio << ',' << row.report.stdError << ','
       << row.report.seed << '\n';
  os.precision(old);
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  const auto old = os.precision(12);
  os << "k,primal,dual,scale,tau\n";
  for (const ConvergenceRow& row : rows) {
    os << row.k << ',';
    if (row.primalOpt) os << *row.primalOpt;
    os << ',' << row.dualObj << ',' << row.scale << ',' << row.tau << '\n';
  }
  os.precision(old);
}

}  // namespace ksec
