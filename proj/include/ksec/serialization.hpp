#pragma once

// JSON and CSV forms of instances, outcomes, probability tables, Monte Carlo
// reports and LP results. Reals that must round-trip are written as %.17g
// strings; probabilities in tables are exact {num, den} pairs.

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "ksec/algorithms.hpp"
#include "ksec/core.hpp"
#include "ksec/lp.hpp"
#include "ksec/montecarlo.hpp"
#include "ksec/probability.hpp"

namespace ksec {

using Json = nlohmann::ordered_json;

std::string exact_real(double value);

Json to_json(const Instance& instance);
Instance instance_from_json(const Json& json);

Json to_json(const SelectionOutcome& outcome);
Json to_json(const Fraction& fraction);
Json to_json(const ProbabilityTable& table);
Json to_json(const EstimateReport& report);
Json to_json(const LpSolution& solution);
Json to_json(const IdentityReport& report);

/// Header trials,mean_ratio,std_error,seed then one item,prob,count block.
void write_estimate_csv(std::ostream& os, const EstimateReport& report);
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
/// Header k,primal,dual,scale,tau; an absent primal is left empty.
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

}  // namespace ksec
