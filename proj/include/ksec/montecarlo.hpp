#pragma once

// Seeded Monte Carlo estimates of competitive ratios and per-item selection
// probabilities. Results depend only on (algorithm, instance, trials, seed).

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "ksec/core.hpp"

namespace ksec {

enum class AlgorithmKind { Extended, Boosted, Classic, MixedOrdinal };

std::string_view to_string(AlgorithmKind kind);
AlgorithmKind parse_algorithm_kind(std::string_view name);

struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::Extended;
  double c = kInvE;
  double alpha = 1.0;  // Boosted only
};

struct EstimateReport {
  AlgorithmSpec spec;
  long trials = 0;
  double meanRatio = 0.0;
  double stdError = 0.0;
  std::map<int, double> perItemProb;         // item id -> fraction of trials it was packed
  std::map<int, std::uint64_t> perItemCount;
  std::uint64_t seed = 0;
};

/// Trials run in fixed chunks so the report is the same for any worker count;
/// workers <= 0 uses every hardware thread.
EstimateReport estimate(const AlgorithmSpec& spec, const Instance& instance, long trials, std::uint64_t seed,
                        int workers = 0);

struct SweepRow {
  double alpha = 1.0;
  EstimateReport report;
};

/// Boosted extended secretary at c = 1/e over an alpha grid, rebuilding the
/// instance of `kind` (B = 2) against each alpha.
std::vector<SweepRow> sweep_alpha(InstanceKind kind, const std::vector<double>& alphas, int n, long trials,
                                  std::uint64_t seed, double epsilon = 1e-3, int workers = 0);

}  // namespace ksec
