#pragma once

// Online algorithms for the 1-B knapsack secretary problem. Each consumes an
// instance and an arrival order (plus an RNG stream where the algorithm is
// randomized) and reports what it packed, in acceptance order.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ksec/core.hpp"

namespace ksec {

struct PackedItem {
  int id = 0;
  int position = 0;    // 1-based acceptance position
  bool dummy = false;  // occupies one unit of capacity, contributes no value
};

struct SelectionOutcome {
  std::vector<PackedItem> packed;
  double totalValue = 0.0;
  std::optional<double> referenceValue;  // best sample value v*, when the algorithm has one

  bool contains(int id) const;
  /// Capacity consumed; dummy picks count as size 1.
  int used_capacity(const Instance& instance) const;
};

class BoostingConfig {
 public:
  explicit BoostingConfig(double alpha = 1.0, double sampleFraction = kInvE);

  double alpha() const { return alpha_; }
  double sample_fraction() const { return sampleFraction_; }

 private:
  double alpha_;
  double sampleFraction_;
};

/// floor(c * n), guarded against c*n landing one ulp below an integer.
int sample_length(int n, double c);

/// Rejects the first floor(cn) arrivals, then packs every item whose value
/// beats the best sampled value and still fits.
SelectionOutcome extended_secretary(const Instance& instance, const ArrivalOrder& order, double c);

/// Same control flow, but comparisons (including v*) use alpha * v for small
/// items. The reported value is unboosted.
SelectionOutcome boosted_extended_secretary(const Instance& instance, const ArrivalOrder& order,
                                            const BoostingConfig& config);

/// Allocation-light entry point shared by the enumerator and the Monte Carlo driver.
SelectionOutcome run_extended_secretary(const Instance& instance, std::span<const int> order, double c,
                                        double alpha);

/// Classic secretary rule over raw values in arrival order; returns the
/// arrival index of the pick, if any.
std::optional<std::size_t> classic_secretary(std::span<const double> values, double c = kInvE);

/// Classic secretary over an instance, ignoring sizes. The pick always fits.
SelectionOutcome classic_secretary(const Instance& instance, std::span<const int> order, double c = kInvE);

/// Kleinberg's recursive k-secretary algorithm. Returns arrival indices of
/// the accepted items, at most k of them.
std::vector<std::size_t> kleinberg_k_secretary(std::span<const double> values, int k, Rng& rng);

/// Ordinal algorithm for 1-B instances: with probability e/(e+1) the classic
/// secretary over all items, otherwise Kleinberg with k = B after replacing
/// large items by value-0 small dummies.
SelectionOutcome mixed_ordinal_1B(const Instance& instance, const ArrivalOrder& order, Rng& rng);
SelectionOutcome mixed_ordinal_1B(const Instance& instance, std::span<const int> order, Rng& rng);

}  // namespace ksec
