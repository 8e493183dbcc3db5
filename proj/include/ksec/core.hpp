#pragma once

// Problem instances of the 1-B knapsack secretary problem: items ranked by
// value, rank maps over the small items, arrival orders and the offline
// optimum.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ksec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kE = 2.718281828459045235360287471352662498;
inline constexpr double kInvE = 1.0 / kE;

struct Item {
  int id = 0;  // 1-based global rank
  double value = 0.0;
  int size = 1;
  bool dummy = false;
};

struct ItemSpec {
  double value = 0.0;
  int size = 1;
  bool dummy = false;
};

struct RankMaps {
  std::vector<int> smallRank;         // indexed by item id; 0 for large items and dummies
  std::vector<int> smallRankInverse;  // indexed by small rank a (1-based); entry 0 unused

  int small_count() const { return static_cast<int>(smallRankInverse.size()) - 1; }
};

/// Items sorted strictly decreasing by value, so an item's id is its global
/// rank. Dummy items (value 0, size 1) sort last, in insertion order, and are
/// ignored by rank maps and by the offline optimum.
class Instance {
 public:
  Instance() = default;
  Instance(int capacity, std::vector<ItemSpec> items);

  int capacity() const { return capacity_; }
  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  std::span<const Item> items() const { return items_; }
  const Item& item(int id) const { return items_.at(static_cast<std::size_t>(id - 1)); }

  bool is_small(int id) const { return item(id).size == 1; }
  bool is_large(int id) const { return item(id).size == capacity_; }
  /// True iff every item has size 1 or B.
  bool is_one_b() const;
  int dummy_count() const;

  const RankMaps& rank_maps() const { return ranks_; }

  /// Copy of this instance with `count` value-0 small dummy items appended.
  Instance with_dummies(int count) const;

 private:
  int capacity_ = 2;
  std::vector<Item> items_;
  RankMaps ranks_;
};

struct Packing {
  std::vector<int> ids;
  double value = 0.0;
};

/// Offline optimum of a 1-B instance: the better of the most valuable large
/// item and the top min(B, |small|) small items.
Packing optimal_packing(const Instance& instance);

enum class InstanceKind {
  I1,
  I2,
  BoostTightUpper,
  BoostTightTheta15,
  OrdinalPairSmallOpt,
  OrdinalPairLargeOpt,
  UniformRandom,
};

std::string_view to_string(InstanceKind kind);
InstanceKind parse_instance_kind(std::string_view name);

struct InstanceParams {
  InstanceKind kind = InstanceKind::UniformRandom;
  int n = 0;
  int capacity = 2;
  double epsilon = 1e-3;
  double alpha = 1.0;       // boosting factor the boost-tight kinds are built against
  std::uint64_t seed = 0;   // UniformRandom only
};

Instance make_instance(const InstanceParams& params);

struct ArrivalOrder {
  std::vector<int> positions;  // positions[t] = id of the item arriving in round t+1
  std::optional<std::uint64_t> seed;

  int size() const { return static_cast<int>(positions.size()); }

  /// Validates that `ids` is a permutation of 1..n.
  static ArrivalOrder from_ids(std::vector<int> ids);
};

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);
/// Seed of the independent stream `stream` of trial `trial` under master `seed`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream);

/// Uniformly random permutation of 1..n, deterministic in (n, seed).
ArrivalOrder sample_order(int n, std::uint64_t seed);
/// In-place variant over a caller-owned buffer of size n.
void fill_order(std::span<int> positions, std::uint64_t seed);

}  // namespace ksec
