#pragma once

// Selection probabilities of the extended secretary algorithm: the n -> infinity
// closed forms, and an exact finite-n oracle that runs the algorithm on every
// arrival order and counts events over the common denominator n!.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksec/core.hpp"

namespace ksec {

/// Probability that the item of (boosted) rank i is the first acceptance, in
/// the n -> infinity limit.
double p_closed_form(int i, double c);

/// Probability that item i is packed at all when B = 2, in the limit. Pass the
/// small rank for small items, and the global rank of the second most valuable
/// small item if one exists.
double P_closed_form_B2(int i, bool isSmall, std::optional<int> smallRank, std::optional<int> secondSmallGlobalRank,
                        double c);

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Fraction reduced() const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  friend bool operator==(const Fraction& a, const Fraction& b) {
    // Cross-multiplication stays well inside 64 bits for denominators up to 9!.
    return static_cast<unsigned __int128>(a.num) * b.den == static_cast<unsigned __int128>(b.num) * a.den;
  }
};

inline constexpr int kEnumerationCap = 9;

class ProbabilityTable {
 public:
  ProbabilityTable(int n, int capacity, int sampleLength, double alpha);

  int n() const { return n_; }
  int capacity() const { return capacity_; }
  int sample_length() const { return sampleLength_; }
  double alpha() const { return alpha_; }
  std::uint64_t order_count() const { return orders_; }

  /// Number of orders in which item i is packed as the j-th item.
  std::uint64_t packed_count(int i, int j) const { return packedAt_[index(i, j)]; }
  std::uint64_t total_count(int i) const;
  /// Number of orders in which small items i and j are packed x-th and y-th.
  std::uint64_t joint_count(int i, int j, int x, int y) const { return joint_[joint_index(i, j, x, y)]; }

  Fraction p(int i, int j) const { return {packed_count(i, j), orders_}; }
  Fraction P(int i) const { return {total_count(i), orders_}; }
  Fraction joint(int i, int j, int x, int y) const { return {joint_count(i, j, x, y), orders_}; }

  /// Adds the counts of another table over the same (n, B, sample) shape.
  void merge(const ProbabilityTable& other);

  // Used by the enumerator.
  void record_order() { ++orders_; }
  void record_packed(int i, int j) { ++packedAt_[index(i, j)]; }
  void record_joint(int i, int j, int x, int y) { ++joint_[joint_index(i, j, x, y)]; }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(capacity_) + static_cast<std::size_t>(j - 1);
  }
  std::size_t joint_index(int i, int j, int x, int y) const {
    const auto n = static_cast<std::size_t>(n_);
    const auto b = static_cast<std::size_t>(capacity_);
    return ((static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1)) * b +
            static_cast<std::size_t>(x - 1)) * b + static_cast<std::size_t>(y - 1);
  }

  int n_;
  int capacity_;
  int sampleLength_;
  double alpha_;
  std::uint64_t orders_ = 0;
  std::vector<std::uint64_t> packedAt_;
  std::vector<std::uint64_t> joint_;
};

/// Runs the (optionally boosted) extended secretary algorithm on all n! orders.
/// Throws "enumeration cap exceeded" for n > 9.
ProbabilityTable enumerate_exact(const Instance& instance, double c, std::optional<double> boostingAlpha = std::nullopt,
                                 int workers = 0);

struct IdentityViolation {
  std::string identity;
  std::vector<int> items;  // item ids, then positions where relevant
  Fraction lhs;
  Fraction rhs;
};

struct IdentityReport {
  int checked = 0;
  std::vector<IdentityViolation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks, as exact rational equalities, the structural identities that tie
/// P_i to first-acceptance probabilities, the joint-event lemmas, the B = 2
/// specialization, the finite-n sum rule and first-pick monotonicity.
IdentityReport structural_identity_check(const ProbabilityTable& table, const Instance& instance);

}  // namespace ksec
