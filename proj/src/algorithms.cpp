#include "ksec/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "ksec/kernels.hpp"

namespace ksec {

bool SelectionOutcome::contains(int id) const {
  return std::any_of(packed.begin(), packed.end(), [id](const PackedItem& p) { return p.id == id && !p.dummy; });
}

int SelectionOutcome::used_capacity(const Instance& instance) const {
  int used = 0;
  for (const PackedItem& p : packed) used += p.dummy ? 1 : instance.item(p.id).size;
  return used;
}

BoostingConfig::BoostingConfig(double alpha, double sampleFraction) : alpha_(alpha), sampleFraction_(sampleFraction) {
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) throw Error("boosting factor must be at least 1");
  if (!(sampleFraction > 0.0 && sampleFraction < 1.0)) throw Error("sample fraction must lie in (0, 1)");
}

int sample_length(int n, double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw Error("sample fraction must lie in [0, 1]");
  const int s = static_cast<int>(std::floor(c * n + 1e-9));
  return std::clamp(s, 0, n);
}

SelectionOutcome run_extended_secretary(const Instance& instance, std::span<const int> order, double c,
                                        double alpha) {
  const int n = static_cast<int>(order.size());
  const int sample = sample_length(n, c);
  auto key = [&](const Item& it) { return it.size == 1 ? alpha * it.value : it.value; };

  thread_local std::vector<double> sampled;
  sampled.resize(static_cast<std::size_t>(sample));
  for (int t = 0; t < sample; ++t) sampled[static_cast<std::size_t>(t)] = key(instance.item(order[t]));
  const double reference = kernels::max_value(sampled);

  SelectionOutcome out;
  if (sample > 0) out.referenceValue = reference;
  int remaining = instance.capacity();
  for (int t = sample; t < n && remaining > 0; ++t) {
    const Item& it = instance.item(order[t]);
    if (it.dummy || it.size > remaining || !(key(it) > reference)) continue;
    out.packed.push_back({it.id, static_cast<int>(out.packed.size()) + 1, false});
    out.totalValue += it.value;
    remaining -= it.size;
  }
  return out;
}

SelectionOutcome extended_secretary(const Instance& instance, const ArrivalOrder& order, double c) {
  if (order.size() != instance.size()) throw Error("arrival order does not match instance size");
  return run_extended_secretary(instance, order.positions, c, 1.0);
}

SelectionOutcome boosted_extended_secretary(const Instance& instance, const ArrivalOrder& order,
                                            const BoostingConfig& config) {
  if (order.size() != instance.size()) throw Error("arrival order does not match instance size");
  return run_extended_secretary(instance, order.positions, config.sample_fraction(), config.alpha());
}

namespace {

// Ordinal key: real items compare by value and beat every dummy; among
// dummies the earlier arrival ranks higher.
struct OrdinalKey {
  bool dummy;
  double value;
  std::size_t arrival;

  friend bool operator>(const OrdinalKey& a, const OrdinalKey& b) {
    if (a.dummy != b.dummy) return b.dummy;
    if (a.dummy) return a.arrival < b.arrival;
    return a.value > b.value;
  }
};

template <class Key>
std::optional<std::size_t> classic_on_keys(std::span<const Key> keys, double c) {
  const std::size_t n = keys.size();
  const auto sample = static_cast<std::size_t>(sample_length(static_cast<int>(n), c));
  if (sample == n) return std::nullopt;
  if (sample == 0) return std::size_t{0};
  std::size_t best = 0;
  for (std::size_t t = 1; t < sample; ++t)
    if (keys[t] > keys[best]) best = t;
  for (std::size_t t = sample; t < n; ++t)
    if (keys[t] > keys[best]) return t;
  return std::nullopt;
}

std::size_t fair_binomial(std::size_t n, Rng& rng) {
  std::size_t count = 0;
  for (std::size_t drawn = 0; drawn < n; drawn += 64) {
    std::uint64_t bits = rng();
    const std::size_t take = std::min<std::size_t>(64, n - drawn);
    if (take < 64) bits &= (std::uint64_t{1} << take) - 1;
    count += static_cast<std::size_t>(std::popcount(bits));
  }
  return count;
}

template <class Key>
void kleinberg_rec(std::span<const Key> keys, int k, Rng& rng, std::size_t offset, std::vector<std::size_t>& picks) {
  const std::size_t n = keys.size();
  if (n == 0) return;
  if (static_cast<std::size_t>(k) >= n) {
    for (std::size_t t = 0; t < n; ++t) picks.push_back(offset + t);
    return;
  }
  if (k == 1) {
    if (auto t = classic_on_keys(keys, kInvE)) picks.push_back(offset + *t);
    return;
  }

  const std::size_t m = fair_binomial(n, rng);
  const std::size_t before = picks.size();
  const int half = k / 2;
  kleinberg_rec(keys.first(m), half, rng, offset, picks);

  std::optional<Key> threshold;
  if (m >= static_cast<std::size_t>(half)) {
    std::vector<Key> head(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(m));
    std::nth_element(head.begin(), head.begin() + (half - 1), head.end(),
                     [](const Key& a, const Key& b) { return a > b; });
    threshold = head[static_cast<std::size_t>(half - 1)];
  }
  for (std::size_t t = m; t < n; ++t) {
    if (picks.size() - before >= static_cast<std::size_t>(k)) break;
    if (!threshold || keys[t] > *threshold) picks.push_back(offset + t);
  }
}

}  // namespace

std::optional<std::size_t> classic_secretary(std::span<const double> values, double c) {
  return classic_on_keys(values, c);
}

SelectionOutcome classic_secretary(const Instance& instance, std::span<const int> order, double c) {
  thread_local std::vector<OrdinalKey> keys;
  keys.clear();
  for (std::size_t t = 0; t < order.size(); ++t) {
    const Item& it = instance.item(order[t]);
    keys.push_back({it.dummy, it.value, t});
  }
  SelectionOutcome out;
  if (auto t = classic_on_keys<OrdinalKey>(keys, c)) {
    const Item& it = instance.item(order[*t]);
    out.packed.push_back({it.id, 1, it.dummy});
    out.totalValue = it.value;
  }
  return out;
}

std::vector<std::size_t> kleinberg_k_secretary(std::span<const double> values, int k, Rng& rng) {
  if (k < 1) throw Error("k must be at least 1");
  std::vector<std::size_t> picks;
  kleinberg_rec(values, k, rng, 0, picks);
  return picks;
}

SelectionOutcome mixed_ordinal_1B(const Instance& instance, std::span<const int> order, Rng& rng) {
  if (!instance.is_one_b()) throw Error("not a 1-B instance");
  if (static_cast<int>(order.size()) != instance.size()) throw Error("arrival order does not match instance size");

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < kE / (kE + 1.0)) return classic_secretary(instance, order, kInvE);

  std::vector<OrdinalKey> keys;
  keys.reserve(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) {
    const Item& it = instance.item(order[t]);
    const bool dummy = it.dummy || it.size != 1;
    keys.push_back({dummy, dummy ? 0.0 : it.value, t});
  }
  std::vector<std::size_t> picks;
  kleinberg_rec<OrdinalKey>(keys, instance.capacity(), rng, 0, picks);

  SelectionOutcome out;
  for (std::size_t t : picks) {
    const Item& it = instance.item(order[t]);
    const bool dummy = keys[t].dummy;
    out.packed.push_back({it.id, static_cast<int>(out.packed.size()) + 1, dummy});
    if (!dummy) out.totalValue += it.value;
  }
  return out;
}

SelectionOutcome mixed_ordinal_1B(const Instance& instance, const ArrivalOrder& order, Rng& rng) {
  return mixed_ordinal_1B(instance, std::span<const int>(order.positions), rng);
}

}  // namespace ksec
