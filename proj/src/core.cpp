#include "ksec/core.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <set>

namespace ksec {

Instance::Instance(int capacity, std::vector<ItemSpec> items) : capacity_(capacity) {
  if (capacity < 2) throw Error("capacity must be at least 2");
  for (const ItemSpec& spec : items) {
    if (spec.size < 1 || spec.size > capacity) throw Error("item size outside [1, capacity]");
    if (spec.dummy) {
      if (spec.value != 0.0 || spec.size != 1) throw Error("dummy items must be small with value 0");
    } else if (!(spec.value > 0.0) || !std::isfinite(spec.value)) {
      throw Error("item values must be positive and finite");
    }
  }
  std::stable_sort(items.begin(), items.end(), [](const ItemSpec& a, const ItemSpec& b) {
    if (a.dummy != b.dummy) return b.dummy;
    return !a.dummy && a.value > b.value;
  });

  items_.reserve(items.size());
  for (std::size_t k = 0; k < items.size(); ++k) {
    const ItemSpec& spec = items[k];
    if (k > 0 && !spec.dummy && spec.value == items[k - 1].value)
      throw Error("item values must be pairwise distinct");
    items_.push_back(Item{static_cast<int>(k) + 1, spec.value, spec.size, spec.dummy});
  }

  ranks_.smallRank.assign(items_.size() + 1, 0);
  ranks_.smallRankInverse.assign(1, 0);
  for (const Item& it : items_) {
    if (it.dummy || it.size != 1) continue;
    ranks_.smallRankInverse.push_back(it.id);
    ranks_.smallRank[static_cast<std::size_t>(it.id)] = ranks_.small_count();
  }
}

bool Instance::is_one_b() const {
  return std::all_of(items_.begin(), items_.end(),
                     [&](const Item& it) { return it.size == 1 || it.size == capacity_; });
}

int Instance::dummy_count() const {
  return static_cast<int>(std::count_if(items_.begin(), items_.end(), [](const Item& it) { return it.dummy; }));
}

Instance Instance::with_dummies(int count) const {
  if (count < 0) throw Error("dummy count must be non-negative");
  std::vector<ItemSpec> specs;
  specs.reserve(items_.size() + static_cast<std::size_t>(count));
  for (const Item& it : items_) specs.push_back({it.value, it.size, it.dummy});
  for (int k = 0; k < count; ++k) specs.push_back({0.0, 1, true});
  return Instance(capacity_, std::move(specs));
}

Packing optimal_packing(const Instance& instance) {
  if (!instance.is_one_b()) throw Error("not a 1-B instance");
  std::optional<int> bestLarge;
  std::vector<int> smalls;
  for (const Item& it : instance.items()) {
    if (it.dummy) continue;
    if (it.size == 1) {
      if (static_cast<int>(smalls.size()) < instance.capacity()) smalls.push_back(it.id);
    } else if (!bestLarge) {
      bestLarge = it.id;
    }
  }
  if (!bestLarge && smalls.empty()) throw Error("empty instance");

  Packing small;
  small.ids = smalls;
  for (int id : smalls) small.value += instance.item(id).value;
  if (bestLarge && instance.item(*bestLarge).value > small.value)
    return Packing{{*bestLarge}, instance.item(*bestLarge).value};
  return small;
}

std::string_view to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::I1: return "I1";
    case InstanceKind::I2: return "I2";
    case InstanceKind::BoostTightUpper: return "BoostTightUpper";
    case InstanceKind::BoostTightTheta15: return "BoostTightTheta15";
    case InstanceKind::OrdinalPairSmallOpt: return "OrdinalPairSmallOpt";
    case InstanceKind::OrdinalPairLargeOpt: return "OrdinalPairLargeOpt";
    case InstanceKind::UniformRandom: return "UniformRandom";
  }
  return "?";
}

InstanceKind parse_instance_kind(std::string_view name) {
  for (InstanceKind k : {InstanceKind::I1, InstanceKind::I2, InstanceKind::BoostTightUpper,
                         InstanceKind::BoostTightTheta15, InstanceKind::OrdinalPairSmallOpt,
                         InstanceKind::OrdinalPairLargeOpt, InstanceKind::UniformRandom})
    if (to_string(k) == name) return k;
  throw Error("unknown instance kind: " + std::string(name));
}

namespace {

[[noreturn]] void degenerate() { throw Error("degenerate epsilon"); }

// Adjacent values must stay separated by many ulps so the intended ranking
// survives arithmetic on them.
void check_separation(const std::vector<ItemSpec>& specs) {
  std::vector<double> values;
  for (const ItemSpec& s : specs)
    if (!s.dummy) values.push_back(s.value);
  std::sort(values.begin(), values.end(), std::greater<>());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!(values[k] >= DBL_MIN) || !std::isfinite(values[k])) degenerate();
    if (k + 1 < values.size() && values[k] - values[k + 1] < 1e3 * DBL_EPSILON * values[k]) degenerate();
  }
}

void require_n(bool ok, const char* what) {
  if (!ok) throw Error(what);
}

// Tail of O(epsilon) large items used by the boost-tight kinds.
void append_filler(std::vector<ItemSpec>& specs, int count, double epsilon, int capacity) {
  for (int t = 0; t < count; ++t)
    specs.push_back({epsilon * static_cast<double>(count - t) / static_cast<double>(count + 1), capacity, false});
}

}  // namespace

Instance make_instance(const InstanceParams& p) {
  const int n = p.n;
  const int B = p.capacity;
  const double eps = p.epsilon;
  if (B < 2) throw Error("capacity must be at least 2");
  if (p.kind != InstanceKind::UniformRandom && !(eps > 0.0 && eps < 1.0)) degenerate();
  if (!(p.alpha >= 1.0)) throw Error("alpha must be at least 1");

  std::vector<ItemSpec> specs;
  switch (p.kind) {
    case InstanceKind::I1: {
      require_n(n >= 2, "I1 needs n >= 2");
      specs.push_back({1.0, B, false});
      for (int i = 2; i <= n; ++i) specs.push_back({std::pow(eps, i), B, false});
      break;
    }
    case InstanceKind::I2: {
      require_n(n >= 3, "I2 needs n >= 3");
      for (int i = 1; i <= n; ++i) specs.push_back({1.0 + std::pow(eps, i), i <= n - 2 ? B : 1, false});
      break;
    }
    case InstanceKind::BoostTightUpper: {
      // Boosted values: a (small) = 1, b (large) = 1 - eps, the rest O(eps).
      require_n(n >= 3, "BoostTightUpper needs n >= 3");
      if (!(eps < 0.5)) degenerate();
      specs.push_back({1.0 / p.alpha, 1, false});
      specs.push_back({1.0 - eps, B, false});
      append_filler(specs, n - 2, eps, B);
      break;
    }
    case InstanceKind::BoostTightTheta15: {
      // Boosted order x > b2 > b3 > b4 > y, all 1 + O(eps); x, y small.
      require_n(n >= 6, "BoostTightTheta15 needs n >= 6");
      if (!(4.0 * eps < 0.5)) degenerate();
      specs.push_back({(1.0 + 4.0 * eps) / p.alpha, 1, false});
      specs.push_back({1.0 + 3.0 * eps, B, false});
      specs.push_back({1.0 + 2.0 * eps, B, false});
      specs.push_back({1.0 + 1.0 * eps, B, false});
      specs.push_back({1.0 / p.alpha, 1, false});
      append_filler(specs, n - 5, eps, B);
      break;
    }
    case InstanceKind::OrdinalPairSmallOpt:
    case InstanceKind::OrdinalPairLargeOpt: {
      require_n(n == 2 * B, "ordinal pair instances need n = 2B");
      if (!(1.0 - 2.0 * B * eps > 0.0)) degenerate();
      for (int i = 1; i <= B; ++i) specs.push_back({1.0 + (B - i) * eps, B, false});
      for (int i = B + 1; i <= 2 * B; ++i) specs.push_back({1.0 - i * eps, 1, false});
      if (p.kind == InstanceKind::OrdinalPairLargeOpt) specs.front().value = static_cast<double>(B) * B;
      break;
    }
    case InstanceKind::UniformRandom: {
      require_n(n >= 1, "UniformRandom needs n >= 1");
      Rng rng(p.seed);
      std::uniform_real_distribution<double> value(0.0, 1.0);
      std::bernoulli_distribution small(0.5);
      std::set<double> seen;
      while (static_cast<int>(specs.size()) < n) {
        const double v = value(rng);
        const bool isSmall = small(rng);
        if (v <= 0.0 || !seen.insert(v).second) continue;
        specs.push_back({v, isSmall ? 1 : B, false});
      }
      break;
    }
  }

  if (p.kind != InstanceKind::UniformRandom) check_separation(specs);
  Instance inst(B, std::move(specs));
  if (p.kind == InstanceKind::UniformRandom) return inst;

  switch (p.kind) {
    case InstanceKind::BoostTightUpper:
      // Boosted ranking must put a ahead of b ahead of the filler.
      if (!(1.0 - eps > eps)) degenerate();
      break;
    case InstanceKind::BoostTightTheta15: {
      // The two small items must form the optimum.
      const Packing opt = optimal_packing(inst);
      if (opt.ids.size() != 2 || !inst.is_small(opt.ids[0])) degenerate();
      break;
    }
    case InstanceKind::OrdinalPairSmallOpt:
    case InstanceKind::OrdinalPairLargeOpt: {
      const Packing opt = optimal_packing(inst);
      const bool wantLarge = p.kind == InstanceKind::OrdinalPairLargeOpt;
      if ((opt.ids.size() == 1) != wantLarge) degenerate();
      break;
    }
    default:
      break;
  }
  return inst;
}

ArrivalOrder ArrivalOrder::from_ids(std::vector<int> ids) {
  std::vector<bool> seen(ids.size() + 1, false);
  for (int id : ids) {
    if (id < 1 || id > static_cast<int>(ids.size()) || seen[static_cast<std::size_t>(id)])
      throw Error("arrival order is not a permutation of 1..n");
    seen[static_cast<std::size_t>(id)] = true;
  }
  return ArrivalOrder{std::move(ids), std::nullopt};
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
  return mix64(mix64(mix64(seed) ^ trial) ^ (stream * 0xd1b54a32d192ed03ULL));
}

void fill_order(std::span<int> positions, std::uint64_t seed) {
  std::iota(positions.begin(), positions.end(), 1);
  Rng rng(seed);
  std::shuffle(positions.begin(), positions.end(), rng);
}

ArrivalOrder sample_order(int n, std::uint64_t seed) {
  if (n < 1) throw Error("order length must be positive");
  ArrivalOrder order;
  order.positions.resize(static_cast<std::size_t>(n));
  fill_order(order.positions, seed);
  order.seed = seed;
  return order;
}

}  // namespace ksec
