#include "ksec/probability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "ksec/algorithms.hpp"

namespace ksec {

namespace {

void check_fraction(double c) {
  if (!(c > 0.0 && c < 1.0)) throw Error("sample fraction must lie in (0, 1)");
}

// c * (ln(1/c) + sum_{l=1}^{i-1} (-1)^{l+1} C(i-1, l) (c^l - 1) / l)
long double printed_sum(int i, long double c) {
  long double sum = 0.0L;
  long double binom = 1.0L;
  long double cPow = 1.0L;
  for (int l = 1; l <= i - 1; ++l) {
    binom = binom * static_cast<long double>(i - l) / static_cast<long double>(l);
    cPow *= c;
    const long double term = binom * (cPow - 1.0L) / static_cast<long double>(l);
    sum += (l % 2 == 1) ? term : -term;
  }
  return c * (std::log(1.0L / c) + sum);
}

// The alternating sum equals -sum_{r=1}^{i-1} (1-c)^r / r, so the whole
// expression is the tail c * sum_{r >= i} (1-c)^r / r of the series for ln(1/c).
long double tail_series(int i, long double c) {
  const long double q = 1.0L - c;
  if (c < 0.01L) {
    long double head = 0.0L;
    long double qPow = 1.0L;
    for (int r = 1; r < i; ++r) {
      qPow *= q;
      head += qPow / r;
    }
    return c * (std::log(1.0L / c) - head);
  }
  long double qPow = std::pow(q, static_cast<long double>(i));
  long double sum = 0.0L;
  for (long r = i;; ++r) {
    const long double term = qPow / static_cast<long double>(r);
    sum += term;
    if (term < 1e-21L * sum || qPow == 0.0L) break;
    qPow *= q;
  }
  return c * sum;
}

}  // namespace

double p_closed_form(int i, double c) {
  check_fraction(c);
  if (i < 1) throw Error("rank must be at least 1");
  const long double value = i <= 20 ? printed_sum(i, c) : tail_series(i, c);
  return static_cast<double>(value);
}

double P_closed_form_B2(int i, bool isSmall, std::optional<int> smallRank, std::optional<int> secondSmallGlobalRank,
                        double c) {
  if (isSmall != smallRank.has_value()) throw Error("small rank must be given exactly for small items");
  const double pi = p_closed_form(i, c);
  if (!isSmall) return pi;
  if (*smallRank == 1) return pi + (secondSmallGlobalRank ? p_closed_form(*secondSmallGlobalRank, c) : 0.0);
  return 2.0 * pi;
}

Fraction Fraction::reduced() const {
  if (num == 0) return {0, 1};
  const std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Fraction::str() const {
  const Fraction r = reduced();
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

ProbabilityTable::ProbabilityTable(int n, int capacity, int sampleLength, double alpha)
    : n_(n),
      capacity_(capacity),
      sampleLength_(sampleLength),
      alpha_(alpha),
      packedAt_(static_cast<std::size_t>(n) * static_cast<std::size_t>(capacity), 0),
      joint_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(capacity) *
                 static_cast<std::size_t>(capacity),
             0) {}

std::uint64_t ProbabilityTable::total_count(int i) const {
  std::uint64_t total = 0;
  for (int j = 1; j <= capacity_; ++j) total += packed_count(i, j);
  return total;
}

void ProbabilityTable::merge(const ProbabilityTable& other) {
  if (other.n_ != n_ || other.capacity_ != capacity_ || other.sampleLength_ != sampleLength_)
    throw Error("cannot merge tables of different shape");
  orders_ += other.orders_;
  for (std::size_t k = 0; k < packedAt_.size(); ++k) packedAt_[k] += other.packedAt_[k];
  for (std::size_t k = 0; k < joint_.size(); ++k) joint_[k] += other.joint_[k];
}

ProbabilityTable enumerate_exact(const Instance& instance, double c, std::optional<double> boostingAlpha,
                                 int workers) {
  const int n = instance.size();
  if (n > kEnumerationCap) throw Error("enumeration cap exceeded");
  if (n < 1) throw Error("empty instance");
  const double alpha = boostingAlpha.value_or(1.0);
  if (!(alpha >= 1.0)) throw Error("boosting factor must be at least 1");
  const int sample = sample_length(n, c);
  const int B = instance.capacity();

  // One task per first arrival; counts are integers, so merge order is irrelevant.
  auto run_first = [&](int first) {
    ProbabilityTable part(n, B, sample, alpha);
    std::vector<int> order(static_cast<std::size_t>(n));
    order[0] = first;
    std::vector<int> rest;
    for (int id = 1; id <= n; ++id)
      if (id != first) rest.push_back(id);
    do {
      std::copy(rest.begin(), rest.end(), order.begin() + 1);
      const SelectionOutcome out = run_extended_secretary(instance, order, c, alpha);
      part.record_order();
      for (const PackedItem& a : out.packed) {
        part.record_packed(a.id, a.position);
        if (!instance.is_small(a.id)) continue;
        for (const PackedItem& b : out.packed)
          if (b.position != a.position && instance.is_small(b.id)) part.record_joint(a.id, b.id, a.position, b.position);
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return part;
  };

  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, n);

  std::vector<ProbabilityTable> parts(static_cast<std::size_t>(n), ProbabilityTable(n, B, sample, alpha));
  if (workers == 1) {
    for (int first = 1; first <= n; ++first) parts[static_cast<std::size_t>(first - 1)] = run_first(first);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int first = w + 1; first <= n; first += workers) parts[static_cast<std::size_t>(first - 1)] = run_first(first);
      });
    for (std::thread& t : pool) t.join();
  }

  ProbabilityTable table(n, B, sample, alpha);
  for (const ProbabilityTable& part : parts) table.merge(part);
  return table;
}

std::string IdentityReport::summary() const {
  std::ostringstream os;
  if (ok()) {
    os << "all identities exact (" << checked << " checked)";
    return os.str();
  }
  os << violations.size() << " of " << checked << " identities violated; first: " << violations.front().identity
     << " items";
  for (int id : violations.front().items) os << ' ' << id;
  os << ": " << violations.front().lhs.str() << " != " << violations.front().rhs.str();
  return os.str();
}

IdentityReport structural_identity_check(const ProbabilityTable& table, const Instance& instance) {
  if (table.n() != instance.size() || table.capacity() != instance.capacity())
    throw Error("table does not belong to this instance");

  IdentityReport report;
  const std::uint64_t orders = table.order_count();
  auto expect = [&](const char* name, std::vector<int> items, std::uint64_t lhs, std::uint64_t rhs) {
    ++report.checked;
    if (lhs != rhs) report.violations.push_back({name, std::move(items), {lhs, orders}, {rhs, orders}});
  };

  const int n = instance.size();
  const int B = instance.capacity();
  const RankMaps& ranks = instance.rank_maps();
  const int smallCount = ranks.small_count();
  const int bStar = std::min(B, smallCount);
  std::vector<int> smalls(ranks.smallRankInverse.begin() + 1, ranks.smallRankInverse.end());
  auto smallRank = [&](int id) { return ranks.smallRank[static_cast<std::size_t>(id)]; };
  auto first = [&](int id) { return table.packed_count(id, 1); };

  for (const Item& it : instance.items()) {
    const int i = it.id;
    if (it.dummy) {
      expect("dummy never packed", {i}, table.total_count(i), 0);
      continue;
    }
    if (it.size != 1) {
      expect("P_i = p_i (large)", {i}, table.total_count(i), first(i));
      if (B == 2) expect("corollary B=2 (large)", {i}, table.total_count(i), first(i));
      continue;
    }

    const int rs = smallRank(i);
    const int iStar = std::min(rs, B);
    std::uint64_t rhs = static_cast<std::uint64_t>(iStar) * first(i);
    for (int x = rs + 1; x <= bStar; ++x) rhs += first(ranks.smallRankInverse[static_cast<std::size_t>(x)]);
    expect("P_i = i*p_i + sum p_r'(x) (small)", {i}, table.total_count(i), rhs);

    if (B == 2) {
      std::uint64_t cor = 2 * first(i);
      if (rs == 1) cor = first(i) + (smallCount >= 2 ? first(ranks.smallRankInverse[2]) : 0);
      expect("corollary B=2 (small)", {i}, table.total_count(i), cor);
    }

    for (int l = 2; l <= iStar; ++l) {
      std::uint64_t sum = 0;
      for (int j : smalls) sum += table.joint_count(i, j, 1, l);
      expect("HL1", {i, l}, sum, first(i));
    }

    for (int x = 2; x <= B; ++x) {
      std::uint64_t sum = 0;
      for (int j : smalls) sum += table.joint_count(j, i, 1, x);
      expect("HL0 partition", {i, x}, table.packed_count(i, x), sum);
    }
  }

  for (int i : smalls)
    for (int j : smalls) {
      if (j <= i) continue;
      for (int x = 1; x <= B; ++x)
        for (int y = 1; y <= B; ++y)
          if (x != y) expect("HL2", {i, j, x, y}, table.joint_count(i, j, x, y), table.joint_count(j, i, x, y));
    }

  for (int m : smalls) {
    const int r = smallRank(m);
    if (r <= 1 || r > B) continue;
    for (int i : smalls) {
      if (smallRank(i) >= r) continue;
      std::uint64_t sumM = 0;
      std::uint64_t sumI = 0;
      for (int j : smalls) {
        sumM += table.joint_count(m, j, 1, r);
        sumI += table.joint_count(i, j, 1, r);
        if (j != i && j != m) expect("HL3", {m, j, i, r}, table.joint_count(m, j, 1, r), table.joint_count(i, j, 1, r));
      }
      expect("HL3 summed over j", {m, i, r}, sumM, sumI);
    }
  }

  // Finite-n sum rule: nothing is accepted iff the best real item is sampled.
  std::uint64_t firstTotal = 0;
  bool anyReal = false;
  for (const Item& it : instance.items()) {
    firstTotal += first(it.id);
    anyReal = anyReal || !it.dummy;
  }
  ++report.checked;
  const Fraction lhs{firstTotal, orders};
  const Fraction rhs = anyReal ? Fraction{static_cast<std::uint64_t>(n - table.sample_length()), static_cast<std::uint64_t>(n)}
                               : Fraction{0, 1};
  if (!(lhs == rhs)) report.violations.push_back({"sum rule", {}, lhs, rhs});

  // First acceptance depends only on the boosted rank, and is monotone in it.
  std::vector<const Item*> byKey;
  for (const Item& it : instance.items())
    if (!it.dummy) byKey.push_back(&it);
  auto key = [&](const Item* it) { return it->size == 1 ? table.alpha() * it->value : it->value; };
  std::stable_sort(byKey.begin(), byKey.end(), [&](const Item* a, const Item* b) { return key(a) > key(b); });
  for (std::size_t k = 0; k + 1 < byKey.size(); ++k) {
    ++report.checked;
    const std::uint64_t a = first(byKey[k]->id);
    const std::uint64_t b = first(byKey[k + 1]->id);
    if (a < b) report.violations.push_back({"monotone p_i", {byKey[k]->id, byKey[k + 1]->id}, {a, orders}, {b, orders}});
  }
  return report;
}

}  // namespace ksec
