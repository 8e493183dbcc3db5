#include "ksec/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "ksec/algorithms.hpp"
#include "ksec/kernels.hpp"

namespace ksec {

std::string_view to_string(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::Extended: return "extended";
    case AlgorithmKind::Boosted: return "boosted";
    case AlgorithmKind::Classic: return "classic";
    case AlgorithmKind::MixedOrdinal: return "mixed-ordinal";
  }
  return "unknown";
}

AlgorithmKind parse_algorithm_kind(std::string_view name) {
  for (AlgorithmKind k : {AlgorithmKind::Extended, AlgorithmKind::Boosted, AlgorithmKind::Classic,
                          AlgorithmKind::MixedOrdinal})
    if (to_string(k) == name) return k;
  throw Error("unknown algorithm: " + std::string(name));
}

namespace {

constexpr long kChunk = 2048;

// Only the ordinal algorithm draws random bits of its own; its stream is seeded
// lazily because seeding a Mersenne twister dominates small trials.
SelectionOutcome run_one(const AlgorithmSpec& spec, const Instance& instance, std::span<const int> order,
                         std::uint64_t algorithmSeed) {
  switch (spec.kind) {
    case AlgorithmKind::Extended: return run_extended_secretary(instance, order, spec.c, 1.0);
    case AlgorithmKind::Boosted: return run_extended_secretary(instance, order, spec.c, spec.alpha);
    case AlgorithmKind::Classic: return classic_secretary(instance, order, spec.c);
    case AlgorithmKind::MixedOrdinal: {
      Rng rng(algorithmSeed);
      return mixed_ordinal_1B(instance, order, rng);
    }
  }
  throw Error("unknown algorithm");
}

}  // namespace

EstimateReport estimate(const AlgorithmSpec& spec, const Instance& instance, long trials, std::uint64_t seed,
                        int workers) {
  if (trials < 1) throw Error("trials must be at least 1");
  if (spec.kind == AlgorithmKind::Boosted) BoostingConfig(spec.alpha, spec.c);
  if (!(spec.c >= 0.0 && spec.c <= 1.0)) throw Error("sample fraction must lie in [0, 1]");
  if (instance.dummy_count() == instance.size()) throw Error("degenerate instance");
  const double opt = optimal_packing(instance).value;
  if (!(opt > 0.0)) throw Error("degenerate instance");

  const int n = instance.size();
  const long chunks = (trials + kChunk - 1) / kChunk;
  std::vector<double> ratios(static_cast<std::size_t>(trials));
  std::vector<std::vector<std::uint64_t>> chunkCounts(static_cast<std::size_t>(chunks));

  auto run_chunk = [&](long chunk) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> order(static_cast<std::size_t>(n));
    const long end = std::min(trials, (chunk + 1) * kChunk);
    for (long t = chunk * kChunk; t < end; ++t) {
      const auto trial = static_cast<std::uint64_t>(t);
      fill_order(order, stream_seed(seed, trial, 0));
      const SelectionOutcome out = run_one(spec, instance, order, stream_seed(seed, trial, 1));
      if (out.used_capacity(instance) > instance.capacity()) throw Error("infeasible selection");
      for (const PackedItem& p : out.packed)
        if (!p.dummy) ++counts[static_cast<std::size_t>(p.id)];
      ratios[static_cast<std::size_t>(t)] = out.totalValue / opt;
    }
    chunkCounts[static_cast<std::size_t>(chunk)] = std::move(counts);
  };

  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = static_cast<int>(std::min<long>(workers, chunks));
  if (workers == 1) {
    for (long chunk = 0; chunk < chunks; ++chunk) run_chunk(chunk);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (long chunk = w; chunk < chunks; chunk += workers) run_chunk(chunk);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }

  EstimateReport report;
  report.spec = spec;
  report.trials = trials;
  report.seed = seed;
  const kernels::Moments mom = kernels::moments(ratios);
  const double T = static_cast<double>(trials);
  report.meanRatio = mom.sum / T;
  if (trials > 1) {
    const double var = std::max(0.0, (mom.sumSquares - mom.sum * report.meanRatio) / (T - 1.0));
    report.stdError = std::sqrt(var / T);
  }
  for (int id = 1; id <= n; ++id) {
    std::uint64_t total = 0;
    for (const auto& counts : chunkCounts) total += counts[static_cast<std::size_t>(id)];
    report.perItemCount[id] = total;
    report.perItemProb[id] = static_cast<double>(total) / T;
  }
  return report;
}

std::vector<SweepRow> sweep_alpha(InstanceKind kind, const std::vector<double>& alphas, int n, long trials,
                                  std::uint64_t seed, double epsilon, int workers) {
  std::vector<SweepRow> rows;
  for (double alpha : alphas) {
    InstanceParams params;
    params.kind = kind;
    params.n = n;
    params.capacity = 2;
    params.epsilon = epsilon;
    params.alpha = alpha;
    params.seed = seed;
    const Instance instance = make_instance(params);
    rows.push_back({alpha, estimate({AlgorithmKind::Boosted, kInvE, alpha}, instance, trials, seed, workers)});
  }
  return rows;
}

}  // namespace ksec
