#pragma once

// Instance corpus shared by the probability tests and the acceptance binary:
// every size pattern for n = 1..7, B in {2, 3}, c in {1/4, 1/3, 0.4}, with
// seeded random values.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "ksec/core.hpp"

namespace ksec::testing {

struct CorpusEntry {
  Instance instance;
  double c = 0.0;
  int sizeMask = 0;  // bit r set: the item of rank r+1 is small
};

inline Instance instance_from_mask(int n, int B, int mask, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::vector<double> values;
  while (static_cast<int>(values.size()) < n) {
    const double v = unit(rng);
    if (std::none_of(values.begin(), values.end(), [&](double w) { return std::abs(w - v) < 1e-6; }))
      values.push_back(v);
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<ItemSpec> specs;
  for (int r = 0; r < n; ++r) specs.push_back({values[static_cast<std::size_t>(r)], (mask >> r) & 1 ? 1 : B, false});
  return Instance(B, std::move(specs));
}

inline std::vector<CorpusEntry> identity_corpus(int maxN = 7) {
  std::vector<CorpusEntry> corpus;
  std::uint64_t seed = 20240611;
  for (double c : {0.25, 1.0 / 3.0, 0.4})
    for (int B : {2, 3})
      for (int n = 1; n <= maxN; ++n)
        for (int mask = 0; mask < (1 << n); ++mask)
          corpus.push_back({instance_from_mask(n, B, mask, mix64(++seed)), c, mask});
  return corpus;
}

/// Deterministic subset of the corpus with at most `count` entries.
inline std::vector<CorpusEntry> corpus_sample(std::size_t count, std::uint64_t seed) {
  std::vector<CorpusEntry> corpus = identity_corpus();
  Rng rng(seed);
  std::shuffle(corpus.begin(), corpus.end(), rng);
  corpus.resize(std::min(count, corpus.size()));
  return corpus;
}

}  // namespace ksec::testing
