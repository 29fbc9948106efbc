#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperclique/hypergraph.hpp"

namespace hyperclique {

/// One sampled (H, S_1..S_{k+1}) instance.
struct Fact1Instance {
  Hypergraph h;
  std::vector<VertexSet> sets;
};

/// Trial `index` under `seed`. Half the trials plant the hypotheses (every
/// leave-one-out union is made complete, then random extra edges), a quarter
/// plant them and delete one edge, the rest are uniformly random. Sets may be
/// empty or overlap.
Fact1Instance sample_fact1_instance(int k, int n, std::uint64_t seed, std::uint64_t index);

struct Fact1Stats {
  std::uint64_t trials = 0;
  std::uint64_t hypotheses_held = 0;
  std::uint64_t conclusions_held = 0;
  std::uint64_t counterexamples = 0;
  std::optional<std::uint64_t> first_counterexample;  ///< smallest failing trial index
  friend bool operator==(const Fact1Stats&, const Fact1Stats&) = default;
};

/// Serial reference.
Fact1Stats fact1_trials_serial(int k, int n, std::uint64_t trials, std::uint64_t seed);

/// OpenMP version; identical result for any thread count (0 = runtime default).
Fact1Stats fact1_trials(int k, int n, std::uint64_t trials, std::uint64_t seed, int threads = 0);

}  // namespace hyperclique
