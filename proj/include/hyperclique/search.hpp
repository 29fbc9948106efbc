#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperclique/hypergraph.hpp"

namespace hyperclique {

/// Edge-set indices: bit j of an index selects the j-th k-subset of [0, n)
/// in lexicographic order, so indices run over [0, 2^binom(n,k)).
std::uint64_t edge_slot_count(int n, int k);
/// 2^binom(n,k). Throws CapacityError when binom(n,k) > 63.
std::uint64_t edge_set_count(int n, int k);

/// Largest range a single unsharded run will scan.
inline constexpr std::uint64_t kUnshardedLimit = std::uint64_t{1} << 22;

/// Smallest shard count keeping every shard within kUnshardedLimit.
std::uint64_t required_shards(int n, int k);

struct ShardRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;  ///< exclusive
  friend bool operator==(const ShardRange&, const ShardRange&) = default;
};

/// Shard `index` of `count` equal-as-possible pieces of [0, 2^binom(n,k)).
ShardRange shard_range(int n, int k, std::uint64_t count, std::uint64_t index);

struct SearchResult {
  int g = 0;                       ///< best distinct-size count found
  std::uint64_t witness_index = 0;  ///< smallest edge-set index achieving g
  Hypergraph witness(int n, int k) const { return Hypergraph::from_edge_index(k, n, witness_index); }
  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Max g, ties to the smaller index.
SearchResult merge(const SearchResult& a, const SearchResult& b);

/// Serial reference scan of one index range.
SearchResult scan_range_serial(int n, int k, ShardRange r);

/// OpenMP scan of one index range; result independent of the thread count
/// (0 = runtime default).
SearchResult scan_range(int n, int k, ShardRange r, int threads = 0);

struct ShardSpec {
  std::uint64_t count = 1;
  std::uint64_t index = 0;
};

/// Exact g(n,k) over every edge set, or over one shard. Refuses (CapacityError
/// naming the required shard count) when the scanned range exceeds
/// kUnshardedLimit.
SearchResult exhaustive_g(int n, int k, std::optional<ShardSpec> shard = std::nullopt, int threads = 0);

/// Resumable scan in `shards` pieces recorded in a JSON checkpoint file
/// {"n","k","shards_done","best","witness_edge_index"}. Each finished shard
/// is committed by writing a temporary file and renaming it over the old one.
struct CheckpointRun {
  SearchResult best;
  std::uint64_t shards_total = 0;
  std::uint64_t shards_done = 0;
  bool complete() const { return shards_done == shards_total; }
};

/// Runs the shards in `only` (all when empty) that the checkpoint does not
/// list yet. `stop_after` stops once that many new shards finished, which
/// simulates an interruption. Throws InputError if the checkpoint belongs to
/// another (n, k) or shard layout.
CheckpointRun exhaustive_g_checkpointed(int n, int k, const std::string& path, std::uint64_t shards,
                                        std::optional<std::uint64_t> only = std::nullopt,
                                        std::optional<std::uint64_t> stop_after = std::nullopt, int threads = 0);

struct MoonMoserReport {
  int n = 0;
  int g = 0;
  int upper = 0;                ///< n - floor(log2 n)
  bool upper_ok = false;        ///< g <= upper
  std::optional<double> lower;  ///< n - log2 n - 2 log2 log2 n, for n >= 4
  std::optional<bool> lower_ok;  ///< lower < g
};

/// Throws InputError for n < 1.
MoonMoserReport check_moon_moser(int n, int g_value);

struct HillClimbResult {
  int best = 0;
  Hypergraph witness;
};

/// Local search over single edge flips, keeping moves that do not lower the
/// number of distinct clique sizes. Each restart draws its start graph
/// (edge probability 1/2) and its moves from Rng::for_task(seed, restart).
/// Ties between restarts go to the earlier restart. Throws InputError for
/// restarts < 1 or more than 2^20 possible edges.
HillClimbResult hill_climb_g(int n, int k, std::uint64_t iters, std::uint64_t seed, std::uint64_t restarts);

}  // namespace hyperclique
