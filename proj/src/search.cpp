#include "hyperclique/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <omp.h>

#include "json.hpp"

#include "hyperclique/clique_kernel.hpp"
#include "hyperclique/errors.hpp"
#include "hyperclique/rng.hpp"
#include "hyperclique/subsets.hpp"

namespace hyperclique {

namespace {

void check_nk(int n, int k) {
  if (k < 2) throw InputError("k must be at least 2");
  if (n < 1 || n > kMaxVertices) throw InputError("n must be in [1, " + std::to_string(kMaxVertices) + "]");
}

/// Dense link table that follows edge flips, so consecutive edge-set indices
/// cost O(changed bits * k) to load instead of a full rebuild.
class FlipLinks {
 public:
  FlipLinks(int n, int k) : n_(n), k_(k), slots_(lex_subsets(n, k)) {
    links_.assign(static_cast<std::size_t>(binom(n, k - 1)), VertexSet{});
    entries_.reserve(slots_.size() * static_cast<std::size_t>(k));
    for (const VertexSet& e : slots_)
      e.for_each([&](Vertex w) { entries_.push_back({colex_rank(e.without(w)), w}); });
  }

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t slot_count() const { return slots_.size(); }
  const VertexSet& slot(std::size_t j) const { return slots_[j]; }
  VertexSet link(const VertexSet& t) const { return links_[colex_rank(t)]; }

  void set(std::size_t j, bool on) {
    const Entry* e = &entries_[j * static_cast<std::size_t>(k_)];
    for (int i = 0; i < k_; ++i) {
      if (on)
        links_[e[i].rank].insert(e[i].w);
      else
        links_[e[i].rank].erase(e[i].w);
    }
  }

  void load(std::uint64_t index) {
    std::fill(links_.begin(), links_.end(), VertexSet{});
    for (std::uint64_t bits = index; bits != 0; bits &= bits - 1) set(static_cast<std::size_t>(std::countr_zero(bits)), true);
  }

  void step(std::uint64_t from, std::uint64_t to) {
    for (std::uint64_t diff = from ^ to; diff != 0; diff &= diff - 1) {
      const int j = std::countr_zero(diff);
      set(static_cast<std::size_t>(j), ((to >> j) & 1U) != 0);
    }
  }

 private:
  struct Entry {
    std::uint64_t rank;
    Vertex w;
  };
  int n_, k_;
  std::vector<VertexSet> slots_;
  std::vector<VertexSet> links_;
  std::vector<Entry> entries_;
};

int distinct_sizes(const FlipLinks& links) {
  std::uint64_t seen[3] = {0, 0, 0};
  for_each_maximal_clique(links, [&](const VertexSet& c) {
    const int sz = c.size();
    seen[sz >> 6] |= std::uint64_t{1} << (sz & 63);
  });
  return std::popcount(seen[0]) + std::popcount(seen[1]) + std::popcount(seen[2]);
}

SearchResult scan_block(FlipLinks& links, ShardRange r) {
  SearchResult best{0, r.lo};
  if (r.lo >= r.hi) return best;
  links.load(r.lo);
  for (std::uint64_t i = r.lo;; ++i) {
    const int g = distinct_sizes(links);
    if (g > best.g) best = {g, i};
    if (i + 1 == r.hi) break;
    links.step(i, i + 1);
  }
  return best;
}

void check_range(int n, int k, ShardRange r) {
  if (r.lo > r.hi || r.hi > edge_set_count(n, k)) throw InputError("edge-set range outside [0, 2^binom(n,k))");
}

}  // namespace

std::uint64_t edge_slot_count(int n, int k) {
  check_nk(n, k);
  return binom(n, k);
}

std::uint64_t edge_set_count(int n, int k) {
  const std::uint64_t slots = edge_slot_count(n, k);
  if (slots > 63)
    throw CapacityError("2^" + std::to_string(slots) + " edge sets do not fit a 64-bit index; binom(n,k) must be <= 63");
  return std::uint64_t{1} << slots;
}

std::uint64_t required_shards(int n, int k) {
  const std::uint64_t total = edge_set_count(n, k);
  return (total + kUnshardedLimit - 1) / kUnshardedLimit;
}

ShardRange shard_range(int n, int k, std::uint64_t count, std::uint64_t index) {
  const std::uint64_t total = edge_set_count(n, k);
  if (count < 1 || count > total)
    throw InputError("shard count must be in [1, " + std::to_string(total) + "], got " + std::to_string(count));
  if (index >= count)
    throw InputError("shard index " + std::to_string(index) + " outside [0, " + std::to_string(count) + ")");
  const std::uint64_t base = total / count, rem = total % count;
  const std::uint64_t lo = index * base + std::min(index, rem);
  return {lo, lo + base + (index < rem ? 1 : 0)};
}

SearchResult merge(const SearchResult& a, const SearchResult& b) {
  if (a.g != b.g) return a.g > b.g ? a : b;
  return a.witness_index <= b.witness_index ? a : b;
}

SearchResult scan_range_serial(int n, int k, ShardRange r) {
  check_range(n, k, r);
  FlipLinks links(n, k);
  return scan_block(links, r);
}

SearchResult scan_range(int n, int k, ShardRange r, int threads) {
  check_range(n, k, r);
  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (r.hi - r.lo + kBlock - 1) / kBlock;
  SearchResult best{0, r.lo};
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt)
  {
    FlipLinks links(n, k);
    SearchResult local{0, r.lo};
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      const std::uint64_t lo = r.lo + static_cast<std::uint64_t>(b) * kBlock;
      local = merge(local, scan_block(links, {lo, std::min(lo + kBlock, r.hi)}));
    }
#pragma omp critical
    best = merge(best, local);
  }
  return best;
}

SearchResult exhaustive_g(int n, int k, std::optional<ShardSpec> shard, int threads) {
  const ShardRange r = shard ? shard_range(n, k, shard->count, shard->index) : ShardRange{0, edge_set_count(n, k)};
  if (r.hi - r.lo > kUnshardedLimit)
    throw CapacityError("scanning " + std::to_string(r.hi - r.lo) + " edge sets exceeds the per-run limit of 2^22; use at least " +
                        std::to_string(required_shards(n, k)) + " shards");
  return scan_range(n, k, r, threads);
}

namespace {

struct Checkpoint {
  std::set<std::uint64_t> done;  // shard indices
  SearchResult best;
  double elapsed = 0;
};

Checkpoint read_checkpoint(const std::string& path, int n, int k, std::uint64_t shards) {
  Checkpoint cp;
  std::ifstream in(path);
  if (!in) return cp;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    if (doc.at("n").get<int>() != n || doc.at("k").get<int>() != k)
      throw InputError("checkpoint " + path + " belongs to n = " + doc.at("n").dump() + ", k = " + doc.at("k").dump());
    if (doc.contains("shard_count") && doc.at("shard_count").get<std::uint64_t>() != shards)
      throw InputError("checkpoint " + path + " was written with " + doc.at("shard_count").dump() + " shards, not " +
                       std::to_string(shards));
    for (const auto& pair : doc.at("shards_done")) {
      const ShardRange r{pair.at(0).get<std::uint64_t>(), pair.at(1).get<std::uint64_t>()};
      // Equal-size layout: locate the candidate index and confirm it.
      std::uint64_t idx = 0;
      const std::uint64_t total = edge_set_count(n, k);
      const std::uint64_t base = total / shards;
      if (base > 0) idx = std::min(r.lo / base, shards - 1);
      while (idx > 0 && shard_range(n, k, shards, idx).lo > r.lo) --idx;
      while (idx + 1 < shards && shard_range(n, k, shards, idx).hi <= r.lo) ++idx;
      if (!(shard_range(n, k, shards, idx) == r))
        throw InputError("checkpoint " + path + " lists [" + std::to_string(r.lo) + ", " + std::to_string(r.hi) +
                         ") which is not a shard of the requested layout");
      cp.done.insert(idx);
    }
    cp.best = {doc.at("best").get<int>(), doc.at("witness_edge_index").get<std::uint64_t>()};
    if (doc.contains("elapsed_seconds")) cp.elapsed = doc.at("elapsed_seconds").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed checkpoint " + path + ": " + e.what());
  }
  return cp;
}

void write_checkpoint(const std::string& path, int n, int k, std::uint64_t shards, const Checkpoint& cp) {
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["n"] = n;
  doc["k"] = k;
  doc["shard_count"] = shards;
  nlohmann::json done = nlohmann::json::array();
  for (std::uint64_t idx : cp.done) {
    ShardRange r = shard_range(n, k, shards, idx);
    done.push_back({r.lo, r.hi});
  }
  doc["shards_done"] = std::move(done);
  doc["best"] = cp.best.g;
  doc["witness_edge_index"] = cp.best.witness_index;
  doc["elapsed_seconds"] = cp.elapsed;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InputError("cannot write checkpoint " + tmp);
    out << doc.dump(2) << '\n';
    out.flush();
    if (!out) throw InputError("failed writing checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

CheckpointRun exhaustive_g_checkpointed(int n, int k, const std::string& path, std::uint64_t shards,
                                        std::optional<std::uint64_t> only, std::optional<std::uint64_t> stop_after,
                                        int threads) {
  (void)shard_range(n, k, shards, only.value_or(0));  // validates the layout
  Checkpoint cp = read_checkpoint(path, n, k, shards);
  std::uint64_t fresh = 0;
  for (std::uint64_t idx = 0; idx < shards; ++idx) {
    if (only && idx != *only) continue;
    if (cp.done.count(idx)) continue;
    if (stop_after && fresh >= *stop_after) break;
    const auto start = std::chrono::steady_clock::now();
    SearchResult part = exhaustive_g(n, k, ShardSpec{shards, idx}, threads);
    cp.best = cp.done.empty() ? part : merge(cp.best, part);
    cp.done.insert(idx);
    cp.elapsed += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_checkpoint(path, n, k, shards, cp);
    ++fresh;
  }
  return {cp.best, shards, cp.done.size()};
}

MoonMoserReport check_moon_moser(int n, int g_value) {
  if (n < 1) throw InputError("Moon-Moser check needs n >= 1");
  MoonMoserReport r;
  r.n = n;
  r.g = g_value;
  r.upper = n - (std::bit_width(static_cast<unsigned>(n)) - 1);
  r.upper_ok = g_value <= r.upper;
  if (n >= 4) {
    const double l = std::log2(static_cast<double>(n));
    r.lower = n - l - 2.0 * std::log2(l);
    r.lower_ok = *r.lower < g_value;
  }
  return r;
}

HillClimbResult hill_climb_g(int n, int k, std::uint64_t iters, std::uint64_t seed, std::uint64_t restarts) {
  check_nk(n, k);
  if (restarts < 1) throw InputError("hill climbing needs at least one restart");
  if (binom(n, k) > (std::uint64_t{1} << 20)) throw InputError("hill climbing supports at most 2^20 possible edges");
  FlipLinks links(n, k);
  const std::size_t slots = links.slot_count();
  int best = -1;
  std::vector<char> best_state;
  for (std::uint64_t r = 0; r < restarts; ++r) {
    Rng rng = Rng::for_task(seed, r);
    std::vector<char> state(slots, 0);
    links.load(0);
    for (std::size_t j = 0; j < slots; ++j)
      if (rng.chance(0.5)) {
        state[j] = 1;
        links.set(j, true);
      }
    int cur = distinct_sizes(links);
    if (cur > best) {
      best = cur;
      best_state = state;
    }
    for (std::uint64_t it = 0; it < iters && slots > 0; ++it) {
      const std::size_t j = static_cast<std::size_t>(rng.below(slots));
      state[j] ^= 1;
      links.set(j, state[j] != 0);
      const int next = distinct_sizes(links);
      if (next >= cur) {
        cur = next;
        if (cur > best) {
          best = cur;
          best_state = state;
        }
      } else {
        state[j] ^= 1;
        links.set(j, state[j] != 0);
      }
    }
  }
  std::vector<VertexSet> edges;
  for (std::size_t j = 0; j < slots; ++j)
    if (best_state[j]) edges.push_back(links.slot(j));
  return {best, Hypergraph(k, n, std::move(edges))};
}

}  // namespace hyperclique
