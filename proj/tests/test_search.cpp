#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "hyperclique/cliques.hpp"
#include "hyperclique/errors.hpp"
#include "hyperclique/search.hpp"

using namespace hyperclique;

namespace {

/// Oracle: rebuild every hypergraph from scratch and read its spectrum.
SearchResult naive_scan(int n, int k, ShardRange r) {
  SearchResult best{0, r.lo};
  for (std::uint64_t i = r.lo; i < r.hi; ++i) {
    const int g = clique_spectrum(Hypergraph::from_edge_index(k, n, i)).distinct_sizes;
    if (g > best.g) best = {g, i};
  }
  return best;
}

std::string temp_path(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("hyperclique_test_" + name);
  std::filesystem::remove(p);
  return p.string();
}

}  // namespace

TEST_CASE("exhaustive_g small values") {
  CHECK(exhaustive_g(1, 2).g == 1);
  CHECK(exhaustive_g(2, 2).g == 1);
  SearchResult r3 = exhaustive_g(3, 2);
  CHECK(r3.g == 2);
  CHECK(clique_spectrum(r3.witness(3, 2)).distinct_sizes == 2);
  CHECK(r3.witness_index == 1);  // {0,1} alone: sizes 2 and 1
  CHECK(exhaustive_g(4, 2).g == 2);
}

TEST_CASE("fast scan matches the rebuild oracle") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {3, 3}, {4, 3}, {5, 3}, {5, 4}}) {
    CAPTURE(n);
    CAPTURE(k);
    const ShardRange all{0, edge_set_count(n, k)};
    CHECK(scan_range_serial(n, k, all) == naive_scan(n, k, all));
  }
  CHECK(scan_range_serial(5, 3, {100, 200}) == naive_scan(5, 3, {100, 200}));
}

TEST_CASE("parallel scan agrees with the serial reference") {
  const ShardRange all{0, edge_set_count(6, 2)};
  const SearchResult serial = scan_range_serial(6, 2, all);
  for (int threads : {1, 2, 3, 8}) CHECK(scan_range(6, 2, all, threads) == serial);
  CHECK(scan_range(6, 2, {5, 5}) == SearchResult{0, 5});
}

TEST_CASE("shard partitions merge to the unsharded result") {
  const SearchResult whole = exhaustive_g(5, 3);
  for (std::uint64_t count : {1, 2, 3, 4, 7, 1024}) {
    SearchResult acc{0, 0};
    std::uint64_t next_lo = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      ShardRange r = shard_range(5, 3, count, i);
      CHECK(r.lo == next_lo);
      next_lo = r.hi;
      acc = merge(acc, exhaustive_g(5, 3, ShardSpec{count, i}));
    }
    CHECK(next_lo == 1024);
    CHECK(acc == whole);
  }
  CHECK_THROWS_AS(shard_range(5, 3, 0, 0), InputError);
  CHECK_THROWS_AS(shard_range(5, 3, 4, 4), InputError);
  CHECK_THROWS_AS(shard_range(5, 3, 2048, 0), InputError);
}

TEST_CASE("oversized scans are refused with the shard count") {
  CHECK(required_shards(7, 2) == 1);
  CHECK(required_shards(8, 2) == 64);
  try {
    (void)exhaustive_g(8, 2);
    FAIL("expected refusal");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("64 shards") != std::string::npos);
  }
  CHECK_THROWS_AS(edge_set_count(12, 2), CapacityError);
  CHECK(shard_range(8, 2, 64, 63).hi == (std::uint64_t{1} << 28));
}

TEST_CASE("checkpoint interrupt and resume") {
  const std::string path = temp_path("ckpt.json");
  const SearchResult whole = exhaustive_g(5, 3);
  CheckpointRun first = exhaustive_g_checkpointed(5, 3, path, 4, std::nullopt, 2);
  CHECK(first.shards_done == 2);
  CHECK_FALSE(first.complete());
  CHECK(std::filesystem::exists(path));
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  CheckpointRun second = exhaustive_g_checkpointed(5, 3, path, 4);
  CHECK(second.complete());
  CHECK(second.best == whole);
  // A finished checkpoint is read back without rescanning.
  CheckpointRun third = exhaustive_g_checkpointed(5, 3, path, 4);
  CHECK(third.best == whole);

  std::ifstream in(path);
  nlohmann::json doc = nlohmann::json::parse(in);
  for (const char* f : {"n", "k", "shards_done", "best", "witness_edge_index"}) CHECK(doc.contains(f));
  CHECK(doc["shards_done"].size() == 4);

  CHECK_THROWS_AS(exhaustive_g_checkpointed(5, 2, path, 4), InputError);
  CHECK_THROWS_AS(exhaustive_g_checkpointed(5, 3, path, 3), InputError);

  const std::string single = temp_path("single.json");
  for (std::uint64_t i : {3, 1, 0, 2}) exhaustive_g_checkpointed(5, 3, single, 4, i);
  CHECK(exhaustive_g_checkpointed(5, 3, single, 4).best == whole);
  std::filesystem::remove(path);
  std::filesystem::remove(single);
}

TEST_CASE("g is non-decreasing and respects the Moon-Moser bound") {
  int prev = 0;
  for (int n = 1; n <= 6; ++n) {
    const int g = exhaustive_g(n, 2).g;
    CHECK(g >= prev);
    CHECK(check_moon_moser(n, g).upper_ok);
    prev = g;
  }
  prev = 0;
  for (int n = 1; n <= 5; ++n) {
    const int g = exhaustive_g(n, 3).g;
    CHECK(g >= prev);
    prev = g;
  }
}

TEST_CASE("check_moon_moser examples") {
  MoonMoserReport r = check_moon_moser(4, 2);
  CHECK(r.upper == 2);
  CHECK(r.upper_ok);
  REQUIRE(r.lower);
  CHECK(*r.lower == doctest::Approx(0.0));
  CHECK(*r.lower_ok);
  CHECK_FALSE(check_moon_moser(7, 6).upper_ok);
  CHECK(check_moon_moser(7, 6).upper == 5);
  r = check_moon_moser(2, 1);
  CHECK(r.upper == 1);
  CHECK(r.upper_ok);
  CHECK_FALSE(r.lower);
  CHECK_THROWS_AS(check_moon_moser(0, 0), InputError);
}

TEST_CASE("hill_climb_g") {
  const int ceiling = exhaustive_g(4, 3).g;
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    HillClimbResult r = hill_climb_g(4, 3, 200, seed, 3);
    CHECK(r.best <= ceiling);
    CHECK(r.best == clique_spectrum(r.witness).distinct_sizes);
  }
  HillClimbResult a = hill_climb_g(9, 2, 300, 42, 2), b = hill_climb_g(9, 2, 300, 42, 2);
  CHECK(a.best == b.best);
  CHECK(a.witness == b.witness);
  CHECK(a.best <= 9);
  HillClimbResult start = hill_climb_g(8, 3, 0, 11, 1);
  CHECK(start.best == clique_spectrum(start.witness).distinct_sizes);
  CHECK(hill_climb_g(6, 2, 2000, 3, 4).best <= exhaustive_g(6, 2).g);
  CHECK_THROWS_AS(hill_climb_g(5, 2, 10, 1, 0), InputError);
}
