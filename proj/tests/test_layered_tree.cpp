#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "hyperclique/bounds.hpp"
#include "hyperclique/errors.hpp"
#include "hyperclique/layered_tree.hpp"
#include "test_support.hpp"

using namespace hyperclique;
using hyperclique::testing::random_layered_tree;

namespace {

/// Independent oracle: enumerate every parent array of every length up to
/// n_cap (no pruning) and keep the layered ones.
int exhaustive_max(const LayeredParams& p, int n_cap, bool dfs_only) {
  int best = 0;
  for (int size = 1; size <= n_cap; ++size) {
    std::vector<int> parents(static_cast<std::size_t>(size), 0);
    parents[0] = -1;
    for (;;) {
      OrderedTree t(parents);
      if (is_layered(t, p) && (!dfs_only || is_dfs_order(t))) best = std::max(best, size);
      int pos = size - 1;
      while (pos >= 1 && parents[pos] == pos - 1) {
        parents[pos] = 0;
        --pos;
      }
      if (pos < 1) break;
      ++parents[pos];
    }
  }
  return best;
}

}  // namespace

TEST_CASE("ordered tree construction") {
  OrderedTree t({-1, 0, 1, 0});
  CHECK(t.size() == 4);
  CHECK(t.depth(2) == 2);
  CHECK(t.degree(0) == 2);
  CHECK(t.degree(1) == 2);
  CHECK(t.root_children() == std::vector<int>{1, 3});
  CHECK_THROWS_AS(OrderedTree({-1, 1}), InputError);
  CHECK_THROWS_AS(OrderedTree({0}), InputError);
  CHECK_THROWS_AS(OrderedTree(std::vector<int>{}), InputError);
}

TEST_CASE("validate_layered examples") {
  CHECK(is_layered(OrderedTree::single_vertex(), {1, 0}));
  CHECK(is_layered(OrderedTree::single_vertex(), {3, 7}));
  CHECK(is_layered(OrderedTree({-1, 0, 1}), {2, 0}));

  auto star = validate_layered(OrderedTree({-1, 0, 0}), {2, 0});
  REQUIRE(star.size() == 1);
  CHECK(star[0].vertex == 0);
  CHECK(star[0].kind == LayeredViolation::Kind::degree);

  auto deep = validate_layered(OrderedTree({-1, 0, 1}), {1, 0});
  REQUIRE(deep.size() == 1);
  CHECK(deep[0].vertex == 2);
  CHECK(deep[0].kind == LayeredViolation::Kind::depth);

  // Huge exponents never reject.
  CHECK(is_layered(OrderedTree({-1, 0, 0, 0, 0}), {1, 200}));
}

TEST_CASE("contract examples") {
  OrderedTree a = contract(OrderedTree({-1, 0, 1}), 1);
  CHECK(a.parents() == std::vector<int>{-1, 0});

  OrderedTree b = contract(OrderedTree({-1, 0, 0}), 2);
  CHECK(b.size() == 1);

  CHECK(contract(OrderedTree({-1, 0}), 1).size() == 1);

  // Children of x_1 and x_2 both hang off w_0; x_3's subtree is cut.
  OrderedTree c = contract(OrderedTree({-1, 0, 1, 0, 3, 0, 5}), 2);
  CHECK(c.parents() == std::vector<int>{-1, 0, 0});

  CHECK_THROWS_AS(contract(OrderedTree::single_vertex(), 1), InputError);
  CHECK_THROWS_AS(contract(OrderedTree({-1, 0, 0}), 3), InputError);
  CHECK_THROWS_AS(contract(OrderedTree({-1, 0, 0}), 0), InputError);
}

TEST_CASE("contraction keeps layeredness with the shifted constant") {
  Rng rng(99);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    LayeredParams p{rng.between(2, 3), static_cast<std::uint64_t>(rng.between(0, 2))};
    OrderedTree t = random_layered_tree(rng, p, 50);
    REQUIRE(is_layered(t, p));
    auto xs = t.root_children();
    for (int i = 1; i <= static_cast<int>(xs.size()); ++i) {
      OrderedTree ti = contract(t, i);
      int end = i < static_cast<int>(xs.size()) ? xs[i] : t.size();
      CHECK(ti.size() == end - i);
      std::uint64_t degs = 0;
      for (int j = 0; j < i; ++j) degs += static_cast<std::uint64_t>(t.degree(xs[j]));
      LayeredParams shifted{p.k - 1, (std::uint64_t{1} << p.C) + p.C + degs};
      CHECK(is_layered(ti, shifted));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("is_dfs_order examples") {
  CHECK(is_dfs_order(OrderedTree({-1, 0, 1})));
  CHECK(is_dfs_order(OrderedTree({-1, 0, 1, 0})));
  CHECK_FALSE(is_dfs_order(OrderedTree({-1, 0, 0, 1})));
  CHECK(is_dfs_order(OrderedTree::single_vertex()));
}

TEST_CASE("max_layered_size") {
  auto a = max_layered_size({1, 0});
  CHECK(a.value.value() == 2);
  CHECK(a.exactness == Exactness::exact);
  CHECK(max_layered_size({2, 0}).value.value() == 3);
  CHECK(max_layered_size({2, 1}).value.value() == 69);
  CHECK(max_layered_size({1, 5}).value.value() == 33);
  CHECK(max_layered_size({3, 0}).exactness == Exactness::upper_bound);
}

TEST_CASE("greedy maximum tree") {
  OrderedTree t0 = build_greedy_max_tree(0);
  CHECK(t0.parents() == std::vector<int>{-1, 0, 1});

  OrderedTree t1 = build_greedy_max_tree(1);
  CHECK(t1.size() == 69);
  CHECK(t1.root_children() == std::vector<int>{1, 5});
  CHECK(t1.children(1).size() == 3);
  CHECK(t1.children(5).size() == 63);
  CHECK(is_dfs_order(t1));

  for (std::uint64_t c : {0u, 1u}) {
    OrderedTree t = build_greedy_max_tree(c);
    LayeredParams p{2, c};
    CHECK(is_layered(t, p));
    CHECK(static_cast<std::uint64_t>(t.size()) == a_sequence(c, std::uint64_t{1} << c).to_u64());
    for (int v = 0; v < t.size(); ++v) CHECK_FALSE(is_layered(t.with_leaf(v), p));
  }
  CHECK_THROWS_AS(build_greedy_max_tree(2), CapacityError);
  CHECK_THROWS_AS(build_greedy_max_tree(1, 68), CapacityError);
}

TEST_CASE("brute force maxima") {
  CHECK(brute_force_max_layered({1, 0}, 8) == 2);
  CHECK(brute_force_max_layered({1, 1}, 8) == 3);
  CHECK(brute_force_max_layered({2, 0}, 8) == 3);
  CHECK(brute_force_max_layered({2, 1}, 8) == 8);  // a_2 = 69 exceeds the cap
  CHECK_THROWS_AS(brute_force_max_layered({2, 0}, 9), CapacityError);
}

TEST_CASE("pruned search agrees with unpruned enumeration") {
  for (int k = 1; k <= 3; ++k)
    for (std::uint64_t c = 0; c <= 1; ++c)
      for (int cap = 1; cap <= 7; ++cap) {
        LayeredParams p{k, c};
        CHECK(brute_force_max_layered(p, cap) == exhaustive_max(p, cap, false));
        CHECK(brute_force_max_layered(p, cap, OrderFilter::dfs_only) == exhaustive_max(p, cap, true));
      }
}

TEST_CASE("brute force agrees with the closed forms under the cap") {
  for (int k = 1; k <= 2; ++k)
    for (std::uint64_t c = 0; c <= 1; ++c) {
      auto closed = max_layered_size({k, c}).value.to_u64();
      REQUIRE(closed);
      int expect = static_cast<int>(std::min<std::uint64_t>(*closed, 8));
      CHECK(brute_force_max_layered({k, c}, 8) == expect);
    }
}

TEST_CASE("tree text format") {
  OrderedTree t = parse_tree("# star\n3\n0\r\n0\n");
  CHECK(t.parents() == std::vector<int>{-1, 0, 0});
  CHECK(serialize_tree(t) == "3\n0\n0\n");
  CHECK(parse_tree(serialize_tree(build_greedy_max_tree(1))) == build_greedy_max_tree(1));
  CHECK_THROWS_AS(parse_tree("3\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("3\n0\n2\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("2\n0\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("x\n"), ParseError);
  CHECK_THROWS_AS(parse_tree(""), ParseError);
}
