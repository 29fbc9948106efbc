#pragma once

#include <cstdint>
#include <vector>

#include "hyperclique/vertex_set.hpp"

namespace hyperclique {

/// binom(n, r) for n <= 128, saturating at UINT64_MAX.
std::uint64_t binom(int n, int r);

/// Colex rank of a set: sum over sorted members c_i of binom(c_i, i + 1).
/// Ranks of m-subsets of {0..n-1} are dense in [0, binom(n, m)).
std::uint64_t colex_rank(const VertexSet& s);

/// All r-subsets of {0..n-1} in lexicographic order of their sorted lists.
/// This is the edge order used for edge-set indices.
std::vector<VertexSet> lex_subsets(int n, int r);

namespace detail {

template <typename F>
bool for_each_subset_rec(VertexSet rest, int remaining, VertexSet cur, F& f) {
  if (remaining == 0) return f(static_cast<const VertexSet&>(cur));
  if (rest.size() < remaining) return true;
  Vertex v = rest.first();
  rest.erase(v);
  if (!for_each_subset_rec(rest, remaining - 1, cur.with(v), f)) return false;
  return for_each_subset_rec(rest, remaining, cur, f);
}

}  // namespace detail

/// Calls f(subset) for every r-subset of s, in lexicographic order; f returns false to stop early.
/// Returns false iff stopped early.
template <typename F>
bool for_each_subset_of_size(const VertexSet& s, int r, F&& f) {
  if (r < 0 || r > s.size()) return true;
  return detail::for_each_subset_rec(s, r, VertexSet{}, f);
}

}  // namespace hyperclique
