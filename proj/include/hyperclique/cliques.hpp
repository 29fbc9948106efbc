#pragma once

#include <map>
#include <vector>

#include "hyperclique/hypergraph.hpp"
#include "hyperclique/vertex_set.hpp"

namespace hyperclique {

/// Sizes of the maximal cliques of one hypergraph.
struct SpectrumReport {
  std::vector<int> sizes;              ///< one entry per maximal clique, descending
  int distinct_sizes = 0;
  std::map<int, VertexSet> witnesses;  ///< lexicographically smallest clique of each size

  /// Distinct sizes in decreasing order.
  std::vector<int> distinct_desc() const;
};

/// True iff every k-subset of s is an edge. Sets smaller than k are complete.
/// Throws InputError if s has a member outside [0, n-1].
bool is_complete(const Hypergraph& h, const VertexSet& s);

/// { v not in s : s + {v} complete }. Throws PreconditionError if s is not complete.
VertexSet extenders(const Hypergraph& h, const VertexSet& s);

bool is_maximal_clique(const Hypergraph& h, const VertexSet& s);

/// Every maximal clique exactly once, in lexicographic order.
std::vector<VertexSet> enumerate_maximal_cliques(const Hypergraph& h);

/// Oracle: tests all 2^n subsets. Refuses n > 20.
std::vector<VertexSet> brute_force_maximal_cliques(const Hypergraph& h);
inline constexpr int kBruteForceMaxVertices = 20;

SpectrumReport clique_spectrum(const Hypergraph& h);

/// Number of distinct maximal-clique sizes, without materializing the cliques.
int distinct_clique_sizes(const Hypergraph& h);

}  // namespace hyperclique
