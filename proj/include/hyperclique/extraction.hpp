#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperclique/cliques.hpp"
#include "hyperclique/hypergraph.hpp"
#include "hyperclique/layered_tree.hpp"

namespace hyperclique {

/// One maximal clique per distinct size, largest first, with the A/B sets
/// of the tree construction. For node i with tree parent u:
/// A_i = A_u & X_i and B_i = A_u - A_i; A_0 = X_0 and B_0 = V - X_0.
struct CliqueChain {
  std::vector<VertexSet> cliques;
  std::vector<VertexSet> A;
  std::vector<VertexSet> B;
  int C = 0;
  int n = 0;
};

/// The sets attached to the root path y_0 .. y_r ending at `node`.
struct PathDecomposition {
  int node = 0;
  std::vector<int> path;       ///< y_0 = 0, ..., y_r = node
  std::vector<VertexSet> S;    ///< S_0 = {} and S_i = X_{y_i} & B_{y_{i-1}}
  VertexSet U;                 ///< A_{y_r} | S_r
  std::optional<VertexSet> W;  ///< A_{y_{r-1}}, present when r >= 1
};

struct ExtractionResult {
  int k = 0;  ///< uniformity of the source hypergraph
  OrderedTree tree = OrderedTree::single_vertex();
  CliqueChain chain;
  LayeredParams params;  ///< (k - 1, C)
  std::vector<PathDecomposition> certificate;  ///< one per non-root node; entry i is node i + 1
};

/// Picks the lexicographically smallest maximal clique of each distinct
/// size, sorted by decreasing size. With no C given, C = n - distinct_sizes.
/// Throws PreconditionError when distinct_sizes < n - C.
CliqueChain select_representatives(const SpectrumReport& spectrum, const Hypergraph& h, std::optional<int> c);

/// Builds the (k-1, C)-layered tree on the chain: each new clique descends
/// from the root through the unique child w with X_w & B_u == X_new & B_u
/// and attaches where no child matches. Throws InvariantBreach if two
/// children ever match.
ExtractionResult extract_tree(const Hypergraph& h, std::optional<int> c);

/// Root-path sets for every non-root node, recomputed from the tree and the chain.
std::vector<PathDecomposition> decompose_paths(const OrderedTree& tree, const CliqueChain& chain);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> violations;
};

struct CertificateReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  /// Check by name; nullptr if absent.
  const CheckResult* find(const std::string& name) const;
};

/// Re-derives the construction from (H, chain cliques, tree) and checks every
/// identity of the stored certificate. Violations are returned, not thrown.
CertificateReport validate_certificate(const ExtractionResult& res, const Hypergraph& h);

struct Fact1Outcome {
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
};

/// Given k+1 sets: do all leave-one-out unions form complete sets, and does
/// the full union? Throws InputError unless exactly k+1 sets are given.
Fact1Outcome check_fact1(const Hypergraph& h, const std::vector<VertexSet>& sets);

}  // namespace hyperclique
