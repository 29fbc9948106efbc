#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperclique/vertex_set.hpp"

namespace hyperclique {

/// A k-uniform hypergraph on vertices 0..n-1. Immutable after construction.
///
/// Edges are kept in lexicographic order. Membership is answered through the
/// link table: for every (k-1)-set T, link(T) is the set of w such that
/// T + {w} is an edge. The table is a dense array indexed by colex rank when
/// binom(n, k-1) is small, otherwise a hash map holding non-empty links only.
class Hypergraph {
 public:
  /// Validates and stores the edge list. Throws InputError on arity,
  /// range or duplicate violations.
  Hypergraph(int k, int n, std::vector<VertexSet> edges);

  static Hypergraph complete(int k, int n);
  static Hypergraph edgeless(int k, int n) { return Hypergraph(k, n, {}); }

  /// Bit j of index selects the j-th k-subset in lexicographic order.
  static Hypergraph from_edge_index(int k, int n, std::uint64_t index);

  int k() const { return k_; }
  int n() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(const VertexSet& e) const;

  /// Vertices w with t + {w} an edge; t must have exactly k-1 members.
  VertexSet link(const VertexSet& t) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_links();

  int k_;
  int n_;
  std::vector<VertexSet> edges_;
  bool dense_ = true;
  std::vector<VertexSet> dense_links_;
  std::unordered_map<VertexSet, VertexSet, VertexSetHash> sparse_links_;
};

/// Dense link tables are used up to this many (k-1)-subsets.
inline constexpr std::uint64_t kDenseLinkLimit = std::uint64_t{1} << 22;

/// Parses the text format: a "k n" header line, then one edge per line.
/// Lines starting with '#' are comments; CRLF is accepted.
Hypergraph parse_hypergraph(std::string_view text);

/// Emits the text format with LF line endings and edges in lexicographic order.
std::string serialize_hypergraph(const Hypergraph& h);

Hypergraph load_hypergraph(const std::string& path);

}  // namespace hyperclique
