#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperclique/tower.hpp"

namespace hyperclique {

/// A rooted tree together with its insertion order v_0, ..., v_t.
///
/// Vertex i is v_i, the root is 0, and parent(i) < i for every i >= 1, so
/// each vertex attaches to an earlier one. Immutable after construction.
class OrderedTree {
 public:
  /// parents[0] must be -1; parents[i] in [0, i) otherwise. Throws InputError.
  explicit OrderedTree(std::vector<int> parents);
  static OrderedTree single_vertex() { return OrderedTree({-1}); }

  int size() const { return static_cast<int>(parents_.size()); }
  int parent(int i) const { return parents_[i]; }
  const std::vector<int>& parents() const { return parents_; }
  int depth(int i) const { return depth_[i]; }
  int degree(int i) const { return degree_[i]; }
  /// Children of the root in increasing position: x_1 < ... < x_m.
  std::vector<int> root_children() const;
  std::vector<int> children(int i) const;

  /// Copy with one more vertex appended under `parent`.
  OrderedTree with_leaf(int parent) const;

  friend bool operator==(const OrderedTree& a, const OrderedTree& b) { return a.parents_ == b.parents_; }

 private:
  std::vector<int> parents_;
  std::vector<int> depth_;
  std::vector<int> degree_;
};

struct LayeredParams {
  int k = 1;            ///< depth bound, >= 1
  std::uint64_t C = 0;  ///< degree offset
};

struct LayeredViolation {
  enum class Kind { depth, degree };
  int vertex = 0;
  Kind kind = Kind::depth;
  std::string message;
};

/// Empty iff dist(v_0, v_i) <= k and deg(v_i) <= 2^(C+i) for every i.
std::vector<LayeredViolation> validate_layered(const OrderedTree& t, const LayeredParams& p);

inline bool is_layered(const OrderedTree& t, const LayeredParams& p) { return validate_layered(t, p).empty(); }

/// Merge the first i children of the root into a new root w_0, keep only
/// the vertices before x_{i+1}, and drop the old root. The result has
/// x_{i+1} - i vertices in the original relative order. Throws InputError
/// unless 1 <= i <= number of root children.
OrderedTree contract(const OrderedTree& t, int i);

/// True iff the insertion order is a depth-first traversal: each vertex
/// attaches to a vertex on the current root path.
bool is_dfs_order(const OrderedTree& t);

enum class Exactness { exact, upper_bound };

struct MaxSize {
  TowerInt value;
  Exactness exactness = Exactness::exact;
};

/// k = 1: 2^C + 1. k = 2: a_{2^C}. k >= 3: the recursive N0 bound.
MaxSize max_layered_size(const LayeredParams& p, const TowerContext& ctx = default_tower_context());

inline constexpr std::uint64_t kDefaultMaterializeCap = 1'000'000;

/// The maximum (2, C)-layered tree built in DFS order: the root gets 2^C
/// children and each is filled with 2^(C+pos) - 1 leaves before the next
/// one is inserted. Throws CapacityError (naming the size) above `cap`.
OrderedTree build_greedy_max_tree(std::uint64_t c, std::uint64_t cap = kDefaultMaterializeCap);

enum class OrderFilter { any, dfs_only };

/// Largest vertex count <= n_cap among all (k, C)-layered ordered trees, by
/// enumerating parent arrays. n_cap <= 8.
int brute_force_max_layered(const LayeredParams& p, int n_cap, OrderFilter filter = OrderFilter::any);
inline constexpr int kBruteForceTreeCap = 8;

/// Text format: line 1 is the vertex count t+1, then the parent of each of
/// vertices 1..t on its own line. '#' starts a comment line.
OrderedTree parse_tree(std::string_view text);
std::string serialize_tree(const OrderedTree& t);
OrderedTree load_tree(const std::string& path);

}  // namespace hyperclique
