#include "hyperclique/layered_tree.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hyperclique/bounds.hpp"
#include "hyperclique/errors.hpp"

namespace hyperclique {

OrderedTree::OrderedTree(std::vector<int> parents) : parents_(std::move(parents)) {
  if (parents_.empty()) throw InputError("tree needs at least one vertex");
  if (parents_[0] != -1) throw InputError("vertex 0 is the root and has no parent");
  depth_.assign(parents_.size(), 0);
  degree_.assign(parents_.size(), 0);
  for (std::size_t i = 1; i < parents_.size(); ++i) {
    int p = parents_[i];
    if (p < 0 || static_cast<std::size_t>(p) >= i)
      throw InputError("vertex " + std::to_string(i) + " must attach to an earlier vertex, got parent " +
                       std::to_string(p));
    depth_[i] = depth_[p] + 1;
    ++degree_[i];
    ++degree_[p];
  }
}

std::vector<int> OrderedTree::children(int i) const {
  std::vector<int> out;
  for (int v = i + 1; v < size(); ++v)
    if (parents_[v] == i) out.push_back(v);
  return out;
}

std::vector<int> OrderedTree::root_children() const { return children(0); }

OrderedTree OrderedTree::with_leaf(int parent) const {
  std::vector<int> p = parents_;
  p.push_back(parent);
  return OrderedTree(std::move(p));
}

namespace {

/// deg <= 2^(C+i); any exponent >= 63 exceeds every representable degree.
bool degree_ok(int degree, std::uint64_t c, int i) {
  std::uint64_t e = c + static_cast<std::uint64_t>(i);
  if (e >= 63) return true;
  return static_cast<std::uint64_t>(degree) <= (std::uint64_t{1} << e);
}

}  // namespace

std::vector<LayeredViolation> validate_layered(const OrderedTree& t, const LayeredParams& p) {
  std::vector<LayeredViolation> out;
  for (int i = 0; i < t.size(); ++i) {
    if (t.depth(i) > p.k)
      out.push_back({i, LayeredViolation::Kind::depth,
                     "v_" + std::to_string(i) + ": dist(v_0, v_i) = " + std::to_string(t.depth(i)) + " > k = " +
                         std::to_string(p.k)});
    if (!degree_ok(t.degree(i), p.C, i))
      out.push_back({i, LayeredViolation::Kind::degree,
                     "v_" + std::to_string(i) + ": degree " + std::to_string(t.degree(i)) + " > 2^(C+i) = 2^" +
                         std::to_string(p.C + static_cast<std::uint64_t>(i))});
  }
  return out;
}

OrderedTree contract(const OrderedTree& t, int i) {
  const std::vector<int> xs = t.root_children();
  const int m = static_cast<int>(xs.size());
  if (i < 1 || i > m)
    throw InputError("contract: i = " + std::to_string(i) + " outside [1, " + std::to_string(m) + "]");
  const int end = (i < m) ? xs[i] : t.size();  // x_{i+1}, or t+1

  std::vector<int> index(static_cast<std::size_t>(end), -1);
  for (int j = 0; j < i; ++j) index[xs[j]] = 0;
  std::vector<int> parents = {-1};
  for (int v = 1; v < end; ++v) {
    if (index[v] == 0) continue;
    // Every non-root vertex before x_{i+1} lies under one of x_1..x_i.
    index[v] = static_cast<int>(parents.size());
    parents.push_back(index[t.parent(v)]);
  }
  return OrderedTree(std::move(parents));
}

bool is_dfs_order(const OrderedTree& t) {
  std::vector<int> path = {0};
  for (int v = 1; v < t.size(); ++v) {
    int p = t.parent(v);
    while (!path.empty() && path.back() != p) path.pop_back();
    if (path.empty()) return false;
    path.push_back(v);
  }
  return true;
}

MaxSize max_layered_size(const LayeredParams& p, const TowerContext& ctx) {
  if (p.k < 1) throw InputError("layered trees need k >= 1");
  if (p.k == 1) return {add(pow2(TowerInt(p.C), ctx), TowerInt(1), ctx), Exactness::exact};
  if (p.k == 2) {
    if (p.C >= 63) throw CapacityError("a_{2^C} needs 2^C iterations; C = " + std::to_string(p.C) + " is too large");
    return {a_sequence(p.C, std::uint64_t{1} << p.C, ctx), Exactness::exact};
  }
  return {N0_upper_bound(static_cast<std::uint64_t>(p.k), TowerInt(p.C), N0Variant::claim23, ctx),
          Exactness::upper_bound};
}

OrderedTree build_greedy_max_tree(std::uint64_t c, std::uint64_t cap) {
  if (c >= 63) throw CapacityError("2^C root children do not fit in memory for C = " + std::to_string(c));
  const std::uint64_t root_children = std::uint64_t{1} << c;
  TowerInt total = a_sequence(c, root_children);
  std::optional<std::uint64_t> n = total.to_u64();
  if (!n || *n > cap)
    throw CapacityError("the maximum (2," + std::to_string(c) + ")-layered tree has " + total.to_string() +
                        " vertices, above the cap of " + std::to_string(cap));
  std::vector<int> parents = {-1};
  parents.reserve(*n);
  for (std::uint64_t j = 0; j < root_children; ++j) {
    const int child = static_cast<int>(parents.size());
    parents.push_back(0);
    const std::uint64_t leaves = (std::uint64_t{1} << (c + static_cast<std::uint64_t>(child))) - 1;
    for (std::uint64_t l = 0; l < leaves; ++l) parents.push_back(child);
  }
  if (parents.size() != *n) throw InvariantBreach("greedy tree size disagrees with a_{2^C}");
  return OrderedTree(std::move(parents));
}

namespace {

struct TreeSearch {
  LayeredParams p;
  int cap;
  OrderFilter filter;
  std::vector<int> parents, depth, degree, path;
  int best = 0;

  // Extends a valid prefix by one vertex in every admissible way.
  void grow() {
    const int n = static_cast<int>(parents.size());
    best = std::max(best, n);
    if (n == cap || best == cap) return;
    for (int par = 0; par < n; ++par) {
      if (depth[par] + 1 > p.k) continue;
      if (!degree_ok(degree[par] + 1, p.C, par)) continue;
      if (!degree_ok(1, p.C, n)) continue;
      std::vector<int> saved_path;
      if (filter == OrderFilter::dfs_only) {
        auto it = std::find(path.begin(), path.end(), par);
        if (it == path.end()) continue;
        saved_path = path;
        path.erase(it + 1, path.end());
        path.push_back(n);
      }
      parents.push_back(par);
      depth.push_back(depth[par] + 1);
      degree.push_back(1);
      ++degree[par];
      grow();
      --degree[par];
      degree.pop_back();
      depth.pop_back();
      parents.pop_back();
      if (filter == OrderFilter::dfs_only) path = std::move(saved_path);
    }
  }
};

}  // namespace

int brute_force_max_layered(const LayeredParams& p, int n_cap, OrderFilter filter) {
  if (n_cap < 1 || n_cap > kBruteForceTreeCap)
    throw CapacityError("brute force over parent arrays supports 1 <= n_cap <= " +
                        std::to_string(kBruteForceTreeCap));
  if (p.k < 1) throw InputError("layered trees need k >= 1");
  // Prefixes of layered (or DFS-ordered) trees are again layered (DFS-ordered).
  TreeSearch s{p, n_cap, filter, {-1}, {0}, {0}, {0}};
  if (!degree_ok(0, p.C, 0)) return 0;
  s.grow();
  return s.best;
}

OrderedTree parse_tree(std::string_view text) {
  std::vector<int> parents;
  long long expected = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || ptr != line.data() + line.size())
      throw ParseError(line_no, "expected a base-10 integer, got \"" + std::string(line) + "\"");
    if (expected < 0) {
      if (v < 1) throw ParseError(line_no, "vertex count must be at least 1");
      expected = v;
      parents.push_back(-1);
      continue;
    }
    const long long i = static_cast<long long>(parents.size());
    if (i >= expected) throw ParseError(line_no, "more parent lines than the declared " + std::to_string(expected) + " vertices");
    if (v < 0 || v >= i)
      throw ParseError(line_no, "parent of vertex " + std::to_string(i) + " must be in [0, " + std::to_string(i - 1) + "]");
    parents.push_back(static_cast<int>(v));
  }
  if (expected < 0) throw ParseError(line_no, "missing vertex count");
  if (static_cast<long long>(parents.size()) != expected)
    throw ParseError(line_no, "declared " + std::to_string(expected) + " vertices but found " +
                                  std::to_string(parents.size()));
  return OrderedTree(std::move(parents));
}

std::string serialize_tree(const OrderedTree& t) {
  std::ostringstream out;
  out << t.size() << '\n';
  for (int i = 1; i < t.size(); ++i) out << t.parent(i) << '\n';
  return out.str();
}

OrderedTree load_tree(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tree(buf.str());
}

}  // namespace hyperclique
