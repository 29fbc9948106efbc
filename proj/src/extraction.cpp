#include "hyperclique/extraction.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "hyperclique/errors.hpp"

namespace hyperclique {

CliqueChain select_representatives(const SpectrumReport& spectrum, const Hypergraph& h, std::optional<int> c) {
  const int n = h.n();
  const int slack = c ? *c : n - spectrum.distinct_sizes;
  if (slack < 0) throw InputError("C must be non-negative");
  if (spectrum.distinct_sizes < n - slack)
    throw PreconditionError("insufficient distinct sizes: " + std::to_string(spectrum.distinct_sizes) + " < n - C = " +
                            std::to_string(n - slack));
  CliqueChain chain;
  chain.n = n;
  chain.C = slack;
  for (int size : spectrum.distinct_desc()) chain.cliques.push_back(spectrum.witnesses.at(size));
  for (std::size_t i = 0; i < chain.cliques.size(); ++i)
    if (chain.cliques[i].size() < n - slack - static_cast<int>(i))
      throw InvariantBreach("chain clique X_" + std::to_string(i) + " violates |X_i| >= n - C - i");
  return chain;
}

ExtractionResult extract_tree(const Hypergraph& h, std::optional<int> c) {
  ExtractionResult res;
  res.k = h.k();
  res.chain = select_representatives(clique_spectrum(h), h, c);
  CliqueChain& ch = res.chain;
  const int count = static_cast<int>(ch.cliques.size());
  const VertexSet all = h.vertices();

  std::vector<int> parents = {-1};
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(count));
  ch.A = {ch.cliques[0]};
  ch.B = {all - ch.cliques[0]};

  for (int next = 1; next < count; ++next) {
    const VertexSet& x = ch.cliques[next];
    int u = 0;
    for (;;) {
      const VertexSet trace = x & ch.B[u];
      int match = -1;
      for (int w : kids[u]) {
        if ((ch.cliques[w] & ch.B[u]) != trace) continue;
        if (match >= 0)
          throw InvariantBreach("descent from x_" + std::to_string(u) + " for x_" + std::to_string(next) +
                                " matches both x_" + std::to_string(match) + " and x_" + std::to_string(w));
        match = w;
      }
      if (match < 0) break;
      u = match;
    }
    parents.push_back(u);
    kids[u].push_back(next);
    ch.A.push_back(ch.A[u] & x);
    ch.B.push_back(ch.A[u] - ch.A.back());
  }

  res.tree = OrderedTree(std::move(parents));
  res.params = LayeredParams{h.k() - 1, static_cast<std::uint64_t>(ch.C)};
  res.certificate = decompose_paths(res.tree, ch);
  if (!is_layered(res.tree, res.params))
    throw InvariantBreach("extracted tree is not (" + std::to_string(res.params.k) + ", " + std::to_string(ch.C) +
                          ")-layered");
  return res;
}

std::vector<PathDecomposition> decompose_paths(const OrderedTree& tree, const CliqueChain& chain) {
  std::vector<PathDecomposition> out;
  for (int node = 1; node < tree.size(); ++node) {
    PathDecomposition d;
    d.node = node;
    for (int v = node; v >= 0; v = tree.parent(v)) d.path.push_back(v);
    std::reverse(d.path.begin(), d.path.end());
    d.S.push_back(VertexSet{});
    for (std::size_t i = 1; i < d.path.size(); ++i)
      d.S.push_back(chain.cliques[d.path[i]] & chain.B[d.path[i - 1]]);
    d.U = chain.A[node] | d.S.back();
    if (d.path.size() >= 2) d.W = chain.A[d.path[d.path.size() - 2]];
    out.push_back(std::move(d));
  }
  return out;
}

bool CertificateReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* CertificateReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

class Checker {
 public:
  // deque: references handed out stay valid as checks are added
  CheckResult& check(const std::string& name) {
    checks_.push_back(CheckResult{name, true, {}});
    return checks_.back();
  }
  static void fail(CheckResult& c, std::string why) {
    c.passed = false;
    if (c.violations.size() < 50) c.violations.push_back(std::move(why));
  }
  CertificateReport take() { return CertificateReport{{checks_.begin(), checks_.end()}}; }

 private:
  std::deque<CheckResult> checks_;
};

std::string node_name(int i) { return "x_" + std::to_string(i); }

}  // namespace

CertificateReport validate_certificate(const ExtractionResult& res, const Hypergraph& h) {
  Checker ck;
  const CliqueChain& ch = res.chain;
  const OrderedTree& tree = res.tree;
  const int count = static_cast<int>(ch.cliques.size());
  const int n = h.n();
  const VertexSet all = h.vertices();

  auto& shape = ck.check("structure");
  if (ch.n != n) Checker::fail(shape, "chain n = " + std::to_string(ch.n) + " but hypergraph has n = " + std::to_string(n));
  if (res.k != h.k()) Checker::fail(shape, "certificate k differs from the hypergraph");
  if (count == 0) Checker::fail(shape, "empty clique chain");
  if (tree.size() != count) Checker::fail(shape, "tree has " + std::to_string(tree.size()) + " nodes for " + std::to_string(count) + " cliques");
  if (static_cast<int>(ch.A.size()) != count || static_cast<int>(ch.B.size()) != count)
    Checker::fail(shape, "A/B lists do not match the chain length");
  if (static_cast<int>(res.certificate.size()) != count - 1) Checker::fail(shape, "certificate needs one path per non-root node");
  if (res.params.k != h.k() - 1 || res.params.C != static_cast<std::uint64_t>(ch.C))
    Checker::fail(shape, "layered parameters must be (k-1, C)");
  for (int i = 0; i < count; ++i)
    if (!ch.cliques[i].subset_of(all)) Checker::fail(shape, "clique " + node_name(i) + " leaves the vertex range");
  if (!shape.passed) return ck.take();

  auto& maximal = ck.check("chain cliques maximal");
  for (int i = 0; i < count; ++i)
    if (!is_maximal_clique(h, ch.cliques[i])) Checker::fail(maximal, node_name(i) + " is not a maximal clique");

  auto& sizes = ck.check("chain sizes");
  if (count < n - ch.C) Checker::fail(sizes, "t+1 = " + std::to_string(count) + " < n - C");
  for (int i = 0; i < count; ++i) {
    if (i > 0 && ch.cliques[i].size() >= ch.cliques[i - 1].size())
      Checker::fail(sizes, "sizes not strictly decreasing at " + node_name(i));
    if (ch.cliques[i].size() < n - ch.C - i) Checker::fail(sizes, "|X_" + std::to_string(i) + "| < n - C - i");
  }

  // Independent re-derivation of A and B from the tree and the cliques.
  auto& rederive = ck.check("A/B rederived");
  std::vector<VertexSet> a(static_cast<std::size_t>(count)), b(static_cast<std::size_t>(count));
  a[0] = ch.cliques[0];
  b[0] = all - a[0];
  for (int i = 1; i < count; ++i) {
    int u = tree.parent(i);
    a[i] = a[u] & ch.cliques[i];
    b[i] = a[u] - a[i];
  }
  for (int i = 0; i < count; ++i)
    if (a[i] != ch.A[i] || b[i] != ch.B[i]) Checker::fail(rederive, "stored A/B of " + node_name(i) + " differ from the derivation");

  auto& bdisj = ck.check("B disjoint from clique");
  auto& bsize = ck.check("B size bound");
  for (int i = 0; i < count; ++i) {
    if (!ch.B[i].disjoint(ch.cliques[i])) Checker::fail(bdisj, "B_" + std::to_string(i) + " meets X_" + std::to_string(i));
    if (ch.B[i].size() > ch.C + i) Checker::fail(bsize, "|B_" + std::to_string(i) + "| > C + i");
  }

  auto& paths = ck.check("paths rederived");
  const std::vector<PathDecomposition> derived = decompose_paths(tree, CliqueChain{ch.cliques, a, b, ch.C, ch.n});
  for (int i = 0; i + 1 < count; ++i) {
    const PathDecomposition &got = res.certificate[i], &want = derived[i];
    if (got.node != want.node || got.path != want.path || got.S != want.S || got.U != want.U || got.W != want.W)
      Checker::fail(paths, "stored path data of " + node_name(i + 1) + " differ from the derivation");
  }

  auto& nonempty = ck.check("S nonempty");
  auto& disjoint = ck.check("S pairwise disjoint");
  auto& partition = ck.check("vertex partition");
  auto& decomposition = ck.check("clique decomposition");
  auto& containment = ck.check("containment chain");
  for (const PathDecomposition& d : res.certificate) {
    const int r = static_cast<int>(d.path.size()) - 1;
    if (r < 1 || static_cast<int>(d.S.size()) != r + 1 || d.path.front() != 0) {
      Checker::fail(nonempty, "malformed path record for " + node_name(d.node));
      continue;
    }
    bool ids_ok = std::all_of(d.path.begin(), d.path.end(), [&](int y) { return y >= 0 && y < count; });
    if (!ids_ok) {
      Checker::fail(partition, "path of " + node_name(d.node) + " names an unknown node");
      continue;
    }
    const std::string where = " on the path to " + node_name(d.node);
    for (int i = 1; i <= r; ++i) {
      if (d.S[i].empty()) Checker::fail(nonempty, "S_" + std::to_string(i) + " is empty" + where);
      for (int j = 1; j < i; ++j)
        if (!d.S[i].disjoint(d.S[j]))
          Checker::fail(disjoint, "S_" + std::to_string(j) + " and S_" + std::to_string(i) + " overlap" + where);
    }

    // V = A_{y_r} + B_{y_r} + B_{y_{r-1}} + ... + B_{y_0}, all disjoint
    VertexSet seen = ch.A[d.path[r]];
    bool disjoint_parts = true;
    for (int i = r; i >= 0; --i) {
      const VertexSet& part = ch.B[d.path[i]];
      if (!seen.disjoint(part)) disjoint_parts = false;
      seen |= part;
    }
    if (!disjoint_parts || seen != all) Checker::fail(partition, "A/B sets do not partition V" + where);

    // X_{y_j} = A_{y_j} + S_1 + ... + S_j
    VertexSet acc;
    for (int j = 1; j <= r; ++j) {
      acc |= d.S[j];
      const VertexSet& xj = ch.cliques[d.path[j]];
      bool parts_disjoint = ch.A[d.path[j]].disjoint(acc);
      if (!parts_disjoint || (ch.A[d.path[j]] | acc) != xj)
        Checker::fail(decomposition, "X_" + std::to_string(d.path[j]) + " != A + S_1..S_" + std::to_string(j) + where);
    }

    // U | W | union_{i in [r-1], i != j} S_i  is inside X_{y_{j-1}} for j in [r-1]
    if (!d.W) {
      Checker::fail(containment, "missing W" + where);
    } else {
      VertexSet uw = d.U | *d.W;
      for (int j = 1; j <= r - 1; ++j) {
        VertexSet lhs = uw;
        for (int i = 1; i <= r - 1; ++i)
          if (i != j) lhs |= d.S[i];
        if (!lhs.subset_of(ch.cliques[d.path[j - 1]]))
          Checker::fail(containment, "U, W and S_i (i != " + std::to_string(j) + ") escape X_" +
                                         std::to_string(d.path[j - 1]) + where);
      }
    }
  }

  // X_w & B_u == X_v & B_u for v a proper descendant of u and w under v.
  auto& stability = ck.check("descendant stability");
  auto& children_distinct = ck.check("children distinct nonempty B-subsets");
  for (int u = 0; u < count; ++u) {
    const std::vector<int> kids = tree.children(u);
    std::vector<VertexSet> traces;
    for (int v : kids) {
      VertexSet tv = ch.cliques[v] & ch.B[u];
      if (tv.empty()) Checker::fail(children_distinct, node_name(v) + " meets B_" + std::to_string(u) + " trivially");
      if (std::find(traces.begin(), traces.end(), tv) != traces.end())
        Checker::fail(children_distinct, "two children of " + node_name(u) + " share the trace " + tv.to_string());
      traces.push_back(tv);
    }
  }
  for (int w = 1; w < count; ++w) {
    // ancestors v of w (v != root of comparison u), and u strict ancestor of v
    for (int v = w; v > 0; v = tree.parent(v))
      for (int u = tree.parent(v); u >= 0; u = tree.parent(u))
        if ((ch.cliques[w] & ch.B[u]) != (ch.cliques[v] & ch.B[u]))
          Checker::fail(stability, "X_" + std::to_string(w) + " and X_" + std::to_string(v) + " differ on B_" + std::to_string(u));
  }

  auto& distance = ck.check("distance");
  auto& degree = ck.check("degree");
  for (const LayeredViolation& v : validate_layered(tree, res.params)) {
    if (v.kind == LayeredViolation::Kind::depth)
      Checker::fail(distance, v.message);
    else
      Checker::fail(degree, v.message);
  }
  return ck.take();
}

Fact1Outcome check_fact1(const Hypergraph& h, const std::vector<VertexSet>& sets) {
  if (static_cast<int>(sets.size()) != h.k() + 1)
    throw InputError("Fact 1 check needs exactly k+1 = " + std::to_string(h.k() + 1) + " sets, got " +
                     std::to_string(sets.size()));
  Fact1Outcome out;
  out.hypotheses_hold = true;
  VertexSet full;
  for (const auto& s : sets) full |= s;
  for (std::size_t i = 0; i < sets.size() && out.hypotheses_hold; ++i) {
    VertexSet rest;
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (j != i) rest |= sets[j];
    out.hypotheses_hold = is_complete(h, rest);
  }
  out.conclusion_holds = is_complete(h, full);
  return out;
}

}  // namespace hyperclique
