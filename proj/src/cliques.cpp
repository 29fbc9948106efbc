#include "hyperclique/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "hyperclique/clique_kernel.hpp"
#include "hyperclique/errors.hpp"
#include "hyperclique/subsets.hpp"

namespace hyperclique {

namespace {

void check_range(const Hypergraph& h, const VertexSet& s) {
  if (!s.subset_of(h.vertices()))
    throw InputError("vertex set " + s.to_string() + " has a member outside [0, " + std::to_string(h.n() - 1) + "]");
}

void sort_lex(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
}

}  // namespace

std::vector<int> SpectrumReport::distinct_desc() const {
  std::vector<int> out;
  for (auto it = witnesses.rbegin(); it != witnesses.rend(); ++it) out.push_back(it->first);
  return out;
}

bool is_complete(const Hypergraph& h, const VertexSet& s) {
  check_range(h, s);
  if (s.size() < h.k()) return true;
  // Every k-subset is some (k-1)-subset t plus one more member of s.
  return for_each_subset_of_size(s, h.k() - 1, [&](const VertexSet& t) { return (s - t).subset_of(h.link(t)); });
}

VertexSet extenders(const Hypergraph& h, const VertexSet& s) {
  if (!is_complete(h, s)) throw PreconditionError("extenders: " + s.to_string() + " is not complete");
  VertexSet acc = h.vertices();
  for_each_subset_of_size(s, h.k() - 1, [&](const VertexSet& t) {
    acc &= h.link(t);
    return !acc.empty();
  });
  return acc - s;
}

bool is_maximal_clique(const Hypergraph& h, const VertexSet& s) {
  return is_complete(h, s) && extenders(h, s).empty();
}

std::vector<VertexSet> enumerate_maximal_cliques(const Hypergraph& h) {
  std::vector<VertexSet> out;
  for_each_maximal_clique(h, [&](const VertexSet& c) { out.push_back(c); });
  sort_lex(out);
  return out;
}

std::vector<VertexSet> brute_force_maximal_cliques(const Hypergraph& h) {
  if (h.n() > kBruteForceMaxVertices)
    throw CapacityError("brute force scans 2^n subsets; n = " + std::to_string(h.n()) + " exceeds " +
                        std::to_string(kBruteForceMaxVertices));
  const std::uint32_t limit = std::uint32_t{1} << h.n();
  std::vector<std::uint8_t> complete(limit, 0);
  for (std::uint32_t m = 0; m < limit; ++m) {
    VertexSet s = VertexSet::from_words(m);
    bool ok = true;
    if (s.size() >= h.k())
      ok = for_each_subset_of_size(s, h.k(), [&](const VertexSet& e) { return h.has_edge(e); });
    complete[m] = ok;
  }
  std::vector<VertexSet> out;
  for (std::uint32_t m = 0; m < limit; ++m) {
    if (!complete[m]) continue;
    bool maximal = true;
    for (int v = 0; v < h.n() && maximal; ++v)
      if (!((m >> v) & 1U) && complete[m | (std::uint32_t{1} << v)]) maximal = false;
    if (maximal) out.push_back(VertexSet::from_words(m));
  }
  sort_lex(out);
  return out;
}

SpectrumReport clique_spectrum(const Hypergraph& h) {
  SpectrumReport rep;
  for (const VertexSet& c : enumerate_maximal_cliques(h)) {
    rep.sizes.push_back(c.size());
    // Cliques arrive in lexicographic order, so the first of each size wins.
    rep.witnesses.try_emplace(c.size(), c);
  }
  std::sort(rep.sizes.rbegin(), rep.sizes.rend());
  rep.distinct_sizes = static_cast<int>(rep.witnesses.size());
  return rep;
}

int distinct_clique_sizes(const Hypergraph& h) {
  std::uint64_t seen[3] = {0, 0, 0};
  for_each_maximal_clique(h, [&](const VertexSet& c) {
    int sz = c.size();
    seen[sz >> 6] |= std::uint64_t{1} << (sz & 63);
  });
  return std::popcount(seen[0]) + std::popcount(seen[1]) + std::popcount(seen[2]);
}

}  // namespace hyperclique
