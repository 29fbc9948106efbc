#pragma once

#include <type_traits>

#include "hyperclique/subsets.hpp"
#include "hyperclique/vertex_set.hpp"

namespace hyperclique {

/// Bron-Kerbosch style recursion for k-uniform hypergraphs.
///
/// Links is anything with k(), n() and link(VertexSet) -> VertexSet, where
/// link(T) for a (k-1)-set T is the set of w with T + {w} an edge. The
/// recursion state is (S, P, X) with S complete and P, X partitioning the
/// extenders of S. Extenders shrink as S grows, so a set is reported exactly
/// when it has no extenders at all.
///
/// Pivoting is used only for k = 2. For k >= 3 a vertex can be blocked by a
/// non-pairwise obstruction, so the pivot argument does not carry over.
template <typename Links, typename Visit>
class MaximalCliqueKernel {
 public:
  MaximalCliqueKernel(const Links& links, Visit& visit) : links_(links), visit_(visit) {}

  void run() { expand(VertexSet{}, VertexSet::range(links_.n()), VertexSet{}); }

  /// Vertices w such that s + {v, w} stays complete given s + {v} complete,
  /// intersected over all (k-2)-subsets R of s via link(R + {v}).
  VertexSet extension_filter(const VertexSet& s, Vertex v) const {
    VertexSet acc = VertexSet::range(links_.n());
    for_each_subset_of_size(s, links_.k() - 2, [&](const VertexSet& r) {
      acc &= links_.link(r.with(v));
      return !acc.empty();
    });
    return acc;
  }

 private:
  void expand(const VertexSet& s, VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) visit_(s);
      return;
    }
    VertexSet todo = p;
    if (links_.k() == 2) {
      Vertex pivot = -1;
      int best = -1;
      (p | x).for_each([&](Vertex u) {
        int c = (p & links_.link(VertexSet{u})).size();
        if (c > best) {
          best = c;
          pivot = u;
        }
      });
      todo = p - links_.link(VertexSet{pivot});
    }
    todo.for_each([&](Vertex v) {
      VertexSet filter = extension_filter(s, v).without(v);
      expand(s.with(v), p & filter, x & filter);
      p.erase(v);
      x.insert(v);
    });
  }

  const Links& links_;
  Visit& visit_;
};

template <typename Links, typename Visit>
void for_each_maximal_clique(const Links& links, Visit&& visit) {
  MaximalCliqueKernel<Links, std::remove_reference_t<Visit>> kernel(links, visit);
  kernel.run();
}

}  // namespace hyperclique
