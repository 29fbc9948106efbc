#include "hyperclique/subsets.hpp"

#include <array>
#include <limits>

namespace hyperclique {

namespace {

struct BinomTable {
  std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1> c{};
  BinomTable() {
    constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();
    for (int n = 0; n <= kMaxVertices; ++n) {
      c[n][0] = 1;
      for (int r = 1; r <= n; ++r) {
        std::uint64_t a = c[n - 1][r - 1], b = c[n - 1][r];
        c[n][r] = (a > kSat - b) ? kSat : a + b;
      }
    }
  }
};

const BinomTable& table() {
  static const BinomTable t;
  return t;
}

}  // namespace

std::uint64_t binom(int n, int r) {
  if (n < 0 || r < 0 || r > n || n > kMaxVertices) return 0;
  return table().c[n][r];
}

std::uint64_t colex_rank(const VertexSet& s) {
  std::uint64_t rank = 0;
  int i = 1;
  s.for_each([&](Vertex v) { rank += binom(v, i++); });
  return rank;
}

std::vector<VertexSet> lex_subsets(int n, int r) {
  std::vector<VertexSet> out;
  for_each_subset_of_size(VertexSet::range(n), r, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace hyperclique
