#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperclique {

using Vertex = int;

/// Largest vertex count supported by VertexSet.
inline constexpr int kMaxVertices = 128;

/// Fixed-width bitset over vertices 0..127.
///
/// Membership is O(1) and cardinality uses popcount. Iteration with
/// for_each visits members in increasing order.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet range(int n) {
    VertexSet s;
    if (n >= 64) {
      s.w_[0] = ~std::uint64_t{0};
      s.w_[1] = n >= 128 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 64)) - 1;
    } else if (n > 0) {
      s.w_[0] = (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  static VertexSet from_words(std::uint64_t lo, std::uint64_t hi = 0) {
    VertexSet s;
    s.w_ = {lo, hi};
    return s;
  }

  static VertexSet from_vector(const std::vector<Vertex>& members) {
    VertexSet s;
    for (Vertex v : members) s.insert(v);
    return s;
  }

  bool contains(Vertex v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }
  void insert(Vertex v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  bool empty() const { return (w_[0] | w_[1]) == 0; }

  /// Smallest member, or -1 when empty.
  Vertex first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  VertexSet operator|(const VertexSet& o) const { return from_words(w_[0] | o.w_[0], w_[1] | o.w_[1]); }
  VertexSet operator&(const VertexSet& o) const { return from_words(w_[0] & o.w_[0], w_[1] & o.w_[1]); }
  /// Set difference.
  VertexSet operator-(const VertexSet& o) const { return from_words(w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]); }
  VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
  VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
  VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

  /// Complement within {0..n-1}.
  VertexSet complement(int n) const { return range(n) - *this; }

  bool subset_of(const VertexSet& o) const { return (*this - o).empty(); }
  bool disjoint(const VertexSet& o) const { return (*this & o).empty(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    VertexSet diff = from_words(a.w_[0] ^ b.w_[0], a.w_[1] ^ b.w_[1]);
    if (diff.empty()) return false;
    Vertex d = diff.first();
    // Members below d are shared. The list holding d is smaller unless the
    // other list ends there (a proper prefix).
    VertexSet below = range(d);
    if (a.contains(d)) return !(b - below).empty();
    return (a - below).empty();
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int word = 0; word < 2; ++word) {
      std::uint64_t bits = w_[word];
      while (bits) {
        f(static_cast<Vertex>(word * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::uint64_t word(int i) const { return w_[i]; }

  std::string to_string() const;

 private:
  std::array<std::uint64_t, 2> w_{0, 0};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = s.word(0) * 0x9E3779B97F4A7C15ULL;
    h ^= s.word(1) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

}  // namespace hyperclique
