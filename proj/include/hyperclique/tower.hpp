#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperclique {

using BigNat = boost::multiprecision::cpp_int;

/// Limits for tower arithmetic.
struct TowerContext {
  /// Exact values are kept while they are below 2^bit_cap.
  std::uint64_t bit_cap = std::uint64_t{1} << 20;
  /// Longest loop the bound recursions will unroll before giving up on an
  /// upper bound.
  std::uint64_t iteration_limit = 4096;
};

const TowerContext& default_tower_context();

/// A number 2^2^...^2^top with `height` twos, or +infinity.
///
/// Normal form: height == 0 means the exact value `top` (< 2^bit_cap);
/// height >= 1 means bit_cap <= top < 2^bit_cap, so no level could be
/// expanded exactly. Comparison does not depend on the cap.
struct TowerBound {
  std::uint64_t height = 0;
  BigNat top = 0;
  bool infinite = false;

  static TowerBound exact(BigNat v) { return TowerBound{0, std::move(v), false}; }
  static TowerBound infinity() { return TowerBound{0, 0, true}; }

  friend bool operator==(const TowerBound& a, const TowerBound& b) {
    return a.infinite == b.infinite && (a.infinite || (a.height == b.height && a.top == b.top));
  }

  std::string to_string() const;
};

/// Exact three-way comparison of two bounds.
int compare(const TowerBound& a, const TowerBound& b);

enum class Certified { less, equal, greater, indeterminate };

const char* to_string(Certified c);

/// A natural number known exactly or through a certified enclosure
/// lower <= value <= upper. Every operation keeps the enclosure valid.
class TowerInt {
 public:
  TowerInt() : lo_(TowerBound::exact(0)), hi_(TowerBound::exact(0)) {}
  TowerInt(std::uint64_t v) : lo_(TowerBound::exact(v)), hi_(TowerBound::exact(v)) {}  // NOLINT
  static TowerInt exact(const BigNat& v, const TowerContext& ctx = default_tower_context());
  static TowerInt enclosure(TowerBound lo, TowerBound hi);

  bool is_exact() const { return lo_.height == 0 && !lo_.infinite && lo_ == hi_; }
  /// Exact value; throws std::logic_error if the value is an enclosure.
  const BigNat& value() const;
  /// Exact value if it fits in 64 bits.
  std::optional<std::uint64_t> to_u64() const;

  const TowerBound& lower() const { return lo_; }
  const TowerBound& upper() const { return hi_; }

  /// "123" for exact values, otherwise "[lower, upper]".
  std::string to_string() const;

 private:
  TowerBound lo_, hi_;
};

TowerInt add(const TowerInt& a, const TowerInt& b, const TowerContext& ctx = default_tower_context());
TowerInt pow2(const TowerInt& x, const TowerContext& ctx = default_tower_context());

/// less/greater/equal only when the enclosures prove it.
Certified compare(const TowerInt& a, const TowerInt& b);

/// Parses "d" (decimal) or "2^2^...^d" (right-associative). Throws InputError.
TowerInt parse_tower_literal(std::string_view text, const TowerContext& ctx = default_tower_context());

/// Number of bits of v (0 for v == 0).
std::uint64_t bit_length(const BigNat& v);

}  // namespace hyperclique
