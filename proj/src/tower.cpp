#include "hyperclique/tower.hpp"

#include <stdexcept>

#include "hyperclique/errors.hpp"

namespace hyperclique {

namespace {

enum class Round { down, up };

BigNat pow2_exact(std::uint64_t e) {
  BigNat r = 0;
  boost::multiprecision::bit_set(r, static_cast<unsigned>(e));
  return r;
}

/// Brings b into normal form. Collapsing levels is exact; lifting an
/// oversized top to one more level rounds in direction `dir`.
TowerBound normalize(TowerBound b, Round dir, const TowerContext& ctx) {
  if (b.infinite) return b;
  const BigNat cap = ctx.bit_cap;
  for (;;) {
    if (b.height >= 1 && b.top < cap) {
      b.top = pow2_exact(static_cast<std::uint64_t>(b.top));
      --b.height;
      continue;
    }
    std::uint64_t bits = bit_length(b.top);
    if (bits > ctx.bit_cap) {
      // 2^(bits-1) <= top < 2^bits
      b.top = dir == Round::up ? bits : bits - 1;
      ++b.height;
      continue;
    }
    return b;
  }
}

/// Sign of (height d over t) - e, for d >= 1.
int compare_tower_exact(std::uint64_t d, BigNat t, const BigNat& e) {
  while (d > 0) {
    // The stack is at least 2^t.
    if (t >= bit_length(e)) return 1;
    t = pow2_exact(static_cast<std::uint64_t>(t));
    --d;
  }
  return t < e ? -1 : (t > e ? 1 : 0);
}

TowerBound pow2_bound(const TowerBound& b, Round dir, const TowerContext& ctx) {
  if (b.infinite) return b;
  return normalize(TowerBound{b.height + 1, b.top, false}, dir, ctx);
}

const TowerBound& max_bound(const TowerBound& a, const TowerBound& b) { return compare(a, b) >= 0 ? a : b; }

std::string big_to_string(const BigNat& v) {
  if (bit_length(v) <= 256) return v.str();
  return "<" + std::to_string(bit_length(v)) + "-bit integer>";
}

}  // namespace

const TowerContext& default_tower_context() {
  static const TowerContext ctx;
  return ctx;
}

std::uint64_t bit_length(const BigNat& v) {
  if (v == 0) return 0;
  return static_cast<std::uint64_t>(boost::multiprecision::msb(v)) + 1;
}

int compare(const TowerBound& a, const TowerBound& b) {
  if (a.infinite || b.infinite) return a.infinite == b.infinite ? 0 : (a.infinite ? 1 : -1);
  if (a.height == b.height) return a.top < b.top ? -1 : (a.top > b.top ? 1 : 0);
  // Peel the common levels; 2^x is strictly increasing.
  if (a.height > b.height) return compare_tower_exact(a.height - b.height, a.top, b.top);
  return -compare_tower_exact(b.height - a.height, b.top, a.top);
}

std::string TowerBound::to_string() const {
  if (infinite) return "inf";
  std::string prefix;
  if (height <= 6) {
    for (std::uint64_t i = 0; i < height; ++i) prefix += "2^";
  } else {
    prefix = "2^^" + std::to_string(height) + "^";
  }
  return prefix + big_to_string(top);
}

const char* to_string(Certified c) {
  switch (c) {
    case Certified::less:
      return "less";
    case Certified::equal:
      return "equal";
    case Certified::greater:
      return "greater";
    case Certified::indeterminate:
      break;
  }
  return "indeterminate";
}

TowerInt TowerInt::exact(const BigNat& v, const TowerContext& ctx) {
  return enclosure(normalize(TowerBound::exact(v), Round::down, ctx), normalize(TowerBound::exact(v), Round::up, ctx));
}

TowerInt TowerInt::enclosure(TowerBound lo, TowerBound hi) {
  if (lo.infinite) throw std::logic_error("tower enclosure needs a finite lower bound");
  if (compare(lo, hi) > 0) throw std::logic_error("tower enclosure with lower > upper");
  TowerInt t;
  t.lo_ = std::move(lo);
  t.hi_ = std::move(hi);
  return t;
}

const BigNat& TowerInt::value() const {
  if (!is_exact()) throw std::logic_error("TowerInt is an enclosure, not an exact value");
  return lo_.top;
}

std::optional<std::uint64_t> TowerInt::to_u64() const {
  if (!is_exact() || bit_length(lo_.top) > 64) return std::nullopt;
  return static_cast<std::uint64_t>(lo_.top);
}

std::string TowerInt::to_string() const {
  if (is_exact()) return big_to_string(lo_.top);
  if (lo_ == hi_) return lo_.to_string();
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

TowerInt add(const TowerInt& a, const TowerInt& b, const TowerContext& ctx) {
  const TowerBound &alo = a.lower(), &blo = b.lower();
  TowerBound lo = (alo.height == 0 && blo.height == 0) ? normalize(TowerBound::exact(alo.top + blo.top), Round::down, ctx)
                                                       : max_bound(alo, blo);

  const TowerBound &ahi = a.upper(), &bhi = b.upper();
  TowerBound hi;
  if (ahi.infinite || bhi.infinite) {
    hi = TowerBound::infinity();
  } else if (ahi.height == 0 && bhi.height == 0) {
    hi = normalize(TowerBound::exact(ahi.top + bhi.top), Round::up, ctx);
  } else {
    // x + y <= 2 max(x, y), and 2 * (h over t) <= (h over t+1) for h >= 1.
    const TowerBound& m = max_bound(ahi, bhi);
    hi = normalize(TowerBound{m.height, m.top + 1, false}, Round::up, ctx);
  }
  return TowerInt::enclosure(std::move(lo), std::move(hi));
}

TowerInt pow2(const TowerInt& x, const TowerContext& ctx) {
  return TowerInt::enclosure(pow2_bound(x.lower(), Round::down, ctx), pow2_bound(x.upper(), Round::up, ctx));
}

Certified compare(const TowerInt& a, const TowerInt& b) {
  if (a.is_exact() && b.is_exact()) {
    int c = compare(a.lower(), b.lower());
    return c < 0 ? Certified::less : (c > 0 ? Certified::greater : Certified::equal);
  }
  if (compare(a.upper(), b.lower()) < 0) return Certified::less;
  if (compare(a.lower(), b.upper()) > 0) return Certified::greater;
  // Identical finite point enclosures denote the same number.
  if (a.lower() == a.upper() && b.lower() == b.upper() && a.lower() == b.lower() && !a.upper().infinite)
    return Certified::equal;
  return Certified::indeterminate;
}

TowerInt parse_tower_literal(std::string_view text, const TowerContext& ctx) {
  if (text.empty()) throw InputError("empty tower literal");
  std::uint64_t height = 0;
  std::string_view rest = text;
  for (;;) {
    std::size_t caret = rest.find('^');
    if (caret == std::string_view::npos) break;
    if (rest.substr(0, caret) != "2") throw InputError("tower literal must look like 2^2^...^d: " + std::string(text));
    ++height;
    rest.remove_prefix(caret + 1);
  }
  if (rest.empty()) throw InputError("tower literal ends without a decimal top: " + std::string(text));
  for (char c : rest)
    if (c < '0' || c > '9') throw InputError("tower literal has a non-decimal top: " + std::string(text));
  BigNat top{std::string(rest)};
  TowerBound b{height, top, false};
  return TowerInt::enclosure(normalize(b, Round::down, ctx), normalize(b, Round::up, ctx));
}

}  // namespace hyperclique
