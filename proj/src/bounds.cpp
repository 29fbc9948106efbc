#include "hyperclique/bounds.hpp"

#include <cmath>
#include <limits>

#include "hyperclique/errors.hpp"

namespace hyperclique {

namespace {

std::uint64_t log_star_exact(BigNat x) {
  std::uint64_t i = 0;
  for (;;) {
    ++i;
    x = bit_length(x) - 1;  // floor(log2 x)
    if (x == 0) return i;
  }
}

std::uint64_t log_star_bound(const TowerBound& b) {
  if (b.infinite) throw PreconditionError("log*: unbounded enclosure cannot be certified");
  // The first `height` logarithms are exact and stay >= top >= 1.
  return b.height + log_star_exact(b.top);
}

bool is_pow2(const BigNat& v) { return v != 0 && (v & (v - 1)) == 0; }

double log2_big(const BigNat& v) {
  std::uint64_t bits = bit_length(v);
  if (bits <= 64) return std::log2(static_cast<double>(static_cast<std::uint64_t>(v)));
  std::uint64_t head = static_cast<std::uint64_t>(v >> static_cast<unsigned>(bits - 64));
  return std::log2(static_cast<double>(head)) + static_cast<double>(bits - 64);
}

double to_double(const BigNat& v) {
  if (bit_length(v) > 1000) return std::numeric_limits<double>::infinity();
  return static_cast<double>(v);
}

/// Keeps a rounded real inside [floor, floor + 1), the interval the exact
/// integer iteration proves it lies in.
double clamp_to_floor(double value, const BigNat& floor_value) {
  double lo = to_double(floor_value);
  if (value < lo) return lo;
  double hi = lo + 1.0;
  if (value >= hi) return std::nextafter(hi, 0.0);
  return value;
}

void require_positive(const TowerInt& x, const char* what) {
  if (compare(x, TowerInt(1)) == Certified::less) throw InputError(std::string(what) + ": argument must be >= 1");
}

}  // namespace

std::uint64_t log_star(const TowerInt& x) {
  require_positive(x, "log*");
  std::uint64_t lo = log_star_bound(x.lower());
  std::uint64_t hi = log_star_bound(x.upper());
  if (lo != hi)
    throw PreconditionError("log*: enclosure " + x.to_string() + " straddles a boundary (" + std::to_string(lo) +
                            " vs " + std::to_string(hi) + "), cannot certify");
  return lo;
}

IterLogResult iterated_log(const TowerInt& x, std::uint64_t i) {
  std::uint64_t ls = log_star(x);
  if (i > ls)
    throw InputError("iterated log: " + std::to_string(i) + " iterations exceed log* = " + std::to_string(ls));
  const TowerBound& b = x.lower();
  if (!(b == x.upper())) throw PreconditionError("iterated log needs an exact value or an exact tower");

  IterLogResult r;
  r.iterations = i;
  if (i < b.height) {
    // Still at least one exponential above the top; far beyond double range.
    r.value = std::numeric_limits<double>::infinity();
    r.exact = true;
    return r;
  }
  BigNat v = b.top;
  std::uint64_t steps = i - b.height;
  // Integer phase: exact while v is a power of two.
  while (steps > 0 && is_pow2(v)) {
    v = bit_length(v) - 1;
    --steps;
  }
  if (steps == 0) {
    r.value = to_double(v);
    r.exact = true;
    return r;
  }
  BigNat floor_chain = v;
  double d = 0;
  bool first = true;
  while (steps > 0) {
    d = first ? log2_big(v) : std::log2(d);
    first = false;
    floor_chain = bit_length(floor_chain) - 1;
    d = clamp_to_floor(d, floor_chain);
    --steps;
  }
  r.value = d;
  return r;
}

double f3_lower_bound(const TowerInt& n) {
  require_positive(n, "f3 lower bound");
  return std::log2(static_cast<double>(log_star(add(n, TowerInt(1))))) - 1.0;
}

TowerInt a_sequence(std::uint64_t c, std::uint64_t i, const TowerContext& ctx) {
  if (c < 63 && i > (std::uint64_t{1} << c))
    throw InputError("a_sequence: index " + std::to_string(i) + " exceeds 2^C = " +
                     std::to_string(std::uint64_t{1} << c));
  TowerInt a(1);
  const TowerInt cc(c);
  for (std::uint64_t j = 0; j < i; ++j) a = add(pow2(add(a, cc, ctx), ctx), a, ctx);
  return a;
}

std::uint64_t min_C_for(const TowerInt& n, const TowerContext& ctx) {
  require_positive(n, "min_C_for");
  for (std::uint64_t c = 0;; ++c) {
    const TowerInt cc(c);
    const std::uint64_t terms = c < 63 ? (std::uint64_t{1} << c) : std::numeric_limits<std::uint64_t>::max();
    TowerInt a(1);
    for (std::uint64_t i = 0;; ++i) {
      // n - C <= a_i  <=>  a_i + C >= n
      Certified cmp = compare(add(a, cc, ctx), n);
      if (cmp == Certified::greater || cmp == Certified::equal) return c;
      if (cmp == Certified::indeterminate)
        throw PreconditionError("min_C_for: cannot certify a_" + std::to_string(i) + " + " + std::to_string(c) +
                                " against n = " + n.to_string());
      if (i == terms) break;
      a = add(pow2(add(a, cc, ctx), ctx), a, ctx);
    }
  }
}

const char* to_string(N0Variant v) { return v == N0Variant::claim23 ? "claim23" : "claim24"; }

TowerInt N0_upper_bound(std::uint64_t k, const TowerInt& c, N0Variant variant, const TowerContext& ctx) {
  if (k < 1) throw InputError("N0 bound: k must be >= 1");
  const TowerInt one(1);
  const TowerInt two_c = pow2(c, ctx);
  if (k == 1) return add(two_c, one, ctx);

  const std::optional<std::uint64_t> m = two_c.to_u64();
  const bool truncated = !m || *m > ctx.iteration_limit;
  const std::uint64_t rounds = truncated ? 1 : *m;

  const TowerInt slack = add(two_c, c, ctx);  // 2^C + C
  TowerInt cj = pow2(add(c, one, ctx), ctx);   // C_1 = 2^(C+1)
  TowerInt sum(0);
  TowerInt nj;
  for (std::uint64_t j = 1; j <= rounds; ++j) {
    sum = add(sum, cj, ctx);
    TowerInt inner = add(slack, sum, ctx);
    if (variant == N0Variant::claim24_literal) inner = pow2(inner, ctx);
    nj = N0_upper_bound(k - 1, inner, variant, ctx);
    if (j < rounds) cj = pow2(add(nj, slack, ctx), ctx);
  }
  TowerInt result = add(nj, two_c, ctx);
  if (truncated) return TowerInt::enclosure(result.lower(), TowerBound::infinity());
  return result;
}

}  // namespace hyperclique
