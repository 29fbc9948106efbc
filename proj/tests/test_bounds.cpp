#include <cmath>

#include "doctest.h"
#include "hyperclique/bounds.hpp"
#include "hyperclique/errors.hpp"
#include "hyperclique/rng.hpp"

using namespace hyperclique;

namespace {

BigNat pow2_big(unsigned e) {
  BigNat r = 1;
  return r << e;
}

/// Real-valued log* straight from the definition; reliable away from towers of 2.
std::uint64_t log_star_real(double x) {
  std::uint64_t i = 0;
  do {
    x = std::log2(x);
    ++i;
  } while (x >= 1.0);
  return i;
}

/// Direct exact a_i recurrence.
BigNat a_direct(unsigned c, unsigned i) {
  BigNat a = 1;
  for (unsigned j = 0; j < i; ++j) a = (BigNat(1) << static_cast<unsigned>(a + c)) + a;
  return a;
}

bool encloses(const TowerInt& t, const BigNat& v) {
  TowerBound point = TowerBound::exact(v);
  return compare(t.lower(), point) <= 0 && compare(point, t.upper()) <= 0;
}

}  // namespace

TEST_CASE("tower literal parsing") {
  CHECK(parse_tower_literal("12345").value() == 12345);
  CHECK(parse_tower_literal("2^2^2").value() == 16);
  CHECK(parse_tower_literal("2^2^16").value() == pow2_big(65536));
  TowerInt big = parse_tower_literal("2^2^2^2^16");
  CHECK_FALSE(big.is_exact());
  CHECK(big.lower() == big.upper());
  CHECK_THROWS_AS(parse_tower_literal("3^2"), InputError);
  CHECK_THROWS_AS(parse_tower_literal("2^"), InputError);
  CHECK_THROWS_AS(parse_tower_literal("-4"), InputError);
  CHECK_THROWS_AS(parse_tower_literal(""), InputError);
}

TEST_CASE("tower bound comparison") {
  TowerBound a{1, 1u << 20, false}, b{2, 1u << 20, false};
  CHECK(compare(a, b) < 0);
  CHECK(compare(b, a) > 0);
  CHECK(compare(a, a) == 0);
  CHECK(compare(TowerBound::exact(pow2_big(1000)), a) < 0);
  CHECK(compare(TowerBound::infinity(), b) > 0);
  // 2^(2^20) vs the exact number 2^(2^20) - 1 just below it
  TowerBound exact_below = TowerBound::exact(pow2_big(1u << 20) - 1);
  CHECK(compare(a, exact_below) > 0);
  CHECK(compare(a, TowerBound::exact(pow2_big(1u << 20))) == 0);
}

TEST_CASE("tower arithmetic stays exact below the cap") {
  CHECK(add(TowerInt(5), TowerInt(7)).value() == 12);
  CHECK(pow2(TowerInt(10)).value() == 1024);
  CHECK(pow2(TowerInt(3000)).value() == pow2_big(3000));
  CHECK(compare(TowerInt(3), TowerInt(4)) == Certified::less);
  CHECK(compare(TowerInt(4), TowerInt(4)) == Certified::equal);
}

TEST_CASE("small bit cap enclosures contain the exact values") {
  TowerContext tiny;
  tiny.bit_cap = 64;
  for (unsigned c = 0; c <= 2; ++c)
    for (unsigned i = 0; i <= (1u << c) && i <= 3; ++i) {
      TowerInt big = a_sequence(c, i);
      TowerInt small = a_sequence(c, i, tiny);
      REQUIRE(big.is_exact());
      CHECK(encloses(small, big.value()));
    }
  // Sums and powers across the cap.
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    BigNat x = rng.below(200), y = rng.below(1u << 20);
    BigNat exact = (BigNat(1) << static_cast<unsigned>(x)) + y;
    TowerInt t = add(pow2(TowerInt(static_cast<std::uint64_t>(x)), tiny),
                     TowerInt(static_cast<std::uint64_t>(y)), tiny);
    CHECK(encloses(t, exact));
    TowerInt tt = pow2(t, tiny);
    // 2^exact has at most 2^200 bits: compare through logs of the bounds.
    CHECK(compare(tt.lower(), TowerBound{1, exact, false}) <= 0);
    CHECK(compare(TowerBound{1, exact, false}, tt.upper()) <= 0);
  }
}

TEST_CASE("log_star examples") {
  CHECK(log_star(TowerInt(2)) == 2);
  CHECK(log_star(TowerInt(16)) == 4);
  CHECK(log_star(TowerInt(1)) == 1);
  CHECK(log_star(TowerInt(65536)) == 5);
  CHECK(log_star(TowerInt(65535)) == 4);
  CHECK(log_star(parse_tower_literal("2^2^16")) == 6);
  CHECK(log_star(TowerInt::exact(pow2_big(65536) - 1)) == 5);
  CHECK(log_star(parse_tower_literal("2^2^2^2^16")) == 8);
  CHECK_THROWS_AS(log_star(TowerInt(0)), InputError);
}

TEST_CASE("log_star matches the real-valued definition") {
  for (std::uint64_t x = 1; x <= 100000; ++x) REQUIRE(log_star(TowerInt(x)) == log_star_real(static_cast<double>(x)));
}

TEST_CASE("iterated_log examples") {
  CHECK(iterated_log(TowerInt(16), 2).value == 2.0);
  CHECK(iterated_log(TowerInt(77), 0).value == 77.0);
  CHECK(iterated_log(TowerInt(65536), 3).value == 2.0);
  CHECK(iterated_log(TowerInt(65536), 3).exact);
  CHECK(iterated_log(TowerInt(10), 1).value == doctest::Approx(std::log2(10.0)));
  CHECK_THROWS_AS(iterated_log(TowerInt(16), 5), InputError);
}

TEST_CASE("iterated_log brackets 1 at log_star") {
  std::vector<TowerInt> xs;
  for (std::uint64_t x = 2; x <= 5000; ++x) xs.emplace_back(x);
  for (const char* lit : {"2^2^16", "2^2^2^2^16", "2^65535"}) xs.push_back(parse_tower_literal(lit));
  xs.push_back(TowerInt::exact(pow2_big(65536) - 1));
  xs.push_back(TowerInt::exact(pow2_big(65536) + 1));
  for (const TowerInt& x : xs) {
    std::uint64_t ls = log_star(x);
    CAPTURE(x.to_string());
    CHECK(iterated_log(x, ls).value < 1.0);
    CHECK(iterated_log(x, ls - 1).value >= 1.0);
  }
}

TEST_CASE("f3_lower_bound examples") {
  CHECK(f3_lower_bound(TowerInt(15)) == doctest::Approx(1.0));
  CHECK(f3_lower_bound(TowerInt(1)) == doctest::Approx(0.0));
  CHECK(f3_lower_bound(TowerInt(65535)) == doctest::Approx(std::log2(5.0) - 1.0));
}

TEST_CASE("a_sequence") {
  CHECK(a_sequence(0, 0).value() == 1);
  CHECK(a_sequence(5, 0).value() == 1);
  CHECK(a_sequence(0, 1).value() == 3);
  CHECK(a_sequence(1, 1).value() == 5);
  CHECK(a_sequence(1, 2).value() == 69);
  CHECK(a_sequence(2, 2).value() == 2057);
  CHECK(a_sequence(2, 3).value() == a_direct(2, 3));
  CHECK(bit_length(a_sequence(2, 3).value()) == 2060);
  CHECK_FALSE(a_sequence(2, 4).is_exact());
  CHECK_THROWS_AS(a_sequence(1, 3), InputError);

  for (unsigned c = 0; c <= 4; ++c) {
    TowerInt prev = a_sequence(c, 0);
    for (unsigned i = 1; i <= (1u << c) && i <= 6; ++i) {
      TowerInt cur = a_sequence(c, i);
      CHECK(compare(cur, prev) == Certified::greater);
      // a_i + C + 1 <= 2^(a_{i-1} + C + 1)
      Certified r = compare(add(cur, TowerInt(c + 1)), pow2(add(prev, TowerInt(c + 1))));
      CAPTURE(c);
      CAPTURE(i);
      if (cur.is_exact())
        CHECK((r == Certified::less || r == Certified::equal));
      else
        CHECK(r != Certified::greater);
      prev = cur;
    }
  }
}

TEST_CASE("min_C_for examples") {
  CHECK(min_C_for(TowerInt(3)) == 0);
  CHECK(min_C_for(TowerInt(100)) == 2);
  CHECK(min_C_for(TowerInt(1)) == 0);
  // Thresholds from a_1(C=0) = 3 and a_2(C=1) = 69.
  CHECK(min_C_for(TowerInt(4)) == 1);
  CHECK(min_C_for(TowerInt(70)) == 1);
  CHECK(min_C_for(TowerInt(71)) == 2);
  CHECK(min_C_for(parse_tower_literal("2^2^16")) == 2);
}

TEST_CASE("N0 upper bound") {
  for (auto v : {N0Variant::claim23, N0Variant::claim24_literal})
    for (std::uint64_t c = 0; c <= 5; ++c) CHECK(N0_upper_bound(1, TowerInt(c), v).value() == (1u << c) + 1);
  // C_1 = 2, C'_1 = 1 + 0 + 2 = 3, N_1 = 2^3 + 1 = 9, bound 9 + 1
  CHECK(N0_upper_bound(2, TowerInt(0), N0Variant::claim23).value() == 10);
  // claim24: C'_1 = 2^3, N_1 = 2^8 + 1
  CHECK(N0_upper_bound(2, TowerInt(0), N0Variant::claim24_literal).value() == 258);

  for (std::uint64_t c = 0; c <= 3; ++c) {
    TowerInt n0 = N0_upper_bound(2, TowerInt(c), N0Variant::claim23);
    Certified r = compare(n0, a_sequence(c, std::uint64_t{1} << c));
    CHECK(r != Certified::less);
  }
  for (std::uint64_t k = 1; k <= 3; ++k)
    for (std::uint64_t c = 0; c <= 2; ++c) {
      Certified r = compare(N0_upper_bound(k, TowerInt(c), N0Variant::claim23),
                            N0_upper_bound(k, TowerInt(c + 1), N0Variant::claim23));
      CHECK(r != Certified::greater);
    }
  CHECK(N0_upper_bound(3, TowerInt(1), N0Variant::claim23).upper().infinite);
}
