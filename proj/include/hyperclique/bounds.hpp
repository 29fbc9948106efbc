#pragma once

#include <cstdint>

#include "hyperclique/tower.hpp"

namespace hyperclique {

/// log* x = min { i >= 1 : log2 applied i times to x is < 1 }, for x >= 1.
///
/// Computed exactly: floor(log2 floor(y)) == floor(log2 y) for real y >= 1,
/// so iterating floor-log2 on integers meets the "< 1" boundary at the same
/// step as the real iteration. Throws InputError for x < 1, and
/// PreconditionError when an enclosure straddles a log* boundary.
std::uint64_t log_star(const TowerInt& x);

struct IterLogResult {
  std::uint64_t iterations = 0;
  double value = 0;  ///< +inf when the value does not fit in a double
  bool exact = false;  ///< value is an exactly computed integer
};

/// log2 applied i times. Throws InputError for x < 1 or i > log_star(x).
IterLogResult iterated_log(const TowerInt& x, std::uint64_t i);

/// log2(log*(n + 1)) - 1: the lower bound on C for 3-graphs with n - C
/// distinct clique sizes.
double f3_lower_bound(const TowerInt& n);

/// The sequence a_0 = 1, a_i = 2^(a_{i-1} + C) + a_{i-1}; a_{2^C} is the
/// largest (2, C)-layered tree. Requires 0 <= i <= 2^C.
TowerInt a_sequence(std::uint64_t c, std::uint64_t i, const TowerContext& ctx = default_tower_context());

/// Smallest C >= 0 with n - C <= a_{2^C}(C). Stops extending the sequence as
/// soon as a partial term certifies the inequality.
std::uint64_t min_C_for(const TowerInt& n, const TowerContext& ctx = default_tower_context());

enum class N0Variant {
  claim23,         ///< inner parameter 2^C + C + sum C_i
  claim24_literal  ///< inner parameter 2^(2^C + C + sum C_i)
};

const char* to_string(N0Variant v);

/// Upper bound on the size of any (k, C)-layered tree, assembled from the
/// induction on k: C_1 = 2^(C+1), N_j = bound(k-1, C'_j), C_{j+1} =
/// 2^(N_j + 2^C + C) for j = 1..2^C, result N_m + 2^C. Valid but far from
/// tight. When the loop would exceed ctx.iteration_limit, the upper end of
/// the enclosure is infinite and the lower end is the partial value.
TowerInt N0_upper_bound(std::uint64_t k, const TowerInt& c, N0Variant variant,
                        const TowerContext& ctx = default_tower_context());

}  // namespace hyperclique
