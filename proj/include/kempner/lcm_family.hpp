#pragma once

#include "kempner/factored.hpp"

namespace kempner {

/// Least m with n | lcm(1..m), by scanning m upward with exponent checks.
u64 nu_brute(const FactoredNat& n);

/// Closed form: max over the prime-power parts p^a of n; nu(1) = 1.
u64 nu_closed(const FactoredNat& n);

/// Largest m such that every i <= m divides n (equivalently lcm(1..m) | n),
/// by scanning i upward until the first non-divisor.
u64 nu4(const FactoredNat& n);

/// nu4 recovered as a bounded integer program over the maximal initial run
/// p_1..p_t0 of consecutive primes dividing n: maximize the product of
/// p_i^{x_i} over the box 0 <= x_i <= a_i subject to the product staying
/// below p_{t0+1} and below every p_j^{a_j + 1}. The per-prime caps are
/// required for correctness (without them the program overshoots, e.g. at
/// n = 30); comparisons are exact integer comparisons.
u64 nu4_ip(const FactoredNat& n);

}  // namespace kempner
