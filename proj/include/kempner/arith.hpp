#pragma once

#include "kempner/bigint.hpp"
#include "kempner/factored.hpp"

namespace kempner {

/// Exponent of the prime p in m!, computed two ways: the floor sum over
/// powers of p and the digit form (m - digit_sum_p(m)) / (p - 1). The two
/// must agree; disagreement throws std::logic_error.
u64 legendre_exponent(u64 p, u64 m);

u64 euler_phi(const FactoredNat& n);

/// 1 on n = 1, 0 when a square divides n, else (-1)^(number of primes).
int moebius_mu(const FactoredNat& n);

u64 tau(const FactoredNat& n);

/// lcm(1..m) in factored form: each prime p <= m with exponent
/// floor(log_p m).
FactoredNat lcm_upto(u64 m);

}  // namespace kempner
