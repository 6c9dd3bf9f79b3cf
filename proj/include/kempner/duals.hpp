#pragma once

#include "kempner/factored.hpp"
#include "kempner/smarandache.hpp"

namespace kempner {

/// Constant companion function; always 1.
u64 s2(u64 n);

/// Smallest m with n <= m!.
u64 s3(u64 n);

/// Largest m with m! | n, decided by Legendre exponent checks against n's
/// factorization; the set {m : m! | n} is downward closed so the scan stops
/// at the first failure.
u64 s4_brute(const FactoredNat& n);

/// Closed form for s4: over the maximal initial run p_1..p_k of consecutive
/// primes dividing n, t_i = S(p_i^a_i) - 1 when E_{p_i}(S(p_i^a_i)) > a_i,
/// else S(p_i^a_i) + p_i - 1; the answer is min{t_1..t_k, p_{k+1} - 1}.
/// Odd n (k = 0) gives 1.
u64 s4_closed(const FactoredNat& n);

/// lcm(1..s4(n)) in factored form.
FactoredNat s5(const FactoredNat& n);

/// lcm(1..S(n)-1) in factored form; rejects n = 1.
FactoredNat s6(const FactoredNat& n, SmarandacheCtx ctx = {});

/// lcm(1..m) for the largest m with m! <= n.
FactoredNat s7(u64 n);

}  // namespace kempner
