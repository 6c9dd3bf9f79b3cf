#include "kempner/duals.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "kempner/prime_table.hpp"

namespace kempner {

namespace {

u64 floor_sum_exponent(u64 p, u64 m) {
  u64 s = 0;
  for (u64 q = m / p; q > 0; q /= p) s += q;
  return s;
}

bool factorial_divides(u64 m, const FactoredNat& n) {
  auto& table = PrimeTable::instance();
  for (std::size_t i = 1;; ++i) {
    u64 p = table.prime(i);
    if (p > m) return true;
    if (floor_sum_exponent(p, m) > n.exponent_of(p)) return false;
  }
}

}  // namespace

u64 s2(u64 n) {
  if (n == 0) throw std::invalid_argument("s2: n must be positive");
  return 1;
}

u64 s3(u64 n) {
  if (n == 0) throw std::invalid_argument("s3: n must be positive");
  u64 m = 1, fact = 1;
  while (fact < n) {
    ++m;
    if (fact > std::numeric_limits<u64>::max() / m) return m;  // m! > any u64
    fact *= m;
  }
  return m;
}

u64 s4_brute(const FactoredNat& n) {
  u64 m = 1;
  while (factorial_divides(m + 1, n)) ++m;
  return m;
}

u64 s4_closed(const FactoredNat& n) {
  const auto& parts = n.parts();
  auto& table = PrimeTable::instance();

  std::size_t k = 0;
  while (k < parts.size() && parts[k].prime == table.prime(k + 1)) ++k;
  if (k == 0) return 1;

  u64 best = table.prime(k + 1) - 1;
  for (std::size_t i = 0; i < k; ++i) {
    u64 p = parts[i].prime;
    u64 alpha = parts[i].exp;
    u64 s = sp_formula(p, alpha);
    u64 t = floor_sum_exponent(p, s) > alpha ? s - 1 : s + p - 1;
    best = std::min(best, t);
  }
  return best;
}

FactoredNat s5(const FactoredNat& n) { return lcm_upto(s4_brute(n)); }

FactoredNat s6(const FactoredNat& n, SmarandacheCtx ctx) {
  if (n.is_one()) throw std::domain_error("s6 undefined at n = 1");
  u64 s = smarandache(n, ctx);
  return lcm_upto(s - 1);
}

FactoredNat s7(u64 n) {
  if (n == 0) throw std::invalid_argument("s7: n must be positive");
  u64 m = 1, fact = 1;
  while (fact <= n / (m + 1)) {
    ++m;
    fact *= m;
  }
  return lcm_upto(m);
}

}  // namespace kempner
