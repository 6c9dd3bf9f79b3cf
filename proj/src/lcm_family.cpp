#include "kempner/lcm_family.hpp"

#include <algorithm>
#include <stdexcept>

#include "kempner/prime_table.hpp"

namespace kempner {

u64 nu_brute(const FactoredNat& n) {
  const auto& parts = n.parts();
  // exponent of p in lcm(1..m) grows by one exactly at m = p^k, so a part
  // p^a becomes covered once m reaches p^a
  std::size_t covered = 0;
  std::vector<u64> next_power(parts.size());
  std::vector<u32> have(parts.size(), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) next_power[i] = parts[i].prime;
  for (u64 m = 1;; ++m) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (have[i] >= parts[i].exp || m != next_power[i]) continue;
      ++have[i];
      if (have[i] == parts[i].exp)
        ++covered;
      else
        next_power[i] = checked_mul(next_power[i], parts[i].prime);
    }
    if (covered == parts.size()) return m;
  }
}

u64 nu_closed(const FactoredNat& n) {
  u64 best = 1;
  for (const auto& pp : n.parts())
    best = std::max(best, checked_pow(pp.prime, pp.exp));
  return best;
}

u64 nu4(const FactoredNat& n) {
  u64 m = 1;
  for (;;) {
    u64 i = m + 1;
    // i | n iff each prime power of i is within n's exponents
    bool ok = true;
    u64 rest = i;
    for (const auto& pp : n.parts()) {
      if (rest == 1) break;
      u32 e = 0;
      while (rest % pp.prime == 0) {
        rest /= pp.prime;
        ++e;
      }
      if (e > pp.exp) {
        ok = false;
        break;
      }
    }
    if (!ok || rest != 1) return m;
    m = i;
  }
}

u64 nu4_ip(const FactoredNat& n) {
  const auto& parts = n.parts();
  auto& table = PrimeTable::instance();

  std::size_t t0 = 0;
  while (t0 < parts.size() && parts[t0].prime == table.prime(t0 + 1)) ++t0;
  if (t0 == 0) return 1;

  // strict upper bound: the next prime and every p_j^{a_j + 1}
  u64 bound = table.prime(t0 + 1);
  for (std::size_t j = 0; j < t0; ++j)
    bound = std::min(bound, checked_mul(checked_pow(parts[j].prime, parts[j].exp),
                                        parts[j].prime));

  u64 best = 1;
  auto walk = [&](auto&& self, std::size_t i, u64 prod) -> void {
    if (i == t0) {
      best = std::max(best, prod);
      return;
    }
    u64 cur = prod;
    self(self, i + 1, cur);
    for (u32 e = 1; e <= parts[i].exp; ++e) {
      if (cur > (bound - 1) / parts[i].prime) break;  // cur * p would reach bound
      cur *= parts[i].prime;
      self(self, i + 1, cur);
    }
  };
  walk(walk, 0, 1);
  return best;
}

}  // namespace kempner
