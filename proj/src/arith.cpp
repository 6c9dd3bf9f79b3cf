#include "kempner/arith.hpp"

#include <stdexcept>

#include "kempner/prime_table.hpp"
#include "kempner/scales.hpp"

namespace kempner {

u64 legendre_exponent(u64 p, u64 m) {
  if (!is_prime(p)) throw std::invalid_argument("legendre_exponent: p not prime");
  u64 floor_sum = 0;
  for (u64 q = m / p; q > 0; q /= p) floor_sum += q;
  u64 digit_form = (m - digit_sum(m, p, ScaleKind::STANDARD)) / (p - 1);
  if (floor_sum != digit_form)
    throw std::logic_error("legendre_exponent: floor sum and digit form differ");
  return floor_sum;
}

u64 euler_phi(const FactoredNat& n) {
  u64 phi = 1;
  for (const auto& pp : n.parts())
    phi = checked_mul(phi, checked_mul(checked_pow(pp.prime, pp.exp - 1),
                                       pp.prime - 1));
  return phi;
}

int moebius_mu(const FactoredNat& n) {
  for (const auto& pp : n.parts())
    if (pp.exp >= 2) return 0;
  return n.prime_count() % 2 == 0 ? 1 : -1;
}

u64 tau(const FactoredNat& n) {
  u64 t = 1;
  for (const auto& pp : n.parts()) t = checked_mul(t, pp.exp + 1);
  return t;
}

FactoredNat lcm_upto(u64 m) {
  if (m == 0) throw std::invalid_argument("lcm_upto: m must be positive");
  std::vector<PrimePower> parts;
  for (u64 p : PrimeTable::instance().primes_upto(m)) {
    u32 e = 1;
    u64 q = p;
    while (q <= m / p) {
      q *= p;
      ++e;
    }
    parts.push_back({p, e});
  }
  return FactoredNat::from_parts(std::move(parts));
}

}  // namespace kempner
