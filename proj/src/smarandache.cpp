#include "kempner/smarandache.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kempner/prime_table.hpp"
#include "kempner/scales.hpp"

namespace kempner {

namespace {

void require_positive_alpha(u64 alpha) {
  if (alpha == 0) throw std::invalid_argument("alpha must be >= 1");
}

u64 floor_sum_exponent(u64 p, u64 m) {
  u64 s = 0;
  for (u64 q = m / p; q > 0; q /= p) s += q;
  return s;
}

}  // namespace

u64 sp_bruteforce(u64 p, u64 alpha) {
  if (!is_prime(p)) throw std::invalid_argument("sp_bruteforce: p not prime");
  require_positive_alpha(alpha);
  // the least m with E_p(m) >= alpha is a multiple of p
  for (u64 m = p;; m = checked_add(m, p))
    if (floor_sum_exponent(p, m) >= alpha) return m;
}

u64 sp_digits(u64 p, u64 alpha) {
  require_positive_alpha(alpha);
  return checked_mul(p, read_in_standard(digits_of(alpha, p, ScaleKind::GENERALIZED)));
}

u64 sp_formula(u64 p, u64 alpha) {
  if (!is_prime(p)) throw std::invalid_argument("sp_formula: p not prime");
  require_positive_alpha(alpha);
  return checked_add(checked_mul(p - 1, alpha),
                     digit_sum(alpha, p, ScaleKind::GENERALIZED));
}

u64 sp_floor_formula(u64 p, u64 alpha) {
  require_positive_alpha(alpha);
  u64 sigma = digit_sum(alpha, p, ScaleKind::GENERALIZED);
  return checked_mul(p, alpha - alpha / p + sigma / p);
}

SpIdentityReport sp_identity_suite(u64 p, u64 alpha) {
  SpIdentityReport r;
  r.p = p;
  r.alpha = alpha;
  u64 x = sp_formula(p, alpha);
  r.value = x;

  u64 sigma_std_alpha = digit_sum(alpha, p, ScaleKind::STANDARD);
  u64 sigma_gen_alpha = digit_sum(alpha, p, ScaleKind::GENERALIZED);
  u64 ep_alpha = legendre_exponent(p, alpha);

  BigInt lhs = BigInt(p) * x;
  BigInt rhs = BigInt(p - 1) * (p - 1) * (ep_alpha + alpha) +
               BigInt(p - 1) * sigma_std_alpha + BigInt(p) * sigma_gen_alpha;
  r.cleared_denominator = lhs == rhs;

  r.floor_form = x == sp_floor_formula(p, alpha);

  r.exponent_bracket = legendre_exponent(p, x) >= alpha &&
                       legendre_exponent(p, x - 1) < alpha;

  u64 sigma_std_x = digit_sum(x, p, ScaleKind::STANDARD);
  u64 sigma_std_xm1 = digit_sum(x - 1, p, ScaleKind::STANDARD);
  r.digit_window =
      sigma_std_x <= sigma_gen_alpha && sigma_gen_alpha <= sigma_std_xm1 + 1;
  return r;
}

u64 smarandache(const FactoredNat& n, SmarandacheCtx ctx) {
  if (n.is_one()) return static_cast<u64>(ctx.s1);
  u64 best = 0;
  for (const auto& pp : n.parts())
    best = std::max(best, sp_formula(pp.prime, pp.exp));
  return best;
}

u64 smarandache_u64(u64 n, SmarandacheCtx ctx) {
  return smarandache(factorize(n), ctx);
}

std::vector<u64> smarandache_table(u64 n_max, SmarandacheCtx ctx) {
  SpfSieve sieve(n_max);
  std::vector<u64> table(n_max + 1, 0);
  if (n_max >= 1) table[1] = static_cast<u64>(ctx.s1);
  for (u64 n = 2; n <= n_max; ++n) {
    u64 best = 0;
    u64 m = n;
    while (m > 1) {
      u64 p = sieve.spf(m);
      u64 alpha = 0;
      while (m % p == 0) {
        m /= p;
        ++alpha;
      }
      best = std::max(best, sp_formula(p, alpha));
    }
    table[n] = best;
  }
  return table;
}

std::pair<u64, u64> phi_link(u64 p, u32 alpha) {
  if (alpha < 2) throw std::invalid_argument("phi_link: alpha must be >= 2");
  u64 arg = checked_pow(p, alpha - 1);
  u64 lhs = sp_formula(p, arg);
  u64 rhs = checked_add(checked_mul(arg, p - 1), p);  // phi(p^alpha) + p
  return {lhs, rhs};
}

std::pair<u64, u64> phi_telescope(u64 p, u32 alpha) {
  if (alpha < 2) throw std::invalid_argument("phi_telescope: alpha must be >= 2");
  u64 lhs = 0;
  u64 pk = 1;
  for (u32 k = 1; k < alpha; ++k) {
    pk = checked_mul(pk, p);
    lhs = checked_add(lhs, sp_formula(p, pk) - p);
  }
  u64 rhs = checked_mul(pk, p) - p;
  return {lhs, rhs};
}

std::optional<u64> mangoldt(const FactoredNat& n) {
  if (n.is_prime_power()) return n.parts()[0].prime;
  return std::nullopt;
}

FactoredNat mangoldt_divisor_sum(const FactoredNat& n) {
  // accumulate one factor p per prime-power divisor p^i of n
  FactoredNat acc;
  for (const auto& pp : n.parts())
    for (u32 i = 1; i <= pp.exp; ++i)
      acc = mul(acc, FactoredNat::from_parts({{pp.prime, 1}}));
  return acc;
}

FactoredNat psi_factored(u64 n) { return lcm_upto(n); }

namespace {

// Euler-Maclaurin zeta for s > 1, accurate to ~1e-15.
long double zeta_em(long double s) {
  const int M = 20000;
  long double sum = 0;
  for (int n = M; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -s);
  long double m = M;
  sum += std::pow(m, 1 - s) / (s - 1);
  sum += std::pow(m, -s) / 2;
  sum += s * std::pow(m, -s - 1) / 12;
  sum -= s * (s + 1) * (s + 2) * std::pow(m, -s - 3) / 720;
  return sum;
}

}  // namespace

ZetaRatioReport zeta_ratio_partial(double s, u64 N) {
  if (s <= 2) throw std::invalid_argument("zeta_ratio_partial: s must exceed 2");
  if (N == 0) throw std::invalid_argument("zeta_ratio_partial: N must be >= 1");
  ZetaRatioReport rep;

  SpfSieve sieve(N);
  std::vector<u64> phi(N + 1);
  phi[1] = 1;
  long double partial = 0;
  for (u64 n = N; n >= 1; --n) {  // ascending term magnitude
    if (n > 1) {
      u64 m = n, val = 1;
      bool powerful = true;
      u64 phi_product = 1;
      while (m > 1) {
        u64 p = sieve.spf(m);
        u64 alpha = 0;
        while (m % p == 0) {
          m /= p;
          ++alpha;
        }
        val = checked_mul(val, checked_mul(checked_pow(p, alpha - 1), p - 1));
        if (alpha < 2)
          powerful = false;
        else if (powerful)
          phi_product =
              checked_mul(phi_product, sp_formula(p, checked_pow(p, alpha - 1)) - p);
      }
      phi[n] = val;
      if (powerful) {
        if (phi_product != val)
          throw std::logic_error("totient product identity failed");
        ++rep.phi_product_checked;
      }
    }
    partial += static_cast<long double>(phi[n]) *
               std::pow(static_cast<long double>(n), static_cast<long double>(-s));
  }
  rep.partial = static_cast<double>(partial);
  rep.reference = static_cast<double>(zeta_em(s - 1) / zeta_em(s));
  rep.tail_bound =
      std::pow(static_cast<double>(N), 2.0 - s) / (s - 2.0);
  return rep;
}

}  // namespace kempner
