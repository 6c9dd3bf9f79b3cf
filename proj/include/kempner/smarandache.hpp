#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kempner/arith.hpp"
#include "kempner/factored.hpp"

namespace kempner {

/// S(1) is 0 or 1 depending on convention; every S evaluation threads one
/// context. Default is 1 (the smallest m >= 1 with 1 | m!).
struct SmarandacheCtx {
  int s1 = 1;
};

/// S(p^alpha) as the least m with p^alpha | m!, found by stepping m through
/// multiples of p. Ground-truth oracle for the closed forms below.
u64 sp_bruteforce(u64 p, u64 alpha);

/// S(p^alpha) as p times the generalized digit string of alpha read in the
/// standard scale.
u64 sp_digits(u64 p, u64 alpha);

/// S(p^alpha) = (p-1)*alpha + generalized digit sum of alpha.
u64 sp_formula(u64 p, u64 alpha);

/// S(p^alpha) = p*(alpha - floor(alpha/p) + floor(sigma/p)) where sigma is
/// the generalized digit sum of alpha.
u64 sp_floor_formula(u64 p, u64 alpha);

/// Cross-checks the identities satisfied by x = S(p^alpha):
///   cleared_denominator: p*x = (p-1)^2*(E_p(alpha)+alpha)
///                              + (p-1)*sigma_std(alpha) + p*sigma_gen(alpha)
///   floor_form:          x = sp_floor_formula(p, alpha)
///   exponent_bracket:    E_p(x) >= alpha and E_p(x-1) < alpha
///   digit_window:        sigma_std(x) <= sigma_gen(alpha) <= sigma_std(x-1)+1
/// Membership only for the digit window; x need not be its unique solution.
struct SpIdentityReport {
  u64 p = 0;
  u64 alpha = 0;
  u64 value = 0;
  bool cleared_denominator = false;
  bool floor_form = false;
  bool exponent_bracket = false;
  bool digit_window = false;

  bool all_ok() const {
    return cleared_denominator && floor_form && exponent_bracket && digit_window;
  }
};

SpIdentityReport sp_identity_suite(u64 p, u64 alpha);

/// S(n): least m with n | m!; the max of S over the prime-power parts,
/// ctx.s1 for n = 1.
u64 smarandache(const FactoredNat& n, SmarandacheCtx ctx = {});
u64 smarandache_u64(u64 n, SmarandacheCtx ctx = {});

/// S(1..n_max) built over a smallest-prime-factor sieve; index 0 unused.
std::vector<u64> smarandache_table(u64 n_max, SmarandacheCtx ctx = {});

/// (S_p(p^(alpha-1)), phi(p^alpha) + p); the pair must agree for alpha >= 2.
/// The S argument is the integer p^(alpha-1), so p^(alpha-1) must fit u64.
std::pair<u64, u64> phi_link(u64 p, u32 alpha);

/// Telescoped totient sum: (sum_{k=1}^{alpha-1} (S_p(p^k) - p), p^alpha - p);
/// the pair must agree for alpha >= 2.
std::pair<u64, u64> phi_telescope(u64 p, u32 alpha);

/// The prime p when n = p^i, absent otherwise (exponentiated Mangoldt value).
std::optional<u64> mangoldt(const FactoredNat& n);

/// Product of mangoldt over all divisors of n, in factored form; equals n.
FactoredNat mangoldt_divisor_sum(const FactoredNat& n);

/// lcm(1..n) in factored form (the cumulative companion of mangoldt).
FactoredNat psi_factored(u64 n);

struct ZetaRatioReport {
  double partial = 0;         // sum over n <= N of phi(n)/n^s
  double reference = 0;       // zeta(s-1)/zeta(s)
  double tail_bound = 0;      // N^(2-s)/(s-2), bounds |partial - reference|
  u64 phi_product_checked = 0;  // count of n with all exponents >= 2 verified
};

/// Partial sums of phi(n)/n^s against the zeta ratio they converge to.
/// Also verifies, for every n <= N whose exponents are all >= 2, that
/// phi(n) equals the product of (S_p(p^(alpha-1)) - p) over its parts.
/// Requires s > 2.
ZetaRatioReport zeta_ratio_partial(double s, u64 N);

}  // namespace kempner
