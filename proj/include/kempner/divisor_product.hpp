#pragma once

#include <array>
#include <vector>

#include "kempner/factored.hpp"

namespace kempner {

/// For each prime q | m, twice the exponent of q in the divisor product
/// p(m) = m^(tau(m)/2). The doubled value x_q * tau(m) is always an integer
/// even when tau(m) is odd (m a perfect square), so no halving is needed.
std::vector<std::pair<u64, u64>> divisor_product_exponents(const FactoredNat& m);

/// True iff n divides the divisor product of m: for every prime q,
/// 2 * exponent_q(n) <= x_q(m) * tau(m).
bool divides_divisor_product(const FactoredNat& n, const FactoredNat& m);

/// The constrained minimization behind Theta(n), restricted to exponent
/// vectors x over n's primes: minimize the product of p_i^{x_i} subject to
/// g_i(x) = x_i * prod_j(x_j + 1) - 2*a_i >= 0.
struct ThetaProblem {
  explicit ThetaProblem(const FactoredNat& n);

  FactoredNat n;
  std::vector<u64> primes;
  std::vector<u64> alphas;

  double g(std::size_t i, const std::vector<double>& x) const;
};

enum class ThetaMode { PaperIp, Exact, Continuous };

struct ThetaSolution {
  ThetaMode mode = ThetaMode::Exact;
  FactoredNat m;               // integer modes
  std::vector<u64> exponents;  // integer modes: exponents of m
  BigInt objective = 0;        // integer modes: value of m

  std::vector<double> x;          // continuous: limit exponents on n's primes
  std::vector<double> barrier_x;  // continuous: last barrier-phase iterate
  double objective_real = 0;
  bool converged = true;
  int iterations = 0;
};

/// Restricted search: m supported on n's primes only, exponents scanned over
/// the box 0 <= x_i <= 2*a_i (x_i = 2*a_i alone already satisfies constraint
/// i, so no minimizer needs more). Exact integer comparisons; ties broken by
/// the lexicographically smallest exponent vector. Rejects n = 1.
ThetaSolution theta_paper(const FactoredNat& n);

/// Unrestricted minimum: smallest m over all integers with
/// divides_divisor_product(n, m), by ascending scan. The scan is bounded by
/// the restricted solution and by n itself (n | p(n) for n >= 2), so it
/// always terminates. theta_exact(1) = 1.
ThetaSolution theta_exact(const FactoredNat& n);

/// Log-barrier relaxation: minimizes U(x, r) = prod p_i^{x_i} - r * sum ln
/// g_i(x) by damped Newton over a decreasing r schedule, warm-starting each
/// r from the previous solution (initial point x_i = 2*a_i, interior).
/// The r -> 0 limit is then extracted from the fully-active stationary
/// system g_i(x) = 0; when the unconstrained barrier trajectory leaves a
/// constraint slack the two points differ, and barrier_x keeps the last
/// barrier iterate for inspection. For t = 2 the limit is cross-checked
/// against the closed-form cubic root; converged reflects both phases and
/// that check.
ThetaSolution theta_sumt(const FactoredNat& n,
                         std::vector<double> r_schedule = {},
                         double tol = 1e-8);

struct CubicRoots {
  std::array<i64, 4> coeffs;  // c3 x^3 + c2 x^2 + c1 x + c0
  std::vector<double> real_roots;  // ascending
};

/// The cubic a1*x^3 + (a1+a2)*x^2 + a2*x - 2*a2^2 satisfied by the second
/// exponent of the two-prime active system; solved in closed form (Cardano
/// resolvent, trigonometric branch for three real roots), each root refined
/// by one Newton step.
CubicRoots two_prime_cubic(u64 a1, u64 a2);

}  // namespace kempner
