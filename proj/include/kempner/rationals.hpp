#pragma once

#include <string>
#include <vector>

#include "kempner/factored.hpp"
#include "kempner/smarandache.hpp"

namespace kempner {

struct SignedPrimePower {
  u64 prime;
  i32 exp;  // nonzero

  friend bool operator==(const SignedPrimePower&, const SignedPrimePower&) = default;
};

/// A nonzero rational as sign * product of p^e with signed exponents,
/// primes ascending. Numerator and denominator are coprime by construction;
/// zero is not representable.
class FactoredRat {
 public:
  FactoredRat() = default;  // 1

  static FactoredRat from_fraction(i64 num, u64 den);
  static FactoredRat from_nat(const FactoredNat& n);
  static FactoredRat from_parts(int sign, std::vector<SignedPrimePower> parts);

  int sign() const { return sign_; }
  const std::vector<SignedPrimePower>& parts() const { return parts_; }

  FactoredNat numerator() const;    // positive-exponent part
  FactoredNat denominator() const;  // negated negative-exponent part

  bool is_positive() const { return sign_ > 0; }
  bool is_one() const { return sign_ > 0 && parts_.empty(); }

  FactoredRat reciprocal() const;
  FactoredRat abs() const;

  std::string str() const;  // "a/b" in lowest terms, or "a"

  friend bool operator==(const FactoredRat&, const FactoredRat&) = default;

 private:
  int sign_ = 1;
  std::vector<SignedPrimePower> parts_;
};

/// Componentwise min / max of exponent vectors over the union of supports.
/// Defined for positive rationals only.
FactoredRat rat_gcd(const FactoredRat& a, const FactoredRat& b);
FactoredRat rat_lcm(const FactoredRat& a, const FactoredRat& b);

FactoredRat rat_mul(const FactoredRat& a, const FactoredRat& b);

/// Exact three-way comparison by cross multiplication.
int rat_cmp(const FactoredRat& a, const FactoredRat& b);

/// S extended to rationals: with |q| = n/n1 in lowest terms, S(n) / s4(n1).
/// Sign of the input is ignored. Under s1 = 0 a numerator of 1 would give
/// the unrepresentable value 0 and is rejected.
FactoredRat S_rat(const FactoredRat& q, SmarandacheCtx ctx = {});

/// Dual extension: reciprocal of S_rat of the reciprocal; restricted to the
/// positive integers it coincides with s4.
FactoredRat S_bar(const FactoredRat& q, SmarandacheCtx ctx = {});

}  // namespace kempner
