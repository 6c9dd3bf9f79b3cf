#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kempner/bigint.hpp"

namespace kempner {

struct PrimePower {
  u64 prime;
  u32 exp;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer held as its prime factorization, primes ascending.
/// The empty factorization represents 1.
class FactoredNat {
 public:
  FactoredNat() = default;

  /// Builds from (prime, exponent) pairs; validates primality, exponents >= 1,
  /// strictly ascending primes.
  static FactoredNat from_parts(std::vector<PrimePower> parts);

  static FactoredNat one() { return FactoredNat(); }

  const std::vector<PrimePower>& parts() const { return parts_; }
  bool is_one() const { return parts_.empty(); }
  std::size_t prime_count() const { return parts_.size(); }

  u32 exponent_of(u64 p) const;

  BigInt value() const;

  /// Value as u64; throws std::overflow_error if it does not fit.
  u64 value_u64() const;

  bool is_prime_power() const { return parts_.size() == 1; }

  friend bool operator==(const FactoredNat&, const FactoredNat&) = default;

 private:
  std::vector<PrimePower> parts_;
};

/// Unique prime factorization of n >= 1; factorize(1) is the empty product.
FactoredNat factorize(u64 n);

FactoredNat gcd(const FactoredNat& a, const FactoredNat& b);
FactoredNat lcm(const FactoredNat& a, const FactoredNat& b);
std::pair<FactoredNat, FactoredNat> gcd_lcm(const FactoredNat& a,
                                            const FactoredNat& b);
FactoredNat mul(const FactoredNat& a, const FactoredNat& b);

/// True iff a divides b.
bool divides(const FactoredNat& a, const FactoredNat& b);

/// All divisors of n as u64 values, unsorted; requires n to fit in u64.
std::vector<u64> divisors_u64(const FactoredNat& n);
std::vector<u64> divisors_u64(u64 n);

}  // namespace kempner
