#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "kempner/bigint.hpp"

namespace kempner {

/// Growable table of consecutive primes 2, 3, 5, ...
/// All accessors are thread-safe; growth happens on demand behind a mutex.
class PrimeTable {
 public:
  static PrimeTable& instance();

  /// i-th prime, 1-based: prime(1) == 2.
  u64 prime(std::size_t i);

  bool is_prime(u64 n);

  u64 next_prime_after(u64 n);

  /// 1-based index of a prime p, or 0 if p is not prime.
  std::size_t index_of(u64 p);

  /// Copy of all primes <= n.
  std::vector<u64> primes_upto(u64 n);

 private:
  PrimeTable();
  void grow_to(u64 limit);  // requires lock held

  std::mutex mu_;
  std::vector<u64> primes_;
  u64 limit_ = 0;
};

inline bool is_prime(u64 n) { return PrimeTable::instance().is_prime(n); }
inline u64 nth_prime(std::size_t i) { return PrimeTable::instance().prime(i); }

/// Smallest-prime-factor sieve for bulk factorization of a fixed range.
class SpfSieve {
 public:
  explicit SpfSieve(u64 limit);

  u64 limit() const { return limit_; }
  u64 spf(u64 n) const { return spf_[n]; }

  /// Exponent pairs of n, smallest prime first.
  std::vector<std::pair<u64, u32>> factor_pairs(u64 n) const;

 private:
  u64 limit_;
  std::vector<u32> spf_;
};

}  // namespace kempner
