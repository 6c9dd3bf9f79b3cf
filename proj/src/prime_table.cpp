#include "kempner/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kempner {

PrimeTable& PrimeTable::instance() {
  static PrimeTable table;
  return table;
}

PrimeTable::PrimeTable() {
  std::lock_guard<std::mutex> lock(mu_);
  grow_to(1 << 10);
}

void PrimeTable::grow_to(u64 limit) {
  if (limit <= limit_) return;
  limit = std::max<u64>(limit, 2 * limit_);
  std::vector<bool> composite(limit + 1, false);
  std::vector<u64> primes;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  primes_ = std::move(primes);
  limit_ = limit;
}

u64 PrimeTable::prime(std::size_t i) {
  if (i == 0) throw std::invalid_argument("prime index is 1-based");
  std::lock_guard<std::mutex> lock(mu_);
  while (primes_.size() < i) grow_to(2 * limit_);
  return primes_[i - 1];
}

bool PrimeTable::is_prime(u64 n) {
  if (n < 2) return false;
  std::lock_guard<std::mutex> lock(mu_);
  if (n <= limit_)
    return std::binary_search(primes_.begin(), primes_.end(), n);
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(n))) + 2;
  grow_to(root);
  for (u64 p : primes_) {
    if (p * p > n) break;
    if (n % p == 0) return false;
  }
  return true;
}

u64 PrimeTable::next_prime_after(u64 n) {
  u64 c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::size_t PrimeTable::index_of(u64 p) {
  if (p < 2) return 0;
  std::lock_guard<std::mutex> lock(mu_);
  grow_to(p);
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) return 0;
  return static_cast<std::size_t>(it - primes_.begin()) + 1;
}

std::vector<u64> PrimeTable::primes_upto(u64 n) {
  std::lock_guard<std::mutex> lock(mu_);
  grow_to(n);
  auto it = std::upper_bound(primes_.begin(), primes_.end(), n);
  return std::vector<u64>(primes_.begin(), it);
}

SpfSieve::SpfSieve(u64 limit) : limit_(limit), spf_(limit + 1, 0) {
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    for (u64 j = i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<u32>(i);
  }
}

std::vector<std::pair<u64, u32>> SpfSieve::factor_pairs(u64 n) const {
  if (n == 0 || n > limit_) throw std::invalid_argument("SpfSieve: out of range");
  std::vector<std::pair<u64, u32>> out;
  while (n > 1) {
    u64 p = spf_[n];
    u32 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

}  // namespace kempner
