#include "kempner/factored.hpp"

#include <algorithm>
#include <stdexcept>

#include "kempner/prime_table.hpp"

namespace kempner {

FactoredNat FactoredNat::from_parts(std::vector<PrimePower> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].exp == 0) throw std::invalid_argument("zero exponent");
    if (i > 0 && parts[i - 1].prime >= parts[i].prime)
      throw std::invalid_argument("primes must be strictly ascending");
    if (!is_prime(parts[i].prime))
      throw std::invalid_argument("non-prime base");
  }
  FactoredNat n;
  n.parts_ = std::move(parts);
  return n;
}

u32 FactoredNat::exponent_of(u64 p) const {
  for (const auto& pp : parts_)
    if (pp.prime == p) return pp.exp;
  return 0;
}

BigInt FactoredNat::value() const {
  BigInt v = 1;
  for (const auto& pp : parts_) v *= big_pow(pp.prime, pp.exp);
  return v;
}

u64 FactoredNat::value_u64() const {
  u64 v = 1;
  for (const auto& pp : parts_) v = checked_mul(v, checked_pow(pp.prime, pp.exp));
  return v;
}

FactoredNat factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> parts;
  auto& table = PrimeTable::instance();
  for (std::size_t i = 1; n > 1; ++i) {
    u64 p = table.prime(i);
    if (p * p > n) break;
    if (n % p != 0) continue;
    u32 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    parts.push_back({p, e});
  }
  if (n > 1) parts.push_back({n, 1});
  return FactoredNat::from_parts(std::move(parts));
}

namespace {

template <typename Merge>
FactoredNat merge_parts(const FactoredNat& a, const FactoredNat& b, Merge merge) {
  std::vector<PrimePower> out;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  std::size_t i = 0, j = 0;
  while (i < pa.size() || j < pb.size()) {
    u64 p;
    u32 ea = 0, eb = 0;
    if (j == pb.size() || (i < pa.size() && pa[i].prime < pb[j].prime)) {
      p = pa[i].prime;
      ea = pa[i].exp;
      ++i;
    } else if (i == pa.size() || pb[j].prime < pa[i].prime) {
      p = pb[j].prime;
      eb = pb[j].exp;
      ++j;
    } else {
      p = pa[i].prime;
      ea = pa[i].exp;
      eb = pb[j].exp;
      ++i;
      ++j;
    }
    u32 e = merge(ea, eb);
    if (e > 0) out.push_back({p, e});
  }
  return FactoredNat::from_parts(std::move(out));
}

}  // namespace

FactoredNat gcd(const FactoredNat& a, const FactoredNat& b) {
  return merge_parts(a, b, [](u32 x, u32 y) { return std::min(x, y); });
}

FactoredNat lcm(const FactoredNat& a, const FactoredNat& b) {
  return merge_parts(a, b, [](u32 x, u32 y) { return std::max(x, y); });
}

std::pair<FactoredNat, FactoredNat> gcd_lcm(const FactoredNat& a,
                                            const FactoredNat& b) {
  return {gcd(a, b), lcm(a, b)};
}

FactoredNat mul(const FactoredNat& a, const FactoredNat& b) {
  return merge_parts(a, b, [](u32 x, u32 y) { return x + y; });
}

bool divides(const FactoredNat& a, const FactoredNat& b) {
  for (const auto& pp : a.parts())
    if (b.exponent_of(pp.prime) < pp.exp) return false;
  return true;
}

std::vector<u64> divisors_u64(const FactoredNat& n) {
  std::vector<u64> out{1};
  for (const auto& pp : n.parts()) {
    std::size_t sz = out.size();
    u64 q = 1;
    for (u32 e = 1; e <= pp.exp; ++e) {
      q = checked_mul(q, pp.prime);
      for (std::size_t k = 0; k < sz; ++k) out.push_back(checked_mul(out[k], q));
    }
  }
  return out;
}

std::vector<u64> divisors_u64(u64 n) { return divisors_u64(factorize(n)); }

}  // namespace kempner
