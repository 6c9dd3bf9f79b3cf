#include "kempner/rationals.hpp"

#include <algorithm>
#include <stdexcept>

#include "kempner/duals.hpp"
#include "kempner/prime_table.hpp"

namespace kempner {

FactoredRat FactoredRat::from_parts(int sign, std::vector<SignedPrimePower> parts) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!is_prime(parts[i].prime)) throw std::invalid_argument("base is not prime");
    if (parts[i].exp == 0) throw std::invalid_argument("zero exponent");
    if (i > 0 && parts[i - 1].prime >= parts[i].prime)
      throw std::invalid_argument("primes must be strictly ascending");
  }
  FactoredRat q;
  q.sign_ = sign;
  q.parts_ = std::move(parts);
  return q;
}

FactoredRat FactoredRat::from_fraction(i64 num, u64 den) {
  if (num == 0) throw std::invalid_argument("zero is not representable");
  if (den == 0) throw std::invalid_argument("denominator must be positive");
  int sign = num > 0 ? 1 : -1;
  FactoredNat n = factorize(static_cast<u64>(num > 0 ? num : -num));
  FactoredNat d = factorize(den);
  std::vector<SignedPrimePower> parts;
  std::size_t i = 0, j = 0;
  const auto& pn = n.parts();
  const auto& pd = d.parts();
  while (i < pn.size() || j < pd.size()) {
    if (j == pd.size() || (i < pn.size() && pn[i].prime < pd[j].prime)) {
      parts.push_back({pn[i].prime, static_cast<i32>(pn[i].exp)});
      ++i;
    } else if (i == pn.size() || pd[j].prime < pn[i].prime) {
      parts.push_back({pd[j].prime, -static_cast<i32>(pd[j].exp)});
      ++j;
    } else {
      i32 e = static_cast<i32>(pn[i].exp) - static_cast<i32>(pd[j].exp);
      if (e != 0) parts.push_back({pn[i].prime, e});
      ++i;
      ++j;
    }
  }
  return from_parts(sign, std::move(parts));
}

FactoredRat FactoredRat::from_nat(const FactoredNat& n) {
  std::vector<SignedPrimePower> parts;
  for (const auto& pp : n.parts())
    parts.push_back({pp.prime, static_cast<i32>(pp.exp)});
  return from_parts(1, std::move(parts));
}

FactoredNat FactoredRat::numerator() const {
  std::vector<PrimePower> parts;
  for (const auto& sp : parts_)
    if (sp.exp > 0) parts.push_back({sp.prime, static_cast<u32>(sp.exp)});
  return FactoredNat::from_parts(std::move(parts));
}

FactoredNat FactoredRat::denominator() const {
  std::vector<PrimePower> parts;
  for (const auto& sp : parts_)
    if (sp.exp < 0) parts.push_back({sp.prime, static_cast<u32>(-sp.exp)});
  return FactoredNat::from_parts(std::move(parts));
}

FactoredRat FactoredRat::reciprocal() const {
  std::vector<SignedPrimePower> parts;
  for (const auto& sp : parts_) parts.push_back({sp.prime, -sp.exp});
  return from_parts(sign_, std::move(parts));
}

FactoredRat FactoredRat::abs() const {
  FactoredRat q = *this;
  q.sign_ = 1;
  return q;
}

std::string FactoredRat::str() const {
  BigInt num = numerator().value();
  BigInt den = denominator().value();
  std::string s = sign_ < 0 ? "-" : "";
  s += num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

namespace {

void require_positive(const FactoredRat& q, const char* who) {
  if (!q.is_positive())
    throw std::domain_error(std::string(who) + ": inputs must be positive");
}

template <typename Merge>
FactoredRat merge_signed(const FactoredRat& a, const FactoredRat& b, Merge merge) {
  std::vector<SignedPrimePower> out;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  std::size_t i = 0, j = 0;
  while (i < pa.size() || j < pb.size()) {
    u64 p;
    i32 ea = 0, eb = 0;
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
    i32 e = merge(ea, eb);
    if (e != 0) out.push_back({p, e});
  }
  return FactoredRat::from_parts(1, std::move(out));
}

}  // namespace

FactoredRat rat_gcd(const FactoredRat& a, const FactoredRat& b) {
  require_positive(a, "rat_gcd");
  require_positive(b, "rat_gcd");
  return merge_signed(a, b, [](i32 x, i32 y) { return std::min(x, y); });
}

FactoredRat rat_lcm(const FactoredRat& a, const FactoredRat& b) {
  require_positive(a, "rat_lcm");
  require_positive(b, "rat_lcm");
  return merge_signed(a, b, [](i32 x, i32 y) { return std::max(x, y); });
}

FactoredRat rat_mul(const FactoredRat& a, const FactoredRat& b) {
  FactoredRat r = merge_signed(a.abs(), b.abs(), [](i32 x, i32 y) { return x + y; });
  return a.sign() * b.sign() > 0 ? r : FactoredRat::from_parts(-1, r.parts());
}

int rat_cmp(const FactoredRat& a, const FactoredRat& b) {
  if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
  // a.n/a.d vs b.n/b.d compared by a.n*b.d vs b.n*a.d, flipped when negative
  BigInt lhs = a.numerator().value() * b.denominator().value();
  BigInt rhs = b.numerator().value() * a.denominator().value();
  int c = lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
  return a.sign() > 0 ? c : -c;
}

FactoredRat S_rat(const FactoredRat& q, SmarandacheCtx ctx) {
  FactoredNat n = q.numerator();
  FactoredNat n1 = q.denominator();
  u64 s = smarandache(n, ctx);
  if (s == 0)
    throw std::domain_error("S_rat: S of numerator is 0 under s1 = 0");
  return FactoredRat::from_fraction(static_cast<i64>(s), s4_brute(n1));
}

FactoredRat S_bar(const FactoredRat& q, SmarandacheCtx ctx) {
  require_positive(q, "S_bar");
  return S_rat(q.reciprocal(), ctx).reciprocal();
}

}  // namespace kempner
