#include <doctest.h>

#include <numeric>
#include <vector>

#include "kempner/arith.hpp"
#include "kempner/moebius.hpp"
#include "kempner/prime_table.hpp"

using namespace kempner;

namespace {

BigInt cofactor_det(std::vector<std::vector<BigInt>> m) {
  std::size_t r = m.size();
  if (r == 0) return 1;
  if (r == 1) return m[0][0];
  BigInt acc = 0;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < r; ++i) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < r; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    BigInt term = m[0][j] * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

BigInt naive_shifted_det(u64 n, u64 r, SmarandacheCtx ctx) {
  std::vector<std::vector<BigInt>> m(r, std::vector<BigInt>(r));
  for (u64 i = 1; i <= r; ++i)
    for (u64 j = 1; j <= r; ++j)
      m[i - 1][j - 1] = smarandache_u64(std::gcd(n + i, n + j), ctx);
  return cofactor_det(m);
}

}  // namespace

TEST_SUITE("moebius") {

TEST_CASE("inversion spot values, s1 = 1") {
  SmarandacheCtx ctx{1};
  std::vector<i64> expect{1, 1, 2, 2, 4, -1, 6, 0};
  for (u64 n = 1; n <= 8; ++n) CHECK(s_inversion(factorize(n), ctx) == expect[n - 1]);
}

TEST_CASE("inversion spot values, s1 = 0") {
  SmarandacheCtx ctx{0};
  CHECK(s_inversion(factorize(1), ctx) == 0);
  for (u64 p : PrimeTable::instance().primes_upto(100))
    CHECK(s_inversion(factorize(p), ctx) == static_cast<i64>(p));
  CHECK(s_inversion(factorize(12), ctx) == -1);
  CHECK(s_inversion(factorize(36), ctx) == -1);
}

TEST_CASE("inversion sums back to S") {
  for (int s1 : {0, 1}) {
    SmarandacheCtx ctx{s1};
    for (u64 n = 1; n <= 3000; ++n) {
      i64 acc = 0;
      for (u64 d : divisors_u64(n)) acc += s_inversion(factorize(d), ctx);
      CHECK(acc == static_cast<i64>(smarandache_u64(n, ctx)));
    }
  }
}

TEST_CASE("chain classifier on prime powers") {
  // the chain value is s1-blind, so exactness at a bare prime needs s1 = 0;
  // higher powers are convention free
  for (int s1 : {0, 1}) {
    SmarandacheCtx ctx{s1};
    for (u64 p : {2ull, 3ull, 5ull, 7ull})
      for (u32 a = (s1 == 0 ? 1 : 2); checked_pow(p, a) < (u64(1) << 40); ++a) {
        FactoredNat pa = FactoredNat::from_parts({{p, a}});
        ChainTrace tr = s_closed(pa, ctx);
        CHECK(tr.value == s_inversion(pa, ctx));
        CHECK(tr.chain.size() == 1);
      }
  }
  CHECK(s_closed(factorize(7), SmarandacheCtx{1}).value == 7);
  CHECK(s_inversion(factorize(7), SmarandacheCtx{1}) == 6);
}

TEST_CASE("chain classifier traces") {
  SmarandacheCtx ctx0{0};
  ChainTrace t12 = s_closed(factorize(12), ctx0);
  CHECK(t12.value == -3);
  CHECK(t12.terminal == ChainTerminal::Nonzero);
  CHECK(t12.chain == std::vector<PrimePower>{{2, 2}, {3, 1}});

  ChainTrace t36 = s_closed(factorize(36), ctx0);
  CHECK(t36.value == -2);
  CHECK(t36.chain == std::vector<PrimePower>{{3, 2}, {2, 2}});

  ChainTrace t8 = s_closed(factorize(8), ctx0);
  CHECK(t8.value == 0);
  CHECK(t8.terminal == ChainTerminal::DigitDrop);

  SmarandacheCtx ctx1{1};
  ChainTrace t18 = s_closed(factorize(18), ctx1);
  CHECK(t18.value == 0);
  CHECK(t18.terminal == ChainTerminal::TooManyPrimes);
  CHECK(s_inversion(factorize(18), ctx1) == 0);

  CHECK_THROWS_AS(s_closed(factorize(1), ctx0), std::domain_error);
}

TEST_CASE("audit matches the recorded errata") {
  auto found = audit_s_closed(10000, SmarandacheCtx{0});
  const auto& recorded = recorded_errata();
  REQUIRE(recorded.size() == 644);
  CHECK(found == recorded);
  CHECK(recorded.front() == ErrataRecord{12, -3, -1});
  for (const auto& e : recorded) {
    CHECK_FALSE(factorize(e.n).is_prime_power());
    CHECK(e.closed != e.inversion);
  }
  // ascending and duplicate free
  for (std::size_t i = 1; i < recorded.size(); ++i)
    CHECK(recorded[i - 1].n < recorded[i].n);
}

TEST_CASE("summatory values") {
  SmarandacheCtx ctx0{0};
  CHECK(summatory_FS(factorize(1), ctx0) == 0);
  CHECK(summatory_FS(factorize(1), SmarandacheCtx{1}) == 1);
  CHECK(summatory_FS(factorize(9), ctx0) == 9);
  CHECK(summatory_FS(factorize(16), ctx0) == 16);
  CHECK(summatory_FS(factorize(24), ctx0) == 24);
  CHECK(summatory_FS(factorize(8), ctx0) == 10);
  CHECK(summatory_FS(factorize(12), ctx0) == 16);
  CHECK(summatory_FS(factorize(30), ctx0) == 28);
  for (u64 n = 1; n <= 2000; ++n) {
    u64 acc = 0;
    for (u64 d : divisors_u64(n)) acc += smarandache_u64(d, ctx0);
    CHECK(summatory_FS(factorize(n), ctx0) == acc);
  }
}

TEST_CASE("gcd matrix determinants, s1 = 1") {
  SmarandacheCtx ctx{1};
  std::vector<i64> expect{1, 1, 2, 4, 16, -16, -96, 0, 0, 0, 0, 0};
  BigInt product = 1;
  for (u64 r = 1; r <= 12; ++r) {
    BigInt d = gcd_matrix_det(r, ctx);
    CHECK(d == expect[r - 1]);
    product *= s_inversion(factorize(r), ctx);
    CHECK(d == product);
  }
}

TEST_CASE("gcd matrix determinants, s1 = 0") {
  SmarandacheCtx ctx{0};
  CHECK(gcd_matrix_det(1, ctx) == 0);
  BigInt product = 1;
  for (u64 r = 1; r <= 10; ++r) {
    product *= s_inversion(factorize(r), ctx);
    CHECK(gcd_matrix_det(r, ctx) == product);
  }
}

TEST_CASE("bareiss agrees with cofactor expansion") {
  for (int s1 : {0, 1}) {
    SmarandacheCtx ctx{s1};
    for (u64 r = 1; r <= 6; ++r) {
      CHECK(gcd_matrix_det(r, ctx) == naive_shifted_det(0, r, ctx));
      for (u64 n : {1ull, 2ull, 5ull, 11ull})
        CHECK(shifted_det(n, r, ctx) == naive_shifted_det(n, r, ctx));
    }
  }
}

TEST_CASE("shifted determinant basics") {
  SmarandacheCtx ctx{1};
  CHECK(shifted_det(0, 8, ctx) == gcd_matrix_det(8, ctx));
  CHECK(shifted_det(4, 1, ctx) == 5);
  CHECK(shifted_det(0, 8, ctx) == 0);
}

TEST_CASE("vanishing orders") {
  SmarandacheCtx ctx1{1};
  std::vector<u64> expect{8, 7, 6, 5, 20};
  for (u64 n = 0; n <= 4; ++n) {
    auto r = find_vanishing_r(n, 40, ctx1);
    REQUIRE(r.has_value());
    CHECK(*r == expect[n]);
    CHECK(shifted_det(n, *r, ctx1) == 0);
    for (u64 k = 1; k < *r; ++k) CHECK(shifted_det(n, k, ctx1) != 0);
  }
  auto r0 = find_vanishing_r(0, 40, SmarandacheCtx{0});
  REQUIRE(r0.has_value());
  CHECK(*r0 == 1);
  CHECK_FALSE(find_vanishing_r(1, 3, ctx1).has_value());
}

}  // TEST_SUITE
