#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "kempner/arith.hpp"
#include "kempner/duals.hpp"
#include "kempner/prime_table.hpp"

using namespace kempner;

TEST_SUITE("duals") {

TEST_CASE("s2 is constant") {
  for (u64 n : {u64(1), u64(2), u64(3960), u64(1) << 60}) CHECK(s2(n) == 1);
  CHECK_THROWS_AS(s2(0), std::invalid_argument);
}

TEST_CASE("s3 factorial ceiling") {
  CHECK(s3(1) == 1);
  CHECK(s3(2) == 2);
  CHECK(s3(6) == 3);
  CHECK(s3(7) == 4);
  CHECK(s3(24) == 4);
  CHECK(s3(25) == 5);
  CHECK(s3(3960) == 7);
  CHECK(s3(std::numeric_limits<u64>::max()) == 21);
  u64 fact = 1;
  for (u64 m = 1; m <= 20; ++m) {
    fact *= m;
    CHECK(s3(fact) == (m == 1 ? 1 : m));
    CHECK(s3(fact + 1) == m + 1);
  }
  CHECK_THROWS_AS(s3(0), std::invalid_argument);
}

TEST_CASE("s4 spot values") {
  std::vector<u64> expect{1, 2, 1, 2, 1, 3};
  for (u64 n = 1; n <= 6; ++n) {
    CHECK(s4_brute(factorize(n)) == expect[n - 1]);
    CHECK(s4_closed(factorize(n)) == expect[n - 1]);
  }
  CHECK(s4_brute(factorize(3960)) == 5);
  CHECK(s4_closed(factorize(3960)) == 5);
  CHECK(s4_brute(factorize(24)) == 4);
  CHECK(s4_brute(factorize(120)) == 5);
  CHECK(s4_brute(factorize(945)) == 1);  // odd
  CHECK(s4_closed(factorize(945)) == 1);
}

TEST_CASE("s4 closed equals brute") {
  SpfSieve sieve(20000);
  for (u64 n = 1; n <= 20000; ++n) {
    auto pairs = sieve.factor_pairs(n);
    std::vector<PrimePower> parts;
    for (auto [p, e] : pairs) parts.push_back({p, e});
    FactoredNat fn = FactoredNat::from_parts(parts);
    CAPTURE(n);
    CHECK(s4_brute(fn) == s4_closed(fn));
  }
}

TEST_CASE("s4 defining property") {
  for (u64 n = 1; n <= 2000; ++n) {
    FactoredNat fn = factorize(n);
    u64 m = s4_brute(fn);
    auto fact_divides = [&](u64 k) {
      FactoredNat kf = FactoredNat::one();
      for (u64 i = 2; i <= k; ++i) kf = mul(kf, factorize(i));
      return divides(kf, fn);
    };
    CHECK(fact_divides(m));
    CHECK_FALSE(fact_divides(m + 1));
  }
}

TEST_CASE("s5 lcm of the s4 prefix") {
  CHECK(s5(factorize(3960)).value() == 60);
  CHECK(s5(factorize(1)).value() == 1);
  CHECK(s5(factorize(2)).value() == 2);
  for (u64 n = 1; n <= 500; ++n) {
    FactoredNat fn = factorize(n);
    CHECK(s5(fn) == lcm_upto(s4_brute(fn)));
  }
}

TEST_CASE("s6 lcm below S") {
  CHECK_THROWS_AS(s6(factorize(1)), std::domain_error);
  CHECK(s6(factorize(2)).value() == 1);
  CHECK(s6(factorize(16)).value() == 60);
  SmarandacheCtx ctx{1};
  for (u64 n = 2; n <= 500; ++n) {
    FactoredNat fn = factorize(n);
    CHECK(s6(fn, ctx) == lcm_upto(smarandache(fn, ctx) - 1));
  }
}

TEST_CASE("s7 factorial floor") {
  CHECK(s7(1).value() == 1);
  CHECK(s7(5).value() == 2);
  CHECK(s7(6).value() == 6);
  CHECK(s7(23).value() == 6);
  CHECK(s7(24).value() == 12);
  CHECK(s7(720).value() == 60);
  CHECK(s7(std::numeric_limits<u64>::max()) == lcm_upto(20));
  CHECK_THROWS_AS(s7(0), std::invalid_argument);
}

TEST_CASE("lattice morphism laws") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<u64> dist(2, 50000);
  SmarandacheCtx ctx{1};
  for (int k = 0; k < 400; ++k) {
    u64 a = dist(rng), b = dist(rng);
    FactoredNat fa = factorize(a), fb = factorize(b);
    FactoredNat g = gcd(fa, fb), l = lcm(fa, fb);

    CHECK(smarandache(l, ctx) == std::max(smarandache(fa, ctx), smarandache(fb, ctx)));
    CHECK(s4_brute(g) == std::min(s4_brute(fa), s4_brute(fb)));
    CHECK(s5(g) == gcd(s5(fa), s5(fb)));
    CHECK(s5(g).value() == std::min(s5(fa).value(), s5(fb).value()));
    CHECK(s6(l, ctx) == lcm(s6(fa, ctx), s6(fb, ctx)));
    CHECK(s7(std::min(a, b)).value() == std::min(s7(a).value(), s7(b).value()));
    CHECK(s7(std::max(a, b)) == lcm(s7(a), s7(b)));

    FactoredNat sum = factorize(a + b);
    CHECK(gcd(sum, l) == g);
    CHECK(std::min(s4_brute(sum), s4_brute(l)) == std::min(s4_brute(fa), s4_brute(fb)));
  }
}

}  // TEST_SUITE
