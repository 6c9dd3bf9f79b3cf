#include <doctest.h>

#include <numeric>
#include <random>

#include "kempner/arith.hpp"
#include "kempner/factored.hpp"
#include "kempner/prime_table.hpp"

using namespace kempner;

TEST_SUITE("arith") {

TEST_CASE("prime table basics") {
  auto& t = PrimeTable::instance();
  CHECK(t.prime(1) == 2);
  CHECK(t.prime(2) == 3);
  CHECK(t.prime(25) == 97);
  CHECK(t.is_prime(2));
  CHECK(t.is_prime(7919));
  CHECK_FALSE(t.is_prime(1));
  CHECK_FALSE(t.is_prime(7917));
  CHECK(t.next_prime_after(7) == 11);
  CHECK(t.next_prime_after(1) == 2);
  CHECK(t.index_of(11) == 5);
  CHECK(t.index_of(12) == 0);
  CHECK(t.primes_upto(10) == std::vector<u64>{2, 3, 5, 7});
  CHECK(nth_prime(100) == 541);
}

TEST_CASE("factorization round trip") {
  FactoredNat n = factorize(3960);
  CHECK(n.parts() == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}, {11, 1}});
  CHECK(n.value_u64() == 3960);
  CHECK(factorize(1).is_one());
  CHECK(factorize(1).parts().empty());
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK(factorize(97).is_prime_power());
  CHECK(factorize(32).is_prime_power());
  CHECK_FALSE(factorize(6).is_prime_power());
  CHECK(n.exponent_of(2) == 3);
  CHECK(n.exponent_of(7) == 0);
}

TEST_CASE("from_parts validates") {
  CHECK_THROWS_AS(FactoredNat::from_parts({{4, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FactoredNat::from_parts({{3, 1}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FactoredNat::from_parts({{2, 0}}), std::invalid_argument);
  CHECK(FactoredNat::from_parts({{2, 3}, {5, 1}}).value_u64() == 40);
}

TEST_CASE("gcd lcm mul divides") {
  FactoredNat a = factorize(360), b = factorize(700);
  auto [g, l] = gcd_lcm(a, b);
  CHECK(g.value_u64() == 20);
  CHECK(l.value_u64() == 12600);
  CHECK(gcd(a, b) == g);
  CHECK(lcm(a, b) == l);
  CHECK(mul(a, b).value_u64() == 252000);
  CHECK(divides(g, a));
  CHECK(divides(g, b));
  CHECK_FALSE(divides(a, b));
  CHECK(divides(factorize(1), a));
}

TEST_CASE("gcd lcm agree with std on random pairs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<u64> dist(1, 1000000);
  for (int i = 0; i < 300; ++i) {
    u64 a = dist(rng), b = dist(rng);
    CHECK(gcd(factorize(a), factorize(b)).value_u64() == std::gcd(a, b));
    CHECK(lcm(factorize(a), factorize(b)).value_u64() == std::lcm(a, b));
  }
}

TEST_CASE("legendre exponent") {
  CHECK(legendre_exponent(2, 10) == 8);
  CHECK(legendre_exponent(3, 10) == 4);
  CHECK(legendre_exponent(5, 2000) == 499);
  CHECK(legendre_exponent(7, 6) == 0);
  CHECK(legendre_exponent(2, 0) == 0);
  CHECK_THROWS_AS(legendre_exponent(6, 10), std::invalid_argument);
  // both internal routes run on every call; a disagreement would throw
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 97ull})
    for (u64 m = 0; m <= 5000; ++m) legendre_exponent(p, m);
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(factorize(1)) == 1);
  CHECK(euler_phi(factorize(2)) == 1);
  CHECK(euler_phi(factorize(3960)) == 960);
  CHECK(euler_phi(factorize(97)) == 96);
  u64 acc = 0;
  for (u64 d : divisors_u64(3960)) acc += euler_phi(factorize(d));
  CHECK(acc == 3960);
}

TEST_CASE("moebius mu") {
  CHECK(moebius_mu(factorize(1)) == 1);
  CHECK(moebius_mu(factorize(2)) == -1);
  CHECK(moebius_mu(factorize(4)) == 0);
  CHECK(moebius_mu(factorize(6)) == 1);
  CHECK(moebius_mu(factorize(30)) == -1);
  for (u64 n = 2; n <= 2000; ++n) {
    int acc = 0;
    for (u64 d : divisors_u64(n)) acc += moebius_mu(factorize(d));
    CHECK(acc == 0);
  }
}

TEST_CASE("tau") {
  CHECK(tau(factorize(1)) == 1);
  CHECK(tau(factorize(12)) == 6);
  CHECK(tau(factorize(3960)) == 48);
  for (u64 n = 1; n <= 500; ++n)
    CHECK(tau(factorize(n)) == divisors_u64(n).size());
}

TEST_CASE("lcm_upto") {
  CHECK(lcm_upto(1).is_one());
  CHECK(lcm_upto(10).value_u64() == 2520);
  CHECK(lcm_upto(6).value_u64() == 60);
  CHECK_THROWS_AS(lcm_upto(0), std::invalid_argument);
  for (u64 m = 1; m <= 40; ++m) {
    FactoredNat l = lcm_upto(m);
    BigInt v = l.value();
    for (u64 i = 1; i <= m; ++i) CHECK(v % i == 0);
    if (m >= 2) CHECK(lcm(l, factorize(m)) == l);
  }
}

TEST_CASE("spf sieve matches trial division") {
  SpfSieve sieve(5000);
  CHECK(sieve.limit() == 5000);
  for (u64 n = 1; n <= 5000; ++n) {
    auto pairs = sieve.factor_pairs(n);
    std::vector<PrimePower> parts;
    for (auto [p, e] : pairs) parts.push_back({p, static_cast<u32>(e)});
    CHECK(FactoredNat::from_parts(parts) == factorize(n));
  }
  CHECK_THROWS_AS(sieve.factor_pairs(5001), std::invalid_argument);
}

TEST_CASE("checked arithmetic overflows loudly") {
  CHECK_THROWS_AS(checked_mul(u64(1) << 40, u64(1) << 40), std::overflow_error);
  CHECK_THROWS_AS(checked_pow(10, 30), std::overflow_error);
  CHECK(checked_pow(2, 62) == u64(1) << 62);
  CHECK(big_pow(2, 100) == BigInt(1) << 100);
}

}  // TEST_SUITE
