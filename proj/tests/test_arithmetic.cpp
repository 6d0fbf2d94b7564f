#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "prodforge/arithmetic.hpp"
#include "prodforge/error.hpp"

using namespace prodforge;

namespace {

const SpfTable& sieve() {
  static const SpfTable table(200'000);
  return table;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Parse;
}

}  // namespace

TEST_SUITE("arithmetic") {

TEST_CASE("smallest prime factors") {
  const SpfTable t(100);
  CHECK(t.spf(91) == 7);
  CHECK(t.spf(97) == 97);
  CHECK(t.spf(2) == 2);
  CHECK(t.spf(100) == 2);
  CHECK(code_of([&] { (void)t.spf(1); }) == ErrorCode::OutOfRange);
  CHECK(code_of([&] { (void)t.spf(101); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { SpfTable bad(1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { SpfTable huge(kMaxSieveLimit + 1); }) == ErrorCode::ResourceLimit);
}

TEST_CASE("factorize examples") {
  CHECK(factorize(1, sieve()).empty());
  CHECK(factorize(360, sieve()) == PrimeFactorization{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(30030, sieve()) == PrimeFactorization{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}});
  CHECK(code_of([] { (void)factorize(0, sieve()); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { (void)factorize(200'001, sieve()); }) == ErrorCode::OutOfRange);
}

TEST_CASE("mobius and square-free order") {
  CHECK(mobius(1, sieve()) == 1);
  CHECK(mobius(6, sieve()) == 1);
  CHECK(mobius(30, sieve()) == -1);
  CHECK(mobius(12, sieve()) == 0);
  CHECK(squarefree_order(30, sieve()) == 3u);
  CHECK(squarefree_order(1, sieve()) == 0u);
  CHECK_FALSE(squarefree_order(18, sieve()).has_value());
}

TEST_CASE("divisors") {
  CHECK(divisors(36, sieve()) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36});
  CHECK(divisors(1, sieve()) == std::vector<std::uint64_t>{1});
  CHECK(divisors(97, sieve()) == std::vector<std::uint64_t>{1, 97});
}

TEST_CASE("factorization, mobius and divisors agree with trial division up to 1e4") {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    PrimeFactorization expected;
    for (const auto& [p, e] : oracle::trial_factor(n)) expected.push_back({p, e});
    REQUIRE(factorize(n, sieve()) == expected);
    REQUIRE(mobius(n, sieve()) == oracle::mobius(n));
    if (n <= 2000) REQUIRE(divisors(n, sieve()) == oracle::divisors(n));
  }
}

TEST_CASE("mobius is multiplicative and sums to zero over divisors") {
  for (std::uint64_t m = 1; m <= 300; ++m) {
    for (std::uint64_t n = 1; n <= 300; ++n) {
      if (std::gcd(m, n) != 1) continue;
      REQUIRE(mobius(m * n, sieve()) == mobius(m, sieve()) * mobius(n, sieve()));
    }
  }
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    int total = 0;
    for (auto d : divisors(n, sieve())) total += mobius(d, sieve());
    REQUIRE(total == 0);
  }
}

TEST_CASE("Bernoulli numbers") {
  const BernoulliTable B(10);
  CHECK(B.max_index() == 20);
  CHECK(B[0] == Rational(1));
  CHECK(B[1] == Rational(-1, 2));
  CHECK(B[2] == Rational(1, 6));
  CHECK(B[4] == Rational(-1, 30));
  CHECK(B[12] == Rational(-691, 2730));
  CHECK(B[3].is_zero());
  const auto reference = oracle::bernoulli(60);
  const BernoulliTable wide(30);
  for (unsigned m = 0; m <= 60; ++m) REQUIRE(wide[m].raw() == reference[m]);
  CHECK(code_of([] { BernoulliTable none(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
}

}  // TEST_SUITE
