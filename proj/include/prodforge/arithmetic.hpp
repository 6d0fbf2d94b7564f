#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prodforge/rational.hpp"

namespace prodforge {

inline constexpr std::uint64_t kDefaultSieveLimit = 10'000'000;
/// Hard cap on the sieve size: 4 bytes per entry, so 400 MB at the cap.
inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

struct PrimePower {
  std::uint64_t prime;
  unsigned multiplicity;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using PrimeFactorization = std::vector<PrimePower>;

/// Smallest-prime-factor table for 2 <= n <= limit (linear sieve).
class SpfTable {
 public:
  explicit SpfTable(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  /// Smallest prime factor of n; n must lie in [2, limit].
  std::uint64_t spf(std::uint64_t n) const;
  bool is_prime(std::uint64_t n) const { return n >= 2 && spf(n) == n; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
};

SpfTable build_spf_sieve(std::uint64_t limit);

PrimeFactorization factorize(std::uint64_t n, const SpfTable& sieve);

int mobius(std::uint64_t n, const SpfTable& sieve);

/// Number of distinct primes when n is square-free; nullopt otherwise.
std::optional<unsigned> squarefree_order(std::uint64_t n, const SpfTable& sieve);

std::vector<std::uint64_t> divisors(std::uint64_t n, const SpfTable& sieve);

/// Exact B_0 .. B_{2J}, convention B_1 = -1/2.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::uint64_t J);

  std::uint64_t max_index() const noexcept { return values_.size() - 1; }
  const Rational& operator[](std::uint64_t m) const { return values_.at(m); }
  const std::vector<Rational>& values() const noexcept { return values_; }

 private:
  std::vector<Rational> values_;
};

BernoulliTable bernoulli_table(std::uint64_t J);

mpz_class binomial(std::uint64_t n, std::uint64_t k);
mpz_class factorial(std::uint64_t n);

}  // namespace prodforge
