#include "prodforge/arithmetic.hpp"

#include <algorithm>
#include <string>

#include "prodforge/error.hpp"

namespace prodforge {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": n must be >= 1");
}

}  // namespace

SpfTable::SpfTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw Error(ErrorCode::InvalidArgument, "sieve limit must be >= 2");
  if (limit > kMaxSieveLimit) {
    throw Error(ErrorCode::ResourceLimit,
                "sieve limit " + std::to_string(limit) + " exceeds maximum " + std::to_string(kMaxSieveLimit));
  }
  spf_.assign(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (const std::uint32_t p : primes) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

std::uint64_t SpfTable::spf(std::uint64_t n) const {
  if (n < 2 || n > limit_) {
    throw Error(ErrorCode::OutOfRange, "spf(" + std::to_string(n) + ") outside [2, " + std::to_string(limit_) + "]");
  }
  return spf_[n];
}

SpfTable build_spf_sieve(std::uint64_t limit) { return SpfTable(limit); }

PrimeFactorization factorize(std::uint64_t n, const SpfTable& sieve) {
  require_positive(n, "factorize");
  if (n > sieve.limit()) {
    throw Error(ErrorCode::OutOfRange,
                "factorize: " + std::to_string(n) + " exceeds sieve limit " + std::to_string(sieve.limit()));
  }
  PrimeFactorization out;
  while (n > 1) {
    const std::uint64_t p = sieve.spf(n);
    unsigned m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    out.push_back({p, m});
  }
  return out;
}

int mobius(std::uint64_t n, const SpfTable& sieve) {
  const auto order = squarefree_order(n, sieve);
  if (!order) return 0;
  return (*order % 2 == 0) ? 1 : -1;
}

std::optional<unsigned> squarefree_order(std::uint64_t n, const SpfTable& sieve) {
  require_positive(n, "squarefree_order");
  const auto f = factorize(n, sieve);
  for (const auto& pp : f) {
    if (pp.multiplicity > 1) return std::nullopt;
  }
  return static_cast<unsigned>(f.size());
}

std::vector<std::uint64_t> divisors(std::uint64_t n, const SpfTable& sieve) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, m] : factorize(n, sieve)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned e = 1; e <= m; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(std::uint64_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BernoulliTable::BernoulliTable(std::uint64_t J) {
  if (J == 0) throw Error(ErrorCode::InvalidArgument, "bernoulli_table: J must be >= 1");
  const std::uint64_t top = 2 * J;
  values_.assign(top + 1, Rational(0));
  values_[0] = Rational(1);
  values_[1] = Rational(-1, 2);
  // B_m = -1/(m+1) * sum_{i<m} C(m+1, i) B_i; odd entries beyond B_1 vanish.
  for (std::uint64_t m = 2; m <= top; m += 2) {
    mpq_class acc = mpq_class(binomial(m + 1, 1)) * values_[1].raw() + values_[0].raw();
    for (std::uint64_t i = 2; i < m; i += 2) acc += mpq_class(binomial(m + 1, i)) * values_[i].raw();
    acc /= -static_cast<long>(m + 1);
    values_[m] = Rational(std::move(acc));
  }
}

BernoulliTable bernoulli_table(std::uint64_t J) { return BernoulliTable(J); }

}  // namespace prodforge
