#pragma once

// Reference implementations used only by the tests. None of them call into the library.

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace oracle {

using Factors = std::vector<std::pair<std::uint64_t, unsigned>>;

inline Factors trial_factor(std::uint64_t n) {
  Factors out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline int mobius(std::uint64_t n) {
  int mu = 1;
  for (const auto& [p, e] : trial_factor(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

// Canonical n/d; gmpxx comparisons assume canonical operands.
inline mpq_class ratio(const mpz_class& n, const mpz_class& d) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Akiyama-Tanigawa; yields B_1 = +1/2, so flip that one.
inline std::vector<mpq_class> bernoulli(unsigned M) {
  std::vector<mpq_class> out(M + 1);
  std::vector<mpq_class> a(M + 1);
  for (unsigned m = 0; m <= M; ++m) {
    a[m] = mpq_class(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
    out[m] = a[0];
  }
  if (M >= 1) out[1] = -out[1];
  return out;
}

// Truncated power series: index = degree.
using Series = std::vector<mpq_class>;

// log f for f(0) = 1 via f * (log f)' = f'.
inline Series series_log(const Series& f, unsigned order) {
  Series L(order + 1, 0);
  // g = (log f)', degree i coefficient stored in g[i].
  Series g(order, 0);
  for (unsigned i = 0; i < order; ++i) {
    mpq_class rhs = (i + 1 < f.size()) ? mpq_class((i + 1) * f[i + 1]) : mpq_class(0);
    for (unsigned j = 1; j <= i && j < f.size(); ++j) rhs -= f[j] * g[i - j];
    g[i] = rhs;
  }
  for (unsigned i = 1; i <= order; ++i) L[i] = g[i - 1] / i;
  return L;
}

inline mpq_class fact(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return mpq_class(f);
}

// log(x / sin x) as a series in y = x^2, degrees 1..order.
inline Series log_x_over_sin(unsigned order) {
  Series f(order + 1);
  for (unsigned j = 0; j <= order; ++j) f[j] = (j % 2 == 0 ? 1 : -1) / fact(2 * j + 1);
  Series L = series_log(f, order);
  for (auto& c : L) c = -c;
  return L;
}

// log(1 / cos x) as a series in y = x^2.
inline Series log_sec(unsigned order) {
  Series f(order + 1);
  for (unsigned j = 0; j <= order; ++j) f[j] = (j % 2 == 0 ? 1 : -1) / fact(2 * j);
  Series L = series_log(f, order);
  for (auto& c : L) c = -c;
  return L;
}

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 256) { mpfr_init2(v_, prec); }
  ~BigFloat() { mpfr_clear(v_); }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;
  mpfr_ptr get() { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

inline double zeta(unsigned long s) {
  BigFloat z;
  mpfr_zeta_ui(z.get(), s, MPFR_RNDN);
  return z.to_double();
}

// ((n-1)! / (sqrt(2 pi) n^{n-1/2} e^{-n}))^2 via lgamma in 256 bits.
inline double stirling_squared_ratio(unsigned long n) {
  BigFloat lg, t, pi;
  int sign = 0;
  mpfr_set_ui(t.get(), n, MPFR_RNDN);
  mpfr_lgamma(lg.get(), &sign, t.get(), MPFR_RNDN);  // log (n-1)!
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_mul_ui(pi.get(), pi.get(), 2, MPFR_RNDN);
  mpfr_log(pi.get(), pi.get(), MPFR_RNDN);
  mpfr_div_ui(pi.get(), pi.get(), 2, MPFR_RNDN);
  mpfr_sub(lg.get(), lg.get(), pi.get(), MPFR_RNDN);
  mpfr_log(t.get(), t.get(), MPFR_RNDN);
  mpfr_mul_d(t.get(), t.get(), static_cast<double>(n) - 0.5, MPFR_RNDN);
  mpfr_sub(lg.get(), lg.get(), t.get(), MPFR_RNDN);
  mpfr_add_ui(lg.get(), lg.get(), n, MPFR_RNDN);
  mpfr_mul_ui(lg.get(), lg.get(), 2, MPFR_RNDN);
  mpfr_exp(lg.get(), lg.get(), MPFR_RNDN);
  return lg.to_double();
}

}  // namespace oracle
