#include "prodforge/coefficients.hpp"

#include <algorithm>
#include <cctype>

#include "prodforge/error.hpp"

namespace prodforge {

namespace {

void require_index(std::uint64_t n, const char* what) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": n must be >= 1");
}

void require_exponent(std::int64_t s, const char* what) {
  if (s < 2) {
    throw Error(ErrorCode::UnsupportedParameter,
                std::string(what) + ": exact tables need integer s >= 2 (got " + std::to_string(s) + ")");
  }
}

void check_kind_s(CoeffKind kind, const std::optional<std::int64_t>& s) {
  if (needs_s(kind) && !s) {
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(kind)) + " requires s");
  }
  if (!needs_s(kind) && s) {
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(kind)) + " does not take s");
  }
  if (s) require_exponent(*s, to_string(kind));
}

// n = 2^k * m with m odd.
std::pair<unsigned, std::uint64_t> split_two(std::uint64_t n) {
  unsigned k = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++k;
  }
  return {k, n};
}

}  // namespace

const char* to_string(CoeffKind kind) noexcept {
  switch (kind) {
    case CoeffKind::ALog: return "A_LOG";
    case CoeffKind::BLog: return "B_LOG";
    case CoeffKind::AS: return "A_S";
    case CoeffKind::BS: return "B_S";
  }
  return "?";
}

CoeffKind parse_coeff_kind(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "a" || t == "a_log") return CoeffKind::ALog;
  if (t == "b" || t == "b_log") return CoeffKind::BLog;
  if (t == "a_s") return CoeffKind::AS;
  if (t == "b_s") return CoeffKind::BS;
  throw Error(ErrorCode::InvalidArgument, "unknown coefficient kind '" + text + "'");
}

bool needs_s(CoeffKind kind) noexcept { return kind == CoeffKind::AS || kind == CoeffKind::BS; }

CoeffTable::CoeffTable(CoeffKind kind, std::optional<std::uint64_t> s, std::vector<Rational> values,
                       Provenance provenance)
    : kind_(kind), s_(s), values_(std::move(values)), provenance_(provenance) {
  if (values_.empty()) values_.emplace_back(0);
}

const Rational& CoeffTable::operator[](std::uint64_t n) const {
  if (n == 0 || n >= values_.size()) {
    throw Error(ErrorCode::OutOfRange,
                "coefficient index " + std::to_string(n) + " outside [1, " + std::to_string(limit()) + "]");
  }
  return values_[n];
}

Rational a_closed(std::uint64_t n, const SpfTable& sieve) {
  require_index(n, "a_closed");
  if (n == 1) return Rational(-1);
  const auto order = squarefree_order(n, sieve);
  if (!order) return Rational(0);
  const long sign = (*order % 2 == 1) ? 1 : -1;  // (-1)^{k+1}
  return Rational(mpz_class(sign), mpz_class(static_cast<unsigned long>(n)));
}

Rational b_closed(std::uint64_t n, const SpfTable& sieve) {
  require_index(n, "b_closed");
  const auto [k, m] = split_two(n);
  Rational value(1);
  if (m > 1) {
    for (const auto& [p, mult] : factorize(m, sieve)) {
      if (mult > 1) return Rational(0);
      value *= Rational(mpz_class(-1), mpz_class(static_cast<unsigned long>(p)));
    }
  }
  if (k >= 1) value *= Rational(1, 2);
  return value;
}

Rational a_s_closed(std::uint64_t n, std::int64_t s, const SpfTable& sieve) {
  require_index(n, "a_s_closed");
  require_exponent(s, "a_s_closed");
  const int mu = mobius(n, sieve);
  if (mu == 0) return Rational(0);
  return Rational(mpz_class(mu), ipow(mpz_class(static_cast<unsigned long>(n)), static_cast<std::uint64_t>(s)));
}

Rational b_s_closed(std::uint64_t n, std::int64_t s, const SpfTable& sieve) {
  require_index(n, "b_s_closed");
  require_exponent(s, "b_s_closed");
  const auto [k, m] = split_two(n);
  const int mu = (m == 1) ? 1 : mobius(m, sieve);
  if (mu == 0) return Rational(0);
  const auto us = static_cast<std::uint64_t>(s);
  mpz_class num(mu);
  mpz_class den = ipow(mpz_class(static_cast<unsigned long>(m)), us);
  if (k >= 1) {
    // 2^{k-1} * 2^{-ks}
    num *= ipow(mpz_class(2), k - 1);
    den *= ipow(mpz_class(2), static_cast<std::uint64_t>(k) * us);
  }
  return Rational(num, den);
}

CoeffTable closed_table(CoeffKind kind, std::uint64_t N, std::optional<std::int64_t> s, const SpfTable& sieve) {
  check_kind_s(kind, s);
  if (N == 0) throw Error(ErrorCode::InvalidArgument, "table size N must be >= 1");
  if (N > sieve.limit() && N > 1) {
    throw Error(ErrorCode::OutOfRange,
                "table size " + std::to_string(N) + " exceeds sieve limit " + std::to_string(sieve.limit()));
  }
  std::vector<Rational> values(N + 1, Rational(0));
  for (std::uint64_t n = 1; n <= N; ++n) {
    switch (kind) {
      case CoeffKind::ALog: values[n] = a_closed(n, sieve); break;
      case CoeffKind::BLog: values[n] = b_closed(n, sieve); break;
      case CoeffKind::AS: values[n] = a_s_closed(n, *s, sieve); break;
      case CoeffKind::BS: values[n] = b_s_closed(n, *s, sieve); break;
    }
  }
  std::optional<std::uint64_t> us;
  if (s) us = static_cast<std::uint64_t>(*s);
  return CoeffTable(kind, us, std::move(values), Provenance::ClosedForm);
}

Rational row_weight(CoeffKind kind, std::uint64_t m, std::optional<std::int64_t> s) {
  require_index(m, "row_weight");
  const bool alternating = (kind == CoeffKind::BLog || kind == CoeffKind::BS);
  const long sign = (alternating && m % 2 == 0) ? -1 : 1;
  const std::uint64_t power = needs_s(kind) ? static_cast<std::uint64_t>(s.value()) : 1;
  return Rational(mpz_class(sign), ipow(mpz_class(static_cast<unsigned long>(m)), power));
}

CoeffTable solve_triangular(CoeffKind kind, std::uint64_t N, std::optional<std::int64_t> s) {
  check_kind_s(kind, s);
  if (N == 0) throw Error(ErrorCode::InvalidArgument, "table size N must be >= 1");

  std::vector<Rational> weights(N + 1, Rational(0));
  for (std::uint64_t m = 1; m <= N; ++m) weights[m] = row_weight(kind, m, s);

  // rows[n] collects sum_{d | n, d < n} values[d] * w(n/d); the diagonal weight is w(1) = 1.
  std::vector<mpq_class> rows(N + 1);
  std::vector<Rational> values(N + 1, Rational(0));
  for (std::uint64_t d = 1; d <= N; ++d) {
    if (d == 1) {
      values[1] = Rational(kind == CoeffKind::ALog ? -1 : 1);
    } else {
      values[d] = Rational(mpq_class(-rows[d]));
    }
    if (values[d].is_zero()) continue;
    const mpq_class& vd = values[d].raw();
    for (std::uint64_t m = 2; d * m <= N; ++m) rows[d * m] += vd * weights[m].raw();
  }
  std::optional<std::uint64_t> us;
  if (s) us = static_cast<std::uint64_t>(*s);
  return CoeffTable(kind, us, std::move(values), Provenance::Solver);
}

Certification certify_table(CoeffKind kind, std::uint64_t N, std::optional<std::int64_t> s,
                            const SpfTable& sieve, const CertifyOptions& options) {
  const CoeffTable closed = closed_table(kind, N, s, sieve);
  const CoeffTable solved = solve_triangular(kind, N, s);
  Certification report{kind, s};
  for (std::uint64_t n = 1; n <= N; ++n) {
    Rational expected = closed[n];
    if (options.inject_mismatch_at && *options.inject_mismatch_at == n) expected += Rational(1);
    ++report.checked;
    if (expected == solved[n]) {
      ++report.equal;
    } else if (!report.first_mismatch) {
      report.first_mismatch = n;
      report.closed_value = expected.to_string();
      report.solver_value = solved[n].to_string();
    }
  }
  return report;
}

std::vector<Certification> certify_tables(std::uint64_t N, const std::vector<std::int64_t>& s_list,
                                          const SpfTable& sieve) {
  std::vector<Certification> out;
  out.push_back(certify_table(CoeffKind::ALog, N, std::nullopt, sieve));
  out.push_back(certify_table(CoeffKind::BLog, N, std::nullopt, sieve));
  for (const auto s : s_list) {
    out.push_back(certify_table(CoeffKind::AS, N, s, sieve));
    out.push_back(certify_table(CoeffKind::BS, N, s, sieve));
  }
  return out;
}

std::vector<RowTerm> comparison_row(CoeffKind kind, std::uint64_t n, std::optional<std::int64_t> s) {
  check_kind_s(kind, s);
  require_index(n, "comparison_row");
  std::vector<RowTerm> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back({d, row_weight(kind, n / d, s)});
  }
  return out;
}

}  // namespace prodforge
