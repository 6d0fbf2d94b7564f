#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prodforge/arithmetic.hpp"
#include "prodforge/rational.hpp"

namespace prodforge {

/// Exponent sequences defined by
///   A_LOG: x = sum a_k log(1 - x^k)
///   B_LOG: x = sum b_k log(1 + x^k)
///   A_S:   x = sum a_k Phi(x^k),        Phi(u)  = sum u^j / j^s
///   B_S:   x = sum b_k PhiTilde(x^k),   PhiTilde(u) = sum (-1)^{j+1} u^j / j^s
enum class CoeffKind { ALog, BLog, AS, BS };

enum class Provenance { ClosedForm, Solver };

const char* to_string(CoeffKind kind) noexcept;
/// Accepts "a", "b", "a_s", "b_s" (and the upper-case kind names).
CoeffKind parse_coeff_kind(const std::string& text);
bool needs_s(CoeffKind kind) noexcept;

class CoeffTable {
 public:
  CoeffTable(CoeffKind kind, std::optional<std::uint64_t> s, std::vector<Rational> values, Provenance provenance);

  CoeffKind kind() const noexcept { return kind_; }
  std::optional<std::uint64_t> s() const noexcept { return s_; }
  std::uint64_t limit() const noexcept { return values_.size() - 1; }
  Provenance provenance() const noexcept { return provenance_; }

  /// 1-based; throws Error(OutOfRange) beyond the limit.
  const Rational& operator[](std::uint64_t n) const;
  /// Index 0 is unused and holds zero.
  const std::vector<Rational>& values() const noexcept { return values_; }

 private:
  CoeffKind kind_;
  std::optional<std::uint64_t> s_;
  std::vector<Rational> values_;
  Provenance provenance_;
};

Rational a_closed(std::uint64_t n, const SpfTable& sieve);
Rational b_closed(std::uint64_t n, const SpfTable& sieve);
Rational a_s_closed(std::uint64_t n, std::int64_t s, const SpfTable& sieve);
Rational b_s_closed(std::uint64_t n, std::int64_t s, const SpfTable& sieve);

/// Closed-form table for n = 1..N.
CoeffTable closed_table(CoeffKind kind, std::uint64_t N, std::optional<std::int64_t> s, const SpfTable& sieve);

/// Convolution weight w(m) of the comparison-of-coefficients row for `kind`.
Rational row_weight(CoeffKind kind, std::uint64_t m, std::optional<std::int64_t> s);

/// Forward substitution through the lower-triangular system
///   sum_{d | n} values[d] * w(n/d) = 0   (n >= 2),
/// with values[1] = -1 for A_LOG and +1 otherwise. Uses no closed form.
CoeffTable solve_triangular(CoeffKind kind, std::uint64_t N, std::optional<std::int64_t> s);

struct Certification {
  CoeffKind kind;
  std::optional<std::int64_t> s;
  std::uint64_t checked = 0;
  std::uint64_t equal = 0;
  std::optional<std::uint64_t> first_mismatch;
  std::string closed_value;  // at first mismatch
  std::string solver_value;

  bool certified() const noexcept { return !first_mismatch.has_value(); }
};

struct CertifyOptions {
  /// Test hook: perturbs the closed-form value at this index before comparing.
  std::optional<std::uint64_t> inject_mismatch_at;
};

Certification certify_table(CoeffKind kind, std::uint64_t N, std::optional<std::int64_t> s,
                            const SpfTable& sieve, const CertifyOptions& options = {});

/// All four kinds up to N: A_LOG and B_LOG once, A_S and B_S once per entry of s_list.
std::vector<Certification> certify_tables(std::uint64_t N, const std::vector<std::int64_t>& s_list,
                                          const SpfTable& sieve);

}  // namespace prodforge

namespace prodforge {

struct RowTerm {
  std::uint64_t index;  // d
  Rational weight;      // w(n/d)
};

/// Row n of the triangular system as (d, w(n/d)) pairs over d | n, ascending d.
std::vector<RowTerm> comparison_row(CoeffKind kind, std::uint64_t n, std::optional<std::int64_t> s);

}  // namespace prodforge
