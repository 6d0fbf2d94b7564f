#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prodforge/arithmetic.hpp"
#include "prodforge/coefficients.hpp"
#include "prodforge/rational.hpp"

namespace prodforge {

enum class Parity {
  All,
  OddOnly,
  /// Series in y = x^2: degree l stands for x^{2l}.
  EvenSquared,
};

const char* to_string(Parity parity) noexcept;

struct SeriesTerm {
  std::uint64_t degree;
  Rational value;
};

/// Finite series sum_l c_l x^l (degrees strictly increasing, all >= 1).
class SeriesSpec {
 public:
  SeriesSpec(std::string name, Parity parity, std::vector<SeriesTerm> terms, std::string description = {});

  const std::string& name() const noexcept { return name_; }
  const std::string& description() const noexcept { return description_; }
  Parity parity() const noexcept { return parity_; }
  const std::vector<SeriesTerm>& terms() const noexcept { return terms_; }
  /// Coefficient at `degree`, zero when absent.
  Rational coefficient(std::uint64_t degree) const;
  std::uint64_t max_degree() const noexcept { return terms_.empty() ? 0 : terms_.back().degree; }

  SeriesSpec plus(const SeriesSpec& other) const;

 private:
  std::string name_;
  Parity parity_;
  std::vector<SeriesTerm> terms_;
  std::string description_;
};

enum class FactorKind {
  Minus,     // 1 - x^k
  Plus,      // 1 + x^k
  RatioOdd,  // (1 - x^k) / (1 + x^k), odd k
  CosMinus,  // 1 - 2 x^k cos k theta + x^{2k}
  CosPlus,   // 1 + 2 x^k cos k theta + x^{2k}
  CosRatio,  // CosMinus / CosPlus, odd k
};

const char* to_string(FactorKind kind) noexcept;
FactorKind parse_factor_kind(const std::string& text);
bool is_cos_kind(FactorKind kind) noexcept;
bool is_odd_only_kind(FactorKind kind) noexcept;

struct ProductEntry {
  std::uint64_t k;
  double exponent;
  /// Present for x-only forms built from exact data.
  std::optional<Rational> exact;
};

/// prod_k factor_k(x, theta)^{e_k}; its logarithm represents scale * p.
struct ProductForm {
  FactorKind kind = FactorKind::Minus;
  std::vector<ProductEntry> entries;
  /// Fixed angle the exponents were built for (cos-weighted transforms).
  std::optional<double> theta;
  /// Fixed radius the exponents were built for (trig-series transforms).
  std::optional<double> fixed_x;
  Rational scale{1};
  /// 2 when the form is written in y = x^2.
  unsigned variable_power = 1;
  /// Analytic bound on |e_k| for every k (including beyond the entries), when known.
  std::optional<double> exponent_bound;
  std::string source;

  std::uint64_t max_index() const noexcept { return entries.empty() ? 0 : entries.back().k; }
};

enum class DivisorFilter { All, Odd };

/// e_k = sum over l | k, l a series degree passing the filter, of c_l * table[k / l], k = 1..K.
std::vector<Rational> dirichlet_mix(const SeriesSpec& series, const CoeffTable& table, std::uint64_t K,
                                    DivisorFilter filter);

/// Minus uses A_LOG (scale 1), Plus uses B_LOG (scale 1), RatioOdd uses A_LOG over odd k (scale 2).
ProductForm to_product(const SeriesSpec& series, FactorKind target, std::uint64_t K, const SpfTable& sieve);

struct TransformLimits {
  double eps_cos = 1e-6;
  double growth_max = 1e12;
};

/// Weights c_l / cos(l theta); scale 2 (CosMinus, CosPlus) or 4 (CosRatio).
ProductForm to_cos_product(const SeriesSpec& series, double theta, FactorKind target, std::uint64_t K,
                           const SpfTable& sieve, const TransformLimits& limits = {});

/// Series in cos(l theta); weights c_l / x^l at fixed 0 < x < 1.
ProductForm trig_to_product(const SeriesSpec& series, double x, FactorKind target, std::uint64_t K,
                            const SpfTable& sieve, const TransformLimits& limits = {});

struct FormalCheck {
  bool ok = false;
  std::optional<std::uint64_t> first_mismatch;
};

/// Exact comparison of scale^{-1} * sum_k e_k log(factor_k) with the series through degree K.
FormalCheck formal_log_check(const ProductForm& form, const SeriesSpec& series, std::uint64_t K);

/// Coefficients 1..K of scale^{-1} * sum_k e_k log(factor_k) (index 0 unused).
std::vector<Rational> formal_log_expansion(const ProductForm& form, std::uint64_t K);

}  // namespace prodforge
