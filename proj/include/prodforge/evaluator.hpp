#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "prodforge/arithmetic.hpp"
#include "prodforge/rational.hpp"
#include "prodforge/series.hpp"

namespace prodforge {

/// Kahan-Babuska (Neumaier) compensated sum. Order of additions is the caller's.
class CompensatedSum {
 public:
  void add(double value) noexcept {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double value) noexcept {
    add(value);
    return *this;
  }
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct EvalPoint {
  double x = 0.0;
  std::optional<double> theta;
};

enum class EvalStatus { Converged, BoundaryExperimental, TailDominated };

const char* to_string(EvalStatus status) noexcept;

struct EvalReport {
  double value = 1.0;
  double log_value = 0.0;
  std::uint64_t K_used = 0;
  double tail_bound = 0.0;
  std::optional<double> reference;
  std::optional<double> residual;
  bool residual_relative = false;
  EvalStatus status = EvalStatus::Converged;

  /// Pass iff converged and residual <= tol.
  bool passes(double tol) const noexcept {
    return status == EvalStatus::Converged && residual.has_value() && *residual <= tol;
  }
};

/// Absolute when |reference| <= 10, relative otherwise.
void attach_reference(EvalReport& report, double reference);

struct EvalOptions {
  /// Allows |x| = 1; the report is then marked boundary-experimental with an infinite tail bound.
  bool boundary = false;
  /// Tail bounds above this mark the report tail-dominated.
  double tail_tolerance = 1e-9;
};

/// log of a single factor at variable value v (already raised to the form's variable power).
double log_factor(FactorKind kind, double v, std::uint64_t k, double theta);

/// Evaluates entries with k <= K in ascending order.
EvalReport eval_product(const ProductForm& form, const EvalPoint& point, std::uint64_t K,
                        const EvalOptions& options = {});

/// Bound on |sum_{k > K} e_k log factor_k|; +infinity at the boundary or when the bound does not apply.
double tail_bound(const ProductForm& form, const EvalPoint& point, std::uint64_t K);

/// Smallest K whose tail bound (multiplier * E * v^{K+1} / (1 - v)) is <= target.
std::uint64_t K_for_tail(FactorKind kind, double x, unsigned variable_power, double exponent_bound, double target);

/// K = ceil(-18 ln 10 / ln x), so that x^K < 1e-18; 1 for x = 0.
std::uint64_t abel_K(double x);

enum class PartialSumKind { AS, BS, BLogRaw };

const char* to_string(PartialSumKind kind) noexcept;

struct PartialSumReport {
  PartialSumKind kind;
  double s = 1.0;
  std::uint64_t N = 0;
  double sum = 0.0;
  /// Bound on the omitted tail; +infinity for the divergent raw b-sum.
  double tail_bound = 0.0;
  std::vector<std::pair<std::uint64_t, double>> checkpoints;
};

/// Compensated sum of coeff(n), n = 1..N. `checkpoints` lists n at which the running sum is recorded.
PartialSumReport partial_sum(PartialSumKind kind, double s, std::uint64_t N, const SpfTable& sieve,
                             const std::vector<std::uint64_t>& checkpoints = {});

/// Exact running sum for small N (integer s >= 2 for A_S / B_S; ignored for the raw b-sum).
Rational partial_sum_exact(PartialSumKind kind, std::int64_t s, std::uint64_t N, const SpfTable& sieve);

/// Floating coefficient used by partial_sum.
double partial_sum_coefficient(PartialSumKind kind, double s, std::uint64_t n, const SpfTable& sieve);

}  // namespace prodforge
