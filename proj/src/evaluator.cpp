#include "prodforge/evaluator.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "prodforge/coefficients.hpp"
#include "prodforge/error.hpp"

namespace prodforge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// |log factor(u)| <= multiplier * |u| whenever |u| <= 1/2.
double tail_multiplier(FactorKind kind) {
  switch (kind) {
    case FactorKind::Minus:
    case FactorKind::Plus: return 2.0;
    case FactorKind::RatioOdd:
    case FactorKind::CosMinus:
    case FactorKind::CosPlus: return 4.0;
    case FactorKind::CosRatio: return 8.0;
  }
  return 8.0;
}

double exponent_bound_of(const ProductForm& form) {
  if (form.exponent_bound) return *form.exponent_bound;
  double e = 0.0;
  for (const auto& entry : form.entries) e = std::max(e, std::abs(entry.exponent));
  return e;
}

std::optional<double> resolve_theta(const ProductForm& form, const EvalPoint& point) {
  if (form.theta && point.theta && *form.theta != *point.theta) {
    throw Error(ErrorCode::InvalidArgument, "evaluation theta differs from the theta the exponents were built for");
  }
  return form.theta ? form.theta : point.theta;
}

std::pair<unsigned, std::uint64_t> split_two(std::uint64_t n) {
  unsigned k = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++k;
  }
  return {k, n};
}

}  // namespace

const char* to_string(EvalStatus status) noexcept {
  switch (status) {
    case EvalStatus::Converged: return "converged";
    case EvalStatus::BoundaryExperimental: return "boundary-experimental";
    case EvalStatus::TailDominated: return "tail-dominated";
  }
  return "?";
}

void attach_reference(EvalReport& report, double reference) {
  report.reference = reference;
  const double diff = std::abs(report.value - reference);
  report.residual_relative = std::abs(reference) > 10.0;
  report.residual = report.residual_relative ? diff / std::abs(reference) : diff;
}

double log_factor(FactorKind kind, double v, std::uint64_t k, double theta) {
  const double u = std::pow(v, static_cast<double>(k));
  double arg_minus = 0.0;
  double arg_plus = 0.0;
  switch (kind) {
    case FactorKind::Minus: arg_minus = -u; break;
    case FactorKind::Plus: arg_plus = u; break;
    case FactorKind::RatioOdd:
      arg_minus = -u;
      arg_plus = u;
      break;
    case FactorKind::CosMinus:
    case FactorKind::CosPlus:
    case FactorKind::CosRatio: {
      const double c = std::cos(static_cast<double>(k) * theta);
      arg_minus = u * (u - 2.0 * c);
      arg_plus = u * (u + 2.0 * c);
      break;
    }
  }
  const bool uses_minus = kind != FactorKind::Plus && kind != FactorKind::CosPlus;
  const bool uses_plus = kind != FactorKind::Minus && kind != FactorKind::CosMinus;
  if ((uses_minus && arg_minus <= -1.0) || (uses_plus && arg_plus <= -1.0)) {
    throw Error(ErrorCode::Domain, "factor " + std::to_string(k) + " is non-positive at the evaluation point");
  }
  switch (kind) {
    case FactorKind::Minus:
    case FactorKind::CosMinus: return std::log1p(arg_minus);
    case FactorKind::Plus:
    case FactorKind::CosPlus: return std::log1p(arg_plus);
    case FactorKind::RatioOdd:
    case FactorKind::CosRatio: return std::log1p(arg_minus) - std::log1p(arg_plus);
  }
  return 0.0;
}

EvalReport eval_product(const ProductForm& form, const EvalPoint& point, std::uint64_t K,
                        const EvalOptions& options) {
  if (K == 0) throw Error(ErrorCode::InvalidArgument, "eval_product: K must be >= 1");
  const double ax = std::abs(point.x);
  if (!std::isfinite(point.x) || ax > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "eval_product: |x| must not exceed 1");
  }
  if (ax == 1.0 && !options.boundary) {
    throw Error(ErrorCode::InvalidArgument, "eval_product: |x| = 1 needs boundary mode");
  }
  if (form.fixed_x && *form.fixed_x != point.x) {
    throw Error(ErrorCode::InvalidArgument, "eval_product: form was built for a fixed x; evaluate it there");
  }
  const auto theta = resolve_theta(form, point);
  if (is_cos_kind(form.kind) && !theta) {
    throw Error(ErrorCode::InvalidArgument, "eval_product: cos factor kinds need theta");
  }

  const double v = form.variable_power == 2 ? point.x * point.x : point.x;
  CompensatedSum log_sum;
  for (const auto& entry : form.entries) {
    if (entry.k > K) break;
    if (entry.exponent == 0.0) continue;
    log_sum += entry.exponent * log_factor(form.kind, v, entry.k, theta.value_or(0.0));
  }
  const std::uint64_t used = std::min(K, form.max_index());

  EvalReport report;
  report.log_value = log_sum.value();
  report.value = std::exp(report.log_value);
  report.K_used = used;
  report.tail_bound = tail_bound(form, point, used);
  if (ax == 1.0) {
    report.status = EvalStatus::BoundaryExperimental;
  } else {
    report.status = report.tail_bound <= options.tail_tolerance ? EvalStatus::Converged : EvalStatus::TailDominated;
  }
  return report;
}

double tail_bound(const ProductForm& form, const EvalPoint& point, std::uint64_t K) {
  const double ax = std::abs(point.x);
  if (ax >= 1.0) return kInf;
  const double v = form.variable_power == 2 ? ax * ax : ax;
  if (v == 0.0) return 0.0;
  const double lead = std::pow(v, static_cast<double>(K) + 1.0);
  if (lead > 0.5) return kInf;
  return tail_multiplier(form.kind) * exponent_bound_of(form) * lead / (1.0 - v);
}

std::uint64_t K_for_tail(FactorKind kind, double x, unsigned variable_power, double exponent_bound, double target) {
  const double ax = std::abs(x);
  if (ax >= 1.0) throw Error(ErrorCode::InvalidArgument, "K_for_tail: |x| must be < 1");
  const double v = variable_power == 2 ? ax * ax : ax;
  if (v == 0.0 || exponent_bound == 0.0) return 1;
  std::uint64_t K = 1;
  while (true) {
    const double lead = std::pow(v, static_cast<double>(K) + 1.0);
    if (lead <= 0.5 && tail_multiplier(kind) * exponent_bound * lead / (1.0 - v) <= target) return K;
    ++K;
  }
}

std::uint64_t abel_K(double x) {
  if (!(x >= 0.0 && x < 1.0)) throw Error(ErrorCode::InvalidArgument, "abel_K: x must lie in [0, 1)");
  if (x == 0.0) return 1;
  return static_cast<std::uint64_t>(std::ceil(-18.0 * std::log(10.0) / std::log(x)));
}

const char* to_string(PartialSumKind kind) noexcept {
  switch (kind) {
    case PartialSumKind::AS: return "A_S";
    case PartialSumKind::BS: return "B_S";
    case PartialSumKind::BLogRaw: return "B_LOG_RAW";
  }
  return "?";
}

double partial_sum_coefficient(PartialSumKind kind, double s, std::uint64_t n, const SpfTable& sieve) {
  if (kind == PartialSumKind::AS) {
    const int mu = n == 1 ? 1 : mobius(n, sieve);
    return mu == 0 ? 0.0 : mu * std::pow(static_cast<double>(n), -s);
  }
  const auto [k, m] = split_two(n);
  const int mu = m == 1 ? 1 : mobius(m, sieve);
  if (mu == 0) return 0.0;
  if (kind == PartialSumKind::BLogRaw) {
    return mu / static_cast<double>(m) * (k >= 1 ? 0.5 : 1.0);
  }
  // b_n(s) = mu(m) 2^{k-1} / n^s for k >= 1, mu(m) / m^s for odd n.
  const double w = k >= 1 ? std::ldexp(1.0, static_cast<int>(k) - 1) : 1.0;
  return mu * w * std::pow(static_cast<double>(n), -s);
}

namespace {

double zeta_tail_sum(double M, double s) {
  // sum_{m > M} m^{-s}
  const double floor_m = std::floor(M);
  if (floor_m >= 1.0) return std::pow(floor_m, 1.0 - s) / (s - 1.0);
  return 1.0 + 1.0 / (s - 1.0);
}

}  // namespace

PartialSumReport partial_sum(PartialSumKind kind, double s, std::uint64_t N, const SpfTable& sieve,
                             const std::vector<std::uint64_t>& checkpoints) {
  if (N == 0) throw Error(ErrorCode::InvalidArgument, "partial_sum: N must be >= 1");
  if (kind != PartialSumKind::BLogRaw && !(s > 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "partial_sum: s must exceed 1");
  }
  if (N > sieve.limit()) {
    throw Error(ErrorCode::OutOfRange, "partial_sum: N exceeds sieve limit " + std::to_string(sieve.limit()));
  }
  std::vector<std::uint64_t> marks = checkpoints;
  std::sort(marks.begin(), marks.end());
  auto mark = marks.begin();

  PartialSumReport report{kind, kind == PartialSumKind::BLogRaw ? 1.0 : s, N};
  CompensatedSum sum;
  for (std::uint64_t n = 1; n <= N; ++n) {
    sum += partial_sum_coefficient(kind, s, n, sieve);
    while (mark != marks.end() && *mark == n) {
      report.checkpoints.emplace_back(n, sum.value());
      ++mark;
    }
  }
  report.sum = sum.value();
  const double dN = static_cast<double>(N);
  switch (kind) {
    case PartialSumKind::AS: report.tail_bound = std::pow(dN, 1.0 - s) / (s - 1.0); break;
    case PartialSumKind::BS: {
      // n = 2^k m: |b_n| <= w_k m^{-s}, w_0 = 1, w_k = 2^{k-1-ks}.
      double bound = zeta_tail_sum(dN, s);
      for (int k = 1; k < 64; ++k) {
        const double w = std::ldexp(1.0, k - 1) * std::pow(2.0, -k * s);
        bound += w * zeta_tail_sum(std::ldexp(dN, -k), s);
      }
      report.tail_bound = bound;
      break;
    }
    case PartialSumKind::BLogRaw: report.tail_bound = kInf; break;
  }
  return report;
}

Rational partial_sum_exact(PartialSumKind kind, std::int64_t s, std::uint64_t N, const SpfTable& sieve) {
  Rational sum(0);
  for (std::uint64_t n = 1; n <= N; ++n) {
    switch (kind) {
      case PartialSumKind::AS: sum += a_s_closed(n, s, sieve); break;
      case PartialSumKind::BS: sum += b_s_closed(n, s, sieve); break;
      case PartialSumKind::BLogRaw: sum += b_closed(n, sieve); break;
    }
  }
  return sum;
}

}  // namespace prodforge
