#include "prodforge/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "prodforge/coefficients.hpp"
#include "prodforge/error.hpp"

namespace prodforge {

namespace {

constexpr double kPi = std::numbers::pi;

struct Component {
  ProductForm form;
  EvalPoint point;
};

struct Plan {
  std::vector<Component> components;
  double reference = 1.0;
};

std::vector<IdentityEntry> make_registry() {
  using V = Validity;
  using S = ErratumStatus;
  std::vector<IdentityEntry> r = {
      {"B_SUM_LOG2", "sum b_k = 1/log 2 (x -> 1 in x = sum b_k log(1 + x^k))",
       "Abel limit of the b-sequence; the ordinary sum diverges since b_{2^j} = 1/2", {}, V::BoundaryExperimental,
       S::ErratumCorrected},
      {"BOUNDARY_SIN", "e^{2 cos t} = prod (4 sin(k t / 2))^{2 a_k}",
       "x -> 1 limit of the cos-minus product", {"theta"}, V::BoundaryExperimental, S::AsPrinted},
      {"BOUNDARY_SIN_REFLECT", "e^{-2 cos t} = prod (4 sin(k (pi - t) / 2))^{2 a_k}",
       "x -> 1 limit of the cos-minus product at pi - theta", {"theta"}, V::BoundaryExperimental, S::AsPrinted},
      {"BOUNDARY_TAN", "e^{4 cos t} = prod tan^{2 a_k}(k t / 2), k odd",
       "x -> 1 limit of the cos-ratio product", {"theta"}, V::BoundaryExperimental, S::AsPrinted},
      {"E_CONST", "e = prod ((2^k - 1) / (2^k + 1))^{a_k}, k odd",
       "odd-ratio product at x = 1/2", {}, V::Interior, S::AsPrinted},
      {"EXP_COS_MINUS", "e^{2x cos t} = prod (1 - 2x^k cos kt + x^{2k})^{a_k}",
       "cos-minus product of the a-sequence", {"x", "theta"}, V::Interior, S::AsPrinted},
      {"EXP_COS_PLUS", "e^{2x cos t} = prod (1 + 2x^k cos kt + x^{2k})^{b_k}",
       "cos-plus product of the b-sequence", {"x", "theta"}, V::Interior, S::AsPrinted},
      {"EXP_COS_RATIO", "e^{4x cos t} = prod ((1 - 2x^k cos kt + x^{2k}) / (1 + 2x^k cos kt + x^{2k}))^{a_k}, k odd",
       "cos-ratio product; printed orientation (plus over minus) evaluates to e^{-4x cos t}", {"x", "theta"},
       V::Interior, S::ErratumCorrected},
      {"EXP_MINUS", "e^x = prod (1 - x^k)^{a_k}", "defining product of the a-sequence", {"x"}, V::Interior,
       S::AsPrinted},
      {"EXP_MINUS_NEG", "e^{-x} = prod (1 - (-x)^k)^{a_k}", "a-product at -x", {"x"}, V::Interior, S::AsPrinted},
      {"EXP_ODD_RATIO", "e^{2x} = prod ((1 - x^k) / (1 + x^k))^{a_k}, k odd",
       "difference of the a-products at x and -x", {"x"}, V::Interior, S::AsPrinted},
      {"EXP_PLUS", "e^x = prod (1 + x^k)^{b_k}", "defining product of the b-sequence", {"x"}, V::Interior,
       S::AsPrinted},
      {"MIXED_PARITY",
       "prod_{k odd} ((1 - 2x^k cos kt + x^{2k})(1 + 2x^k cos kt + x^{2k}))^{a_k} * "
       "prod_{k even} (1 - 2x^k cos kt + x^{2k})^{2 a_k} = 1",
       "sum of the cos-minus identities at x and -x; printed even factors carry the wrong sign", {"x", "theta"},
       V::Interior, S::ErratumCorrected},
      {"SEC", "1/cos x = prod (1 - x^{2k})^{p_k}",
       "log sec series with c_k = 2^{2k-1} (2^{2k} - 1) |B_{2k}| / (k (2k)!)", {"x"}, V::Interior,
       S::ErratumCorrected},
      {"SQRT_E", "sqrt(e) = prod (1 - 2^{-k})^{a_k}", "a-product at x = 1/2", {}, V::Interior, S::AsPrinted},
      {"STIRLING_RATIO", "((n-1)! / (sqrt(2 pi) n^{n-1/2} e^{-n}))^2 = prod ((n^k - 1) / (n^k + 1))^{q_k}, k odd",
       "Stirling correction series as an odd-ratio product; normalization uses sqrt(2 pi), not sqrt(2 pi n)",
       {"n", "J"}, V::Interior, S::ErratumCorrected},
      {"X_OVER_SINX", "x / sin x = prod (1 - x^{2k})^{p_k}",
       "log(x / sin x) series with c_k = 2^{2k-1} |B_{2k}| / (k (2k)!)", {"x"}, V::Interior, S::ErratumCorrected},
      {"ZETA_A", "sum mu(n) / n^s = 1 / zeta(s)", "x = 1 in x = sum a_k Phi(x^k); a_1 = +1", {"s", "N"},
       V::Interior, S::ErratumCorrected},
      {"ZETA_B", "sum b_n(s) = 1 / ((1 - 2^{1-s}) zeta(s))",
       "x = 1 in the alternating system; b_n(s) carries the s-dependence", {"s", "N"}, V::Interior,
       S::ErratumCorrected},
  };
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return r;
}

double require_param(const std::optional<double>& v, const char* name, const std::string& id) {
  if (!v) throw Error(ErrorCode::InvalidArgument, id + " requires parameter " + name);
  if (!std::isfinite(*v)) throw Error(ErrorCode::InvalidArgument, id + ": parameter " + name + " must be finite");
  return *v;
}

double interior_x(const IdentityParams& p, const std::string& id) {
  const double x = require_param(p.x, "x", id);
  if (!(std::abs(x) < 1.0)) throw Error(ErrorCode::InvalidArgument, id + ": x must satisfy |x| < 1");
  return x;
}

// prod factor(k)^{multiplier * coeff_k} over k <= K (odd k only when requested).
ProductForm coefficient_form(FactorKind kind, CoeffKind coeffs, std::uint64_t K, bool odd_only, bool even_only,
                             long multiplier, const SpfTable& sieve, std::string source) {
  const CoeffTable table = closed_table(coeffs, K, std::nullopt, sieve);
  ProductForm form;
  form.kind = kind;
  form.exponent_bound = static_cast<double>(std::abs(multiplier));
  form.source = std::move(source);
  for (std::uint64_t k = 1; k <= K; ++k) {
    if (odd_only && k % 2 == 0) continue;
    if (even_only && k % 2 == 1) continue;
    const Rational e = table[k] * Rational(multiplier);
    form.entries.push_back({k, e.to_double(), e});
  }
  return form;
}

std::uint64_t auto_K(FactorKind kind, double x, unsigned power, double bound) {
  return K_for_tail(kind, x, power, bound, 1e-12);
}

Plan build_plan(const std::string& id, const IdentityParams& p, std::uint64_t& K, const SpfTable& sieve) {
  Plan plan;
  auto add = [&plan](ProductForm form, EvalPoint point) {
    plan.components.push_back({std::move(form), point});
  };

  if (id == "EXP_MINUS" || id == "EXP_MINUS_NEG" || id == "SQRT_E") {
    const double x = id == "SQRT_E" ? 0.5 : interior_x(p, id);
    const double at = id == "EXP_MINUS_NEG" ? -x : x;
    if (K == 0) K = auto_K(FactorKind::Minus, at, 1, 1.0);
    add(coefficient_form(FactorKind::Minus, CoeffKind::ALog, K, false, false, 1, sieve, id), {at});
    plan.reference = std::exp(at);
  } else if (id == "EXP_ODD_RATIO" || id == "E_CONST") {
    const double x = id == "E_CONST" ? 0.5 : interior_x(p, id);
    if (K == 0) K = auto_K(FactorKind::RatioOdd, x, 1, 1.0);
    auto form = coefficient_form(FactorKind::RatioOdd, CoeffKind::ALog, K, true, false, 1, sieve, id);
    form.scale = Rational(2);
    add(std::move(form), {x});
    plan.reference = std::exp(2.0 * x);
  } else if (id == "EXP_PLUS") {
    const double x = interior_x(p, id);
    if (K == 0) K = auto_K(FactorKind::Plus, x, 1, 1.0);
    add(coefficient_form(FactorKind::Plus, CoeffKind::BLog, K, false, false, 1, sieve, id), {x});
    plan.reference = std::exp(x);
  } else if (id == "EXP_COS_MINUS" || id == "EXP_COS_PLUS") {
    const double x = interior_x(p, id);
    const double theta = require_param(p.theta, "theta", id);
    const bool plus = id == "EXP_COS_PLUS";
    const FactorKind kind = plus ? FactorKind::CosPlus : FactorKind::CosMinus;
    if (K == 0) K = auto_K(kind, x, 1, 1.0);
    auto form = coefficient_form(kind, plus ? CoeffKind::BLog : CoeffKind::ALog, K, false, false, 1, sieve, id);
    form.scale = Rational(2);
    add(std::move(form), {x, theta});
    plan.reference = std::exp(2.0 * x * std::cos(theta));
  } else if (id == "EXP_COS_RATIO") {
    const double x = interior_x(p, id);
    const double theta = require_param(p.theta, "theta", id);
    if (K == 0) K = auto_K(FactorKind::CosRatio, x, 1, 1.0);
    const long orientation = p.as_printed ? -1 : 1;
    auto form = coefficient_form(FactorKind::CosRatio, CoeffKind::ALog, K, true, false, orientation, sieve, id);
    form.scale = Rational(4);
    add(std::move(form), {x, theta});
    plan.reference = std::exp(4.0 * x * std::cos(theta));
  } else if (id == "MIXED_PARITY") {
    const double x = interior_x(p, id);
    const double theta = require_param(p.theta, "theta", id);
    if (K == 0) K = auto_K(FactorKind::CosMinus, x, 1, 2.0);
    add(coefficient_form(FactorKind::CosMinus, CoeffKind::ALog, K, true, false, 1, sieve, id), {x, theta});
    add(coefficient_form(FactorKind::CosPlus, CoeffKind::ALog, K, true, false, 1, sieve, id), {x, theta});
    const FactorKind even_kind = p.as_printed ? FactorKind::CosPlus : FactorKind::CosMinus;
    add(coefficient_form(even_kind, CoeffKind::ALog, K, false, true, 2, sieve, id), {x, theta});
    plan.reference = 1.0;
  } else if (id == "X_OVER_SINX" || id == "SEC") {
    const double x = interior_x(p, id);
    if (K == 0) K = auto_K(FactorKind::Minus, x, 2, 1.0);
    const bool sec = id == "SEC";
    auto form = to_product(sec ? sec_log_series(K) : x_over_sin_log_series(K), FactorKind::Minus, K, sieve);
    add(std::move(form), {x});
    plan.reference = sec ? 1.0 / std::cos(x) : (x == 0.0 ? 1.0 : x / std::sin(x));
  } else {
    throw Error(ErrorCode::UnknownIdentity, "no product plan for identity '" + id + "'");
  }
  return plan;
}

EvalReport run_plan(const Plan& plan, std::uint64_t K, double tol) {
  CompensatedSum log_sum;
  double tail = 0.0;
  bool dominated = false;
  for (const auto& c : plan.components) {
    const EvalReport part = eval_product(c.form, c.point, K, {false, tol});
    log_sum += part.log_value;
    tail += part.tail_bound;
    dominated = dominated || part.status != EvalStatus::Converged;
  }
  EvalReport report;
  report.log_value = log_sum.value();
  report.value = std::exp(report.log_value);
  report.K_used = K;
  report.tail_bound = tail;
  report.status = (dominated || tail > tol) ? EvalStatus::TailDominated : EvalStatus::Converged;
  attach_reference(report, plan.reference);
  return report;
}

EvalReport zeta_check(const std::string& id, const IdentityParams& p, std::uint64_t& K, double tol,
                      const SpfTable& sieve) {
  const double s = require_param(p.s, "s", id);
  if (!(s > 1.0)) throw Error(ErrorCode::InvalidArgument, id + ": s must exceed 1");
  const std::uint64_t N = p.N.value_or(K == 0 ? 100000 : K);
  K = N;
  const auto kind = id == "ZETA_A" ? PartialSumKind::AS : PartialSumKind::BS;
  const PartialSumReport sum = partial_sum(kind, s, N, sieve);
  EvalReport report;
  report.value = sum.sum;
  report.log_value = std::log(sum.sum);
  report.K_used = N;
  report.tail_bound = sum.tail_bound;
  report.status = sum.tail_bound <= tol ? EvalStatus::Converged : EvalStatus::TailDominated;
  attach_reference(report, partial_sum_target(kind, s));
  return report;
}


}  // namespace

const char* to_string(Validity validity) noexcept {
  return validity == Validity::Interior ? "interior" : "boundary-experimental";
}

const char* to_string(ErratumStatus status) noexcept {
  return status == ErratumStatus::AsPrinted ? "as-printed" : "erratum-corrected";
}

const std::vector<IdentityEntry>& list_identities() {
  static const std::vector<IdentityEntry> registry = make_registry();
  return registry;
}

const IdentityEntry& find_identity(const std::string& id) {
  for (const auto& e : list_identities()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorCode::UnknownIdentity, "unknown identity '" + id + "'");
}

CheckResult check_identity(const std::string& id, const IdentityParams& params, std::uint64_t K, double tol,
                           const SpfTable& sieve) {
  const IdentityEntry& entry = find_identity(id);
  if (entry.validity == Validity::BoundaryExperimental) {
    throw Error(ErrorCode::PolicyRefusal,
                id + " is boundary-experimental; it is traced with abel_evaluate, never asserted");
  }
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  CheckResult result{id, params, K, tol};
  if (id == "STIRLING_RATIO") {
    const std::uint64_t n = params.n.value_or(0);
    if (!params.n) throw Error(ErrorCode::InvalidArgument, id + " requires parameter n");
    const std::uint64_t J = params.J.value_or(5);
    if (result.K == 0) result.K = 25;
    result.report = stirling_ratio(n, J, result.K, sieve, {8, tol});
  } else if (id == "ZETA_A" || id == "ZETA_B") {
    result.report = zeta_check(id, params, result.K, tol, sieve);
  } else {
    const Plan plan = build_plan(id, params, result.K, sieve);
    result.report = run_plan(plan, result.K, tol);
  }
  if (id == "ZETA_A" || id == "ZETA_B") {
    // Partial sums are judged on the measured difference; the tail bound is reported, not enforced.
    result.pass = result.report.residual && *result.report.residual <= tol;
  } else {
    result.pass = result.report.passes(tol);
  }
  return result;
}

SeriesSpec x_over_sin_log_series(std::uint64_t L) {
  if (L == 0) throw Error(ErrorCode::InvalidArgument, "series length must be >= 1");
  const BernoulliTable B(L);
  std::vector<SeriesTerm> terms;
  for (std::uint64_t k = 1; k <= L; ++k) {
    const mpz_class num = ipow(mpz_class(2), 2 * k - 1);
    const mpz_class den = mpz_class(static_cast<unsigned long>(k)) * factorial(2 * k);
    terms.push_back({k, B[2 * k].abs() * Rational(num, den)});
  }
  return SeriesSpec("log(x/sin x)", Parity::EvenSquared, std::move(terms), "Taylor series in y = x^2");
}

SeriesSpec sec_log_series(std::uint64_t L) {
  if (L == 0) throw Error(ErrorCode::InvalidArgument, "series length must be >= 1");
  const BernoulliTable B(L);
  std::vector<SeriesTerm> terms;
  for (std::uint64_t k = 1; k <= L; ++k) {
    const mpz_class four_k = ipow(mpz_class(2), 2 * k);
    const mpz_class num = ipow(mpz_class(2), 2 * k - 1) * (four_k - 1);
    const mpz_class den = mpz_class(static_cast<unsigned long>(k)) * factorial(2 * k);
    terms.push_back({k, B[2 * k].abs() * Rational(num, den)});
  }
  return SeriesSpec("log(1/cos x)", Parity::EvenSquared, std::move(terms), "Taylor series in y = x^2");
}

SeriesSpec stirling_series(std::uint64_t J) {
  if (J == 0) throw Error(ErrorCode::InvalidArgument, "stirling series needs J >= 1");
  const BernoulliTable B(J);
  std::vector<SeriesTerm> terms;
  for (std::uint64_t j = 1; j <= J; ++j) {
    const auto den = static_cast<long>(2 * j * (2 * j - 1));
    terms.push_back({2 * j - 1, B[2 * j] / Rational(den)});
  }
  return SeriesSpec("stirling", Parity::OddOnly, std::move(terms), "log Gamma correction in x = 1/n");
}

double stirling_reference(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "stirling_reference: n must be >= 2");
  const mpz_class f = factorial(n - 1);
  // log of the exact integer from its top 64 bits.
  const std::size_t bits = mpz_sizeinbase(f.get_mpz_t(), 2);
  const std::size_t shift = bits > 64 ? bits - 64 : 0;
  mpz_class top = f >> static_cast<mp_bitcnt_t>(shift);
  const long double log_fact = std::log(static_cast<long double>(top.get_ui())) +
                               static_cast<long double>(shift) * std::numbers::ln2_v<long double>;
  const long double ln = static_cast<long double>(n);
  const long double log_ratio = log_fact - (ln - 0.5L) * std::log(ln) + ln -
                                0.5L * std::log(2.0L * std::numbers::pi_v<long double>);
  return static_cast<double>(std::exp(2.0L * log_ratio));
}

EvalReport stirling_ratio(std::uint64_t n, std::uint64_t J, std::uint64_t K, const SpfTable& sieve,
                          const StirlingOptions& options) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "stirling_ratio: n must be >= 2");
  if (J == 0) throw Error(ErrorCode::InvalidArgument, "stirling_ratio: J must be >= 1");
  if (J > options.max_terms) {
    throw Error(ErrorCode::InvalidArgument, "stirling_ratio: asymptotic series limited to J <= " +
                                                std::to_string(options.max_terms));
  }
  if (K < 2 * J - 1) {
    throw Error(ErrorCode::InvalidArgument, "stirling_ratio: K must reach the top series degree 2J - 1");
  }
  const ProductForm form = to_product(stirling_series(J), FactorKind::RatioOdd, K, sieve);
  const double x = 1.0 / static_cast<double>(n);
  EvalReport report = eval_product(form, {x}, K, {false, options.tol});
  attach_reference(report, stirling_reference(n));

  // First omitted asymptotic term, doubled because the product represents 2 q(x).
  const SeriesSpec next = stirling_series(J + 1);
  const double omitted = 2.0 * std::abs(next.terms().back().value.to_double()) *
                         std::pow(x, static_cast<double>(2 * J + 1));
  if (omitted + report.tail_bound > options.tol) report.status = EvalStatus::TailDominated;
  return report;
}

double zeta_reference(double s) {
  if (!(s > 1.0)) throw Error(ErrorCode::InvalidArgument, "zeta_reference: s must exceed 1");
  if (s == 2.0) return kPi * kPi / 6.0;
  if (s == 4.0) return std::pow(kPi, 4) / 90.0;
  if (s == 6.0) return std::pow(kPi, 6) / 945.0;
  // Direct sum to M - 1 plus the Euler-Maclaurin tail at M.
  constexpr int M = 32;
  constexpr int terms = 6;
  static const BernoulliTable B(terms);
  const long double ls = s;
  long double sum = 0.0L;
  for (int n = M - 1; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -ls);
  const long double m = M;
  sum += std::pow(m, 1.0L - ls) / (ls - 1.0L) + 0.5L * std::pow(m, -ls);
  long double rising = ls;  // s (s+1) ... (s + 2j - 2)
  long double fact = 2.0L;  // (2j)!
  for (int j = 1; j <= terms; ++j) {
    sum += static_cast<long double>(B[2 * j].to_double()) / fact * rising * std::pow(m, -ls - 2 * j + 1);
    rising *= (ls + 2 * j - 1) * (ls + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return static_cast<double>(sum);
}

PhiResult phi_reference(double x, double s, PhiVariant variant, std::uint64_t M) {
  const double ax = std::abs(x);
  if (!(ax <= 1.0)) throw Error(ErrorCode::InvalidArgument, "phi_reference: |x| must not exceed 1");
  if (ax == 1.0 && !(s > 1.0)) throw Error(ErrorCode::InvalidArgument, "phi_reference: |x| = 1 needs s > 1");
  if (M == 0) throw Error(ErrorCode::InvalidArgument, "phi_reference: M must be >= 1");
  CompensatedSum sum;
  double xp = 1.0;
  for (std::uint64_t j = 1; j <= M; ++j) {
    xp *= x;
    const double sign = (variant == PhiVariant::PhiTilde && j % 2 == 0) ? -1.0 : 1.0;
    sum += sign * xp * std::pow(static_cast<double>(j), -s);
  }
  const double dM = static_cast<double>(M);
  double tail = 0.0;
  if (ax < 1.0) {
    tail = std::pow(ax, dM + 1.0) * std::pow(dM + 1.0, -s) / (1.0 - ax);
  } else {
    tail = std::pow(dM, 1.0 - s) / (s - 1.0);
  }
  return {sum.value(), tail};
}

double partial_sum_target(PartialSumKind kind, double s) {
  switch (kind) {
    case PartialSumKind::AS: return 1.0 / zeta_reference(s);
    case PartialSumKind::BS: return 1.0 / ((1.0 - std::pow(2.0, 1.0 - s)) * zeta_reference(s));
    case PartialSumKind::BLogRaw: return 1.0 / std::log(2.0);
  }
  return 0.0;
}

std::vector<AbelRow> abel_evaluate(const std::string& id, const std::vector<double>& xs,
                                   std::optional<double> theta_in, const SpfTable& sieve) {
  const IdentityEntry& entry = find_identity(id);
  if (entry.validity != Validity::BoundaryExperimental) {
    throw Error(ErrorCode::InvalidArgument, "abel traces are defined for boundary identities only");
  }
  const double theta = theta_in.value_or(1.0);
  if (!std::isfinite(theta)) throw Error(ErrorCode::InvalidArgument, "theta must be finite");
  std::vector<AbelRow> rows;
  for (const double x : xs) {
    if (!(x >= 0.0 && x < 1.0)) throw Error(ErrorCode::InvalidArgument, "abel probe points must lie in [0, 1)");
    const std::uint64_t K = abel_K(x);
    AbelRow row{x, K};
    if (id == "B_SUM_LOG2") {
      const auto form = coefficient_form(FactorKind::Plus, CoeffKind::BLog, K, false, false, 1, sieve, id);
      row.lhs = eval_product(form, {x}, K).log_value;
      row.target = x;
      row.boundary_value = row.lhs / std::log(2.0);
      row.boundary_target = 1.0 / std::log(2.0);
    } else {
      const bool tan = id == "BOUNDARY_TAN";
      const double angle = id == "BOUNDARY_SIN_REFLECT" ? kPi - theta : theta;
      if (!tan) {
        // At x = 1 the factor for k vanishes when k * angle is a multiple of 2 pi.
        for (std::uint64_t k = 1; k <= K; ++k) {
          if (std::abs(std::sin(static_cast<double>(k) * angle / 2.0)) < 1e-9) {
            throw Error(ErrorCode::PolicyRefusal, id + ": k * theta is a multiple of 2 pi at k = " +
                                                      std::to_string(k) + "; boundary factor vanishes");
          }
        }
      }
      const FactorKind kind = tan ? FactorKind::CosRatio : FactorKind::CosMinus;
      const auto form = coefficient_form(kind, CoeffKind::ALog, K, tan, false, 1, sieve, id);
      row.lhs = eval_product(form, {x, angle}, K).log_value;
      const double weight = tan ? 4.0 : 2.0;
      row.target = weight * x * std::cos(angle);
      row.boundary_value = row.lhs;
      row.boundary_target = weight * std::cos(angle);
    }
    row.residual = std::abs(row.lhs - row.target);
    rows.push_back(row);
  }
  return rows;
}

const std::vector<ProfileCase>& profile(const std::string& name) {
  static const std::map<std::string, std::vector<ProfileCase>> profiles = [] {
    auto px = [](double x) { IdentityParams p; p.x = x; return p; };
    auto pxt = [](double x, double t) { IdentityParams p; p.x = x; p.theta = t; return p; };
    auto pnj = [](std::uint64_t n, std::uint64_t J) { IdentityParams p; p.n = n; p.J = J; return p; };
    auto psn = [](double s, std::uint64_t N) { IdentityParams p; p.s = s; p.N = N; return p; };
    auto pt = [](double t) { IdentityParams p; p.theta = t; return p; };
    std::vector<ProfileCase> desk = {
        {"B_SUM_LOG2", {}, 0, 0.0},
        {"BOUNDARY_SIN", pt(1.0), 0, 0.0},
        {"BOUNDARY_SIN_REFLECT", pt(1.0), 0, 0.0},
        {"BOUNDARY_TAN", pt(1.0), 0, 0.0},
        {"E_CONST", {}, 79, 1e-11},
        {"E_CONST", {}, 99, 1e-11},
        {"EXP_COS_MINUS", pxt(0.5, kPi / 3.0), 100, 1e-9},
        {"EXP_COS_MINUS", pxt(0.4, 1.1), 100, 1e-9},
        {"EXP_COS_PLUS", pxt(0.5, kPi / 3.0), 100, 1e-9},
        {"EXP_COS_PLUS", pxt(0.4, 1.1), 100, 1e-9},
        {"EXP_COS_RATIO", pxt(1.0 / 3.0, kPi / 4.0), 100, 1e-9},
        {"EXP_COS_RATIO", pxt(0.5, 2.0), 100, 1e-9},
        {"EXP_MINUS", px(0.3), 0, 1e-9},
        {"EXP_MINUS", px(-0.7), 0, 1e-9},
        {"EXP_MINUS_NEG", px(0.3), 0, 1e-9},
        {"EXP_MINUS_NEG", px(0.7), 0, 1e-9},
        {"EXP_ODD_RATIO", px(0.5), 79, 1e-11},
        {"EXP_ODD_RATIO", px(-0.3), 0, 1e-9},
        {"EXP_PLUS", px(0.3), 0, 1e-9},
        {"EXP_PLUS", px(-0.7), 0, 1e-9},
        {"MIXED_PARITY", pxt(0.3, 1.0), 60, 1e-10},
        {"MIXED_PARITY", pxt(0.5, 2.5), 80, 1e-9},
        {"SEC", px(0.5), 30, 1e-10},
        {"SEC", px(0.8), 60, 1e-9},
        {"SQRT_E", {}, 64, 1e-11},
        {"SQRT_E", {}, 80, 1e-11},
        {"STIRLING_RATIO", pnj(10, 5), 25, 1e-10},
        {"STIRLING_RATIO", pnj(20, 5), 25, 1e-10},
        {"X_OVER_SINX", px(0.5), 30, 1e-10},
        {"X_OVER_SINX", px(0.8), 60, 1e-9},
        {"ZETA_A", psn(2.0, 100000), 100000, 2e-5},
        {"ZETA_A", psn(3.0, 100000), 100000, 1e-9},
        {"ZETA_B", psn(2.0, 100000), 100000, 1e-4},
        {"ZETA_B", psn(3.0, 100000), 100000, 1e-9},
    };
    return std::map<std::string, std::vector<ProfileCase>>{{"desk", std::move(desk)}};
  }();
  const auto it = profiles.find(name);
  if (it == profiles.end()) throw Error(ErrorCode::InvalidArgument, "unknown profile '" + name + "'");
  return it->second;
}

}  // namespace prodforge
