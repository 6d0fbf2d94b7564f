#include "prodforge/series.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "prodforge/error.hpp"

namespace prodforge {

namespace {

CoeffTable table_for(FactorKind target, std::uint64_t K, const SpfTable& sieve) {
  const bool plus = (target == FactorKind::Plus || target == FactorKind::CosPlus);
  return closed_table(plus ? CoeffKind::BLog : CoeffKind::ALog, K, std::nullopt, sieve);
}

void require_K(std::uint64_t K) {
  if (K == 0) throw Error(ErrorCode::InvalidArgument, "truncation order K must be >= 1");
}

void require_odd_series(const SeriesSpec& series, FactorKind target) {
  if (is_odd_only_kind(target) && series.parity() != Parity::OddOnly) {
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(target)) + " requires an odd-only series, '" +
                                                series.name() + "' has parity " + to_string(series.parity()));
  }
}

// Floating exponents e_k = sum_{l | k} weight_l * table[k / l] for weighted transforms.
std::vector<double> weighted_mix(const SeriesSpec& series, const std::vector<double>& weights,
                                 const CoeffTable& table, std::uint64_t K) {
  std::vector<double> e(K + 1, 0.0);
  for (std::size_t i = 0; i < series.terms().size(); ++i) {
    const std::uint64_t l = series.terms()[i].degree;
    for (std::uint64_t j = 1; l * j <= K; ++j) {
      const Rational& t = table[j];
      if (!t.is_zero()) e[l * j] += weights[i] * t.to_double();
    }
  }
  return e;
}

ProductForm weighted_form(const SeriesSpec& series, FactorKind target, std::uint64_t K,
                          const std::vector<double>& weights, const SpfTable& sieve) {
  const CoeffTable table = table_for(target, K, sieve);
  const auto e = weighted_mix(series, weights, table, K);
  ProductForm form;
  form.kind = target;
  form.scale = Rational(target == FactorKind::CosRatio ? 4 : 2);
  form.variable_power = series.parity() == Parity::EvenSquared ? 2 : 1;
  form.source = series.name();
  for (std::uint64_t k = 1; k <= K; ++k) {
    if (is_odd_only_kind(target) && k % 2 == 0) continue;
    form.entries.push_back({k, e[k], std::nullopt});
  }
  return form;
}

}  // namespace

const char* to_string(Parity parity) noexcept {
  switch (parity) {
    case Parity::All: return "all";
    case Parity::OddOnly: return "odd";
    case Parity::EvenSquared: return "even-squared";
  }
  return "?";
}

SeriesSpec::SeriesSpec(std::string name, Parity parity, std::vector<SeriesTerm> terms, std::string description)
    : name_(std::move(name)), parity_(parity), terms_(std::move(terms)), description_(std::move(description)) {
  std::uint64_t previous = 0;
  for (const auto& t : terms_) {
    if (t.degree == 0) throw Error(ErrorCode::InvalidArgument, "series '" + name_ + "': degrees must be >= 1");
    if (t.degree <= previous) {
      throw Error(ErrorCode::InvalidArgument, "series '" + name_ + "': degrees must be strictly increasing");
    }
    if (parity_ == Parity::OddOnly && t.degree % 2 == 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "series '" + name_ + "': odd-only series has even degree " + std::to_string(t.degree));
    }
    previous = t.degree;
  }
}

Rational SeriesSpec::coefficient(std::uint64_t degree) const {
  for (const auto& t : terms_) {
    if (t.degree == degree) return t.value;
    if (t.degree > degree) break;
  }
  return Rational(0);
}

SeriesSpec SeriesSpec::plus(const SeriesSpec& other) const {
  std::vector<SeriesTerm> merged;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() || (i < terms_.size() && terms_[i].degree < other.terms_[j].degree)) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || other.terms_[j].degree < terms_[i].degree) {
      merged.push_back(other.terms_[j++]);
    } else {
      merged.push_back({terms_[i].degree, terms_[i].value + other.terms_[j].value});
      ++i;
      ++j;
    }
  }
  const Parity parity = (parity_ == other.parity_) ? parity_ : Parity::All;
  return SeriesSpec(name_ + "+" + other.name_, parity, std::move(merged));
}

const char* to_string(FactorKind kind) noexcept {
  switch (kind) {
    case FactorKind::Minus: return "MINUS";
    case FactorKind::Plus: return "PLUS";
    case FactorKind::RatioOdd: return "RATIO_ODD";
    case FactorKind::CosMinus: return "COS_MINUS";
    case FactorKind::CosPlus: return "COS_PLUS";
    case FactorKind::CosRatio: return "COS_RATIO";
  }
  return "?";
}

FactorKind parse_factor_kind(const std::string& text) {
  std::string t;
  for (char c : text) {
    t.push_back(c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (t == "minus") return FactorKind::Minus;
  if (t == "plus") return FactorKind::Plus;
  if (t == "ratio" || t == "ratio-odd") return FactorKind::RatioOdd;
  if (t == "cos-minus") return FactorKind::CosMinus;
  if (t == "cos-plus") return FactorKind::CosPlus;
  if (t == "cos-ratio") return FactorKind::CosRatio;
  throw Error(ErrorCode::InvalidArgument, "unknown product target '" + text + "'");
}

bool is_cos_kind(FactorKind kind) noexcept {
  return kind == FactorKind::CosMinus || kind == FactorKind::CosPlus || kind == FactorKind::CosRatio;
}

bool is_odd_only_kind(FactorKind kind) noexcept {
  return kind == FactorKind::RatioOdd || kind == FactorKind::CosRatio;
}

std::vector<Rational> dirichlet_mix(const SeriesSpec& series, const CoeffTable& table, std::uint64_t K,
                                    DivisorFilter filter) {
  require_K(K);
  if (table.limit() < K) {
    throw Error(ErrorCode::OutOfRange,
                "dirichlet_mix: K = " + std::to_string(K) + " exceeds table limit " + std::to_string(table.limit()));
  }
  std::vector<Rational> e(K + 1, Rational(0));
  for (const auto& [l, c] : series.terms()) {
    if (filter == DivisorFilter::Odd && l % 2 == 0) continue;
    for (std::uint64_t j = 1; l * j <= K; ++j) {
      const Rational& t = table[j];
      if (!t.is_zero()) e[l * j] += c * t;
    }
  }
  return e;
}

ProductForm to_product(const SeriesSpec& series, FactorKind target, std::uint64_t K, const SpfTable& sieve) {
  require_K(K);
  if (is_cos_kind(target)) {
    throw Error(ErrorCode::InvalidArgument, "to_product: use to_cos_product or trig_to_product for cos targets");
  }
  require_odd_series(series, target);
  const CoeffTable table = table_for(target, K, sieve);
  const auto filter = target == FactorKind::RatioOdd ? DivisorFilter::Odd : DivisorFilter::All;
  const auto e = dirichlet_mix(series, table, K, filter);

  ProductForm form;
  form.kind = target;
  form.scale = Rational(target == FactorKind::RatioOdd ? 2 : 1);
  form.variable_power = series.parity() == Parity::EvenSquared ? 2 : 1;
  form.source = series.name();
  for (std::uint64_t k = 1; k <= K; ++k) {
    if (target == FactorKind::RatioOdd && k % 2 == 0) continue;
    form.entries.push_back({k, e[k].to_double(), e[k]});
  }
  return form;
}

ProductForm to_cos_product(const SeriesSpec& series, double theta, FactorKind target, std::uint64_t K,
                           const SpfTable& sieve, const TransformLimits& limits) {
  require_K(K);
  if (!is_cos_kind(target)) throw Error(ErrorCode::InvalidArgument, "to_cos_product: target must be a cos kind");
  if (!std::isfinite(theta)) throw Error(ErrorCode::InvalidArgument, "to_cos_product: theta must be finite");
  require_odd_series(series, target);
  std::vector<double> weights;
  for (const auto& [l, c] : series.terms()) {
    const double cl = std::cos(static_cast<double>(l) * theta);
    if (std::abs(cl) < limits.eps_cos) {
      std::ostringstream msg;
      msg << "singular weight: |cos(" << l << " theta)| = " << std::abs(cl) << " < " << limits.eps_cos
          << " for degree l = " << l;
      throw Error(ErrorCode::SingularWeight, msg.str());
    }
    weights.push_back(c.to_double() / cl);
  }
  ProductForm form = weighted_form(series, target, K, weights, sieve);
  form.theta = theta;
  return form;
}

ProductForm trig_to_product(const SeriesSpec& series, double x, FactorKind target, std::uint64_t K,
                            const SpfTable& sieve, const TransformLimits& limits) {
  require_K(K);
  if (!is_cos_kind(target)) throw Error(ErrorCode::InvalidArgument, "trig_to_product: target must be a cos kind");
  if (!(x > 0.0 && x < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "trig_to_product: x must lie in (0, 1)");
  }
  require_odd_series(series, target);
  std::vector<double> weights;
  for (const auto& [l, c] : series.terms()) {
    const double w = c.to_double() / std::pow(x, static_cast<double>(l));
    if (!std::isfinite(w) || std::abs(w) > limits.growth_max) {
      std::ostringstream msg;
      msg << "ill-conditioned transform: |c_" << l << "| / x^" << l << " = " << std::abs(w) << " exceeds "
          << limits.growth_max;
      throw Error(ErrorCode::IllConditioned, msg.str());
    }
    weights.push_back(w);
  }
  ProductForm form = weighted_form(series, target, K, weights, sieve);
  form.fixed_x = x;
  return form;
}

std::vector<Rational> formal_log_expansion(const ProductForm& form, std::uint64_t K) {
  if (is_cos_kind(form.kind)) {
    throw Error(ErrorCode::Unsupported, "formal expansion applies to x-only factor kinds");
  }
  std::vector<mpq_class> coef(K + 1);
  for (const auto& entry : form.entries) {
    if (entry.k > K) break;
    if (!entry.exact) throw Error(ErrorCode::Unsupported, "formal expansion needs exact exponents");
    const mpq_class& e = entry.exact->raw();
    if (sgn(e) == 0) continue;
    for (std::uint64_t i = 1; entry.k * i <= K; ++i) {
      mpq_class term(e);
      term /= static_cast<unsigned long>(i);
      switch (form.kind) {
        case FactorKind::Minus:  // log(1 - u) = -sum u^i / i
          coef[entry.k * i] -= term;
          break;
        case FactorKind::Plus:  // log(1 + u) = sum (-1)^{i+1} u^i / i
          if (i % 2 == 1) coef[entry.k * i] += term; else coef[entry.k * i] -= term;
          break;
        case FactorKind::RatioOdd:  // log((1 - u) / (1 + u)) = -2 sum_{i odd} u^i / i
          if (i % 2 == 1) coef[entry.k * i] -= 2 * term;
          break;
        default:
          break;
      }
    }
  }
  std::vector<Rational> out(K + 1, Rational(0));
  for (std::uint64_t d = 1; d <= K; ++d) out[d] = Rational(mpq_class(coef[d])) / form.scale;
  return out;
}

FormalCheck formal_log_check(const ProductForm& form, const SeriesSpec& series, std::uint64_t K) {
  require_K(K);
  const auto expansion = formal_log_expansion(form, K);
  for (std::uint64_t d = 1; d <= K; ++d) {
    if (expansion[d] != series.coefficient(d)) return {false, d};
  }
  return {true, std::nullopt};
}

}  // namespace prodforge
