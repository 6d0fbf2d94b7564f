#include <doctest.h>

#include <cmath>
#include <limits>

#include "prodforge/error.hpp"
#include "prodforge/evaluator.hpp"
#include "prodforge/series.hpp"

using namespace prodforge;

namespace {

const SpfTable& sieve() {
  static const SpfTable table(2'000'000);
  return table;
}

SeriesSpec unit_series(Parity parity = Parity::All) { return SeriesSpec("x", parity, {{1, Rational(1)}}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Parse;
}

}  // namespace

TEST_SUITE("evaluator") {

TEST_CASE("single factor and the origin") {
  const ProductForm half = to_product(unit_series(), FactorKind::Minus, 64, sieve());
  CHECK(eval_product(half, {0.5, std::nullopt}, 1).value == doctest::Approx(2.0).epsilon(1e-15));
  const EvalReport zero = eval_product(half, {0.0, std::nullopt}, 64);
  CHECK(zero.value == 1.0);
  CHECK(zero.log_value == 0.0);
  const EvalReport r = eval_product(half, {0.5, std::nullopt}, 64);
  CHECK(std::abs(r.value - std::exp(0.5)) <= 1e-11);
  CHECK(r.K_used == 64);
}

TEST_CASE("tail bound formula") {
  ProductForm f;
  f.kind = FactorKind::Minus;
  for (std::uint64_t k = 1; k <= 10; ++k) f.entries.push_back({k, 1.0, std::nullopt});
  f.exponent_bound = 1.0;
  CHECK(tail_bound(f, {0.5, std::nullopt}, 10) == doctest::Approx(std::ldexp(1.0, -9)).epsilon(1e-15));
  CHECK(tail_bound(f, {0.0, std::nullopt}, 10) == 0.0);
  CHECK(std::isinf(tail_bound(f, {1.0, std::nullopt}, 10)));
  EvalOptions boundary;
  boundary.boundary = true;
  const ProductForm a = to_product(unit_series(), FactorKind::Minus, 10, sieve());
  CHECK(eval_product(a, {0.5, std::nullopt}, 10).tail_bound > 0.0);
  CHECK(code_of([&] { (void)eval_product(a, {1.0, std::nullopt}, 10); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)eval_product(a, {1.2, std::nullopt}, 10, boundary); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("domain error at a vanishing factor") {
  const ProductForm a = to_product(unit_series(), FactorKind::Minus, 10, sieve());
  EvalOptions boundary;
  boundary.boundary = true;
  CHECK(code_of([&] { (void)eval_product(a, {1.0, std::nullopt}, 10, boundary); }) == ErrorCode::Domain);
}

TEST_CASE("K_for_tail and abel_K") {
  const std::uint64_t K = K_for_tail(FactorKind::Minus, 0.3, 1, 1.0, 1e-12);
  const double at = 2.0 * std::pow(0.3, static_cast<double>(K + 1)) / 0.7;
  const double before = 2.0 * std::pow(0.3, static_cast<double>(K)) / 0.7;
  CHECK(at <= 1e-12);
  CHECK(before > 1e-12);
  CHECK(abel_K(0.0) == 1);
  CHECK(abel_K(0.999) == static_cast<std::uint64_t>(std::ceil(-18.0 * std::log(10.0) / std::log(0.999))));
  CHECK(std::pow(0.999, static_cast<double>(abel_K(0.999))) < 1e-18);
}

TEST_CASE("evaluation is deterministic") {
  const ProductForm f = to_cos_product(unit_series(), 1.1, FactorKind::CosPlus, 100, sieve());
  const EvalReport r1 = eval_product(f, {0.4, 1.1}, 100);
  const EvalReport r2 = eval_product(f, {0.4, 1.1}, 100);
  CHECK(r1.value == r2.value);
  CHECK(r1.log_value == r2.log_value);
}

TEST_CASE("cos forms reject a conflicting or missing angle") {
  const ProductForm f = to_cos_product(unit_series(), 1.1, FactorKind::CosPlus, 10, sieve());
  CHECK(code_of([&] { (void)eval_product(f, {0.4, 0.3}, 10); }) == ErrorCode::InvalidArgument);
  const ProductForm g = trig_to_product(unit_series(), 0.5, FactorKind::CosMinus, 10, sieve());
  CHECK(code_of([&] { (void)eval_product(g, {0.5, std::nullopt}, 10); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)eval_product(g, {0.4, 1.0}, 10); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("cross product of the a-products at x and -x is one") {
  const ProductForm f = to_product(unit_series(), FactorKind::Minus, 200, sieve());
  for (double x : {0.3, 0.7}) {
    const EvalReport p = eval_product(f, {x, std::nullopt}, 200);
    const EvalReport n = eval_product(f, {-x, std::nullopt}, 200);
    CHECK(std::abs(p.value * n.value - 1.0) <= 1e-12);
  }
}

TEST_CASE("cos form at theta = 0 evaluates to the squared plain product") {
  const ProductForm m = to_cos_product(unit_series(), 0.0, FactorKind::CosMinus, 80, sieve());
  const ProductForm p = to_product(unit_series(), FactorKind::Minus, 80, sieve());
  const double lm = eval_product(m, {0.6, 0.0}, 80).log_value;
  const double lp = eval_product(p, {0.6, std::nullopt}, 80).log_value;
  CHECK(lm == doctest::Approx(2.0 * lp).epsilon(1e-14));
}

TEST_CASE("partial sums") {
  CHECK(partial_sum_exact(PartialSumKind::AS, 2, 3, sieve()) == Rational(23, 36));
  CHECK(partial_sum_exact(PartialSumKind::BLogRaw, 0, 4, sieve()) == Rational(5, 3));
  const PartialSumReport raw = partial_sum(PartialSumKind::BLogRaw, 1.0, 4, sieve());
  CHECK(raw.sum == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(std::isinf(raw.tail_bound));
  CHECK(code_of([] { (void)partial_sum(PartialSumKind::AS, 1.0, 10, sieve()); }) == ErrorCode::InvalidArgument);
  const PartialSumReport a = partial_sum(PartialSumKind::AS, 2.0, 1000, sieve(), {10, 100, 1000});
  REQUIRE(a.checkpoints.size() == 3);
  CHECK(a.checkpoints[2].second == a.sum);
  CHECK(a.tail_bound == doctest::Approx(1e-3));
}

TEST_CASE("raw b-sum diverges: b at powers of two is one half") {
  for (unsigned j = 1; j <= 20; ++j) {
    const std::uint64_t n = std::uint64_t{1} << j;
    REQUIRE(partial_sum_coefficient(PartialSumKind::BLogRaw, 1.0, n, sieve()) == 0.5);
    REQUIRE(b_closed(n, sieve()) == Rational(1, 2));
  }
}

TEST_CASE("compensated summation") {
  CompensatedSum s;
  s += 1.0;
  for (int i = 0; i < 10; ++i) s += 1e-16;
  s += -1.0;
  CHECK(s.value() == doctest::Approx(1e-15).epsilon(1e-12));
}

}  // TEST_SUITE
