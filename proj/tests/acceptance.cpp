// One line per acceptance criterion; exits non-zero if any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "oracles.hpp"
#include "prodforge/catalog.hpp"
#include "prodforge/coefficients.hpp"
#include "prodforge/evaluator.hpp"
#include "prodforge/series.hpp"

#ifndef PRODFORGE_CLI_PATH
#error "PRODFORGE_CLI_PATH must name the prodforge executable"
#endif

using namespace prodforge;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const SpfTable& sieve() {
  static const SpfTable table(2'000'000);
  return table;
}

SeriesSpec unit_series(Parity parity = Parity::All) { return SeriesSpec("x", parity, {{1, Rational(1)}}); }

Outcome ac01() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (auto kind : {CoeffKind::ALog, CoeffKind::BLog}) ok = ok && certify_table(kind, 5000, std::nullopt, sieve()).certified();
  for (std::int64_t s : {2, 3}) {
    for (auto kind : {CoeffKind::AS, CoeffKind::BS}) ok = ok && certify_table(kind, 2000, s, sieve()).certified();
  }
  const double t = seconds_since(t0);
  return {ok && t < 10.0, "6 tables equal, " + fmt(t) + " s (budget 10 s)"};
}

Outcome ac02() {
  bool ok = true;
  for (std::uint64_t n = 1; n <= 100'000 && ok; ++n) ok = a_closed(n, sieve()).raw() == oracle::ratio(-oracle::mobius(n), n);
  const CoeffTable a = closed_table(CoeffKind::ALog, 10'000, std::nullopt, sieve());
  const CoeffTable b = closed_table(CoeffKind::BLog, 10'000, std::nullopt, sieve());
  for (std::uint64_t n = 2; n <= 10'000 && ok; ++n) {
    mpq_class ra = 0;
    mpq_class rb = 0;
    for (std::uint64_t d : divisors(n, sieve())) {
      const std::uint64_t m = n / d;
      ra += a[d].raw() / m;
      rb += b[d].raw() * (m % 2 == 1 ? 1 : -1) / m;
    }
    ok = ra == 0 && rb == 0;
  }
  return {ok, "a_n = -mu(n)/n for n <= 1e5; a and b rows vanish for n <= 1e4"};
}

Outcome ac03() {
  const auto t0 = std::chrono::steady_clock::now();
  const CheckResult sqrt_e = check_identity("SQRT_E", {}, 64, 1e-11, sieve());
  const ProductForm odd = to_product(unit_series(Parity::OddOnly), FactorKind::RatioOdd, 79, sieve());
  const EvalReport e = eval_product(odd, {0.5, std::nullopt}, 79);
  const double t = seconds_since(t0);
  const double r1 = std::abs(sqrt_e.report.value - std::exp(0.5));
  const double r2 = std::abs(e.value - std::numbers::e);
  return {r1 <= 1e-11 && r2 <= 1e-11 && odd.entries.size() == 40 && t < 1.0,
          "|sqrt e| err " + fmt(r1) + ", |e| err " + fmt(r2) + " over 40 odd factors, " + fmt(t * 1e3) + " ms"};
}

Outcome ac04() {
  bool ok = true;
  double worst = 0.0;
  for (double x : {0.3, -0.3, 0.7, -0.7}) {
    for (const char* id : {"EXP_MINUS", "EXP_PLUS"}) {
      const CheckResult r = check_identity(id, {.x = x}, 0, 1e-9, sieve());
      const double err = std::abs(r.report.value - std::exp(x));
      worst = std::max(worst, err);
      ok = ok && r.pass && err <= 1e-9;
    }
    const CheckResult neg = check_identity("EXP_MINUS_NEG", {.x = x}, 0, 1e-9, sieve());
    const double err = std::abs(neg.report.value - std::exp(-x));
    worst = std::max(worst, err);
    ok = ok && neg.pass && err <= 1e-9;
  }
  double cross = 0.0;
  for (double x : {0.3, 0.7}) {
    const CheckResult p = check_identity("EXP_MINUS", {.x = x}, 0, 1e-9, sieve());
    const CheckResult n = check_identity("EXP_MINUS_NEG", {.x = x}, 0, 1e-9, sieve());
    cross = std::max(cross, std::abs(p.report.value * n.report.value - 1.0));
  }
  ok = ok && cross <= 1e-12;
  return {ok, "worst exp residual " + fmt(worst) + ", cross-product deviation " + fmt(cross)};
}

Outcome ac05() {
  const double pi = std::numbers::pi;
  bool ok = true;
  double worst = 0.0;
  auto run = [&](const char* id, double x, double t, double target) {
    const CheckResult r = check_identity(id, {.x = x, .theta = t}, 100, 1e-9, sieve());
    const double err = std::abs(r.report.value - target);
    worst = std::max(worst, err);
    ok = ok && r.pass && err <= 1e-9;
  };
  for (auto [x, t] : {std::pair{0.5, pi / 3}, std::pair{0.4, 1.1}}) {
    run("EXP_COS_MINUS", x, t, std::exp(2 * x * std::cos(t)));
    run("EXP_COS_PLUS", x, t, std::exp(2 * x * std::cos(t)));
  }
  run("EXP_COS_RATIO", 1.0 / 3.0, pi / 4, std::exp(4.0 / 3.0 * std::cos(pi / 4)));
  return {ok, "worst residual " + fmt(worst) + " at K = 100"};
}

Outcome ac06() {
  const CheckResult fixed = check_identity("MIXED_PARITY", {.x = 0.3, .theta = 1.0}, 60, 1e-10, sieve());
  const CheckResult printed =
      check_identity("MIXED_PARITY", {.x = 0.3, .theta = 1.0, .as_printed = true}, 60, 1e-10, sieve());
  const double rf = *fixed.report.residual;
  const double rp = *printed.report.residual;
  return {fixed.pass && rf <= 1e-10 && rp > 1e-2,
          "corrected residual " + fmt(rf) + ", as-printed residual " + fmt(rp)};
}

Outcome ac07() {
  const std::uint64_t K = 200;
  bool ok = true;
  ok = ok && formal_log_check(to_product(unit_series(), FactorKind::Minus, K, sieve()), unit_series(), K).ok;
  ok = ok && formal_log_check(to_product(unit_series(), FactorKind::Plus, K, sieve()), unit_series(), K).ok;
  // Compare against an independently derived Taylor series, not the library's own coefficients.
  const auto sin_ref = oracle::log_x_over_sin(K);
  const auto sec_ref = oracle::log_sec(K);
  std::vector<SeriesTerm> sin_terms;
  std::vector<SeriesTerm> sec_terms;
  for (std::uint64_t k = 1; k <= K; ++k) {
    sin_terms.push_back({k, Rational(sin_ref[k])});
    sec_terms.push_back({k, Rational(sec_ref[k])});
  }
  const SeriesSpec sin_oracle("x/sin x oracle", Parity::All, sin_terms);
  const SeriesSpec sec_oracle("sec oracle", Parity::All, sec_terms);
  ok = ok && formal_log_check(to_product(x_over_sin_log_series(K), FactorKind::Minus, K, sieve()), sin_oracle, K).ok;
  ok = ok && formal_log_check(to_product(sec_log_series(K), FactorKind::Minus, K, sieve()), sec_oracle, K).ok;
  return {ok, "4 product forms equal their series through order 200"};
}

Outcome ac08() {
  const CheckResult s = check_identity("X_OVER_SINX", {.x = 0.5}, 30, 1e-10, sieve());
  const CheckResult c = check_identity("SEC", {.x = 0.5}, 30, 1e-10, sieve());
  const double rs = std::abs(s.report.value - 0.5 / std::sin(0.5));
  const double rc = std::abs(c.report.value - 1.0 / std::cos(0.5));
  return {s.pass && c.pass && rs <= 1e-10 && rc <= 1e-10, "x/sin x err " + fmt(rs) + ", sec err " + fmt(rc)};
}

Outcome ac09() {
  const EvalReport r10 = stirling_ratio(10, 5, 25, sieve());
  const EvalReport r20 = stirling_ratio(20, 5, 25, sieve());
  const double e10 = std::abs(r10.value - oracle::stirling_squared_ratio(10));
  const double e20 = std::abs(r20.value - oracle::stirling_squared_ratio(20));
  return {e10 <= 1e-10 && e20 < e10, "n=10 err " + fmt(e10) + ", n=20 err " + fmt(e20)};
}

Outcome ac10() {
  const auto t0 = std::chrono::steady_clock::now();
  const PartialSumReport a = partial_sum(PartialSumKind::AS, 2.0, 100'000, sieve());
  const PartialSumReport b = partial_sum(PartialSumKind::BS, 2.0, 100'000, sieve());
  const double t = seconds_since(t0);
  const double zeta2 = oracle::zeta(2);
  const double da = std::abs(a.sum - 1.0 / zeta2);
  const double db = std::abs(b.sum - 2.0 / zeta2);
  return {da <= 2e-5 && db <= 1e-4 && t < 5.0,
          "|diff| a " + fmt(da) + ", b " + fmt(db) + ", " + fmt(t) + " s (budget 5 s)"};
}

Outcome ac11() {
  bool ok = true;
  for (unsigned j = 1; j <= 20; ++j) ok = ok && b_closed(std::uint64_t{1} << j, sieve()) == Rational(1, 2);
  const auto rows = abel_evaluate("B_SUM_LOG2", {0.999}, std::nullopt, sieve());
  const double err = std::abs(rows[0].lhs - 0.999);
  return {ok && err <= 1e-6, "b_{2^j} = 1/2 for j <= 20; Abel probe at 0.999 err " + fmt(err)};
}

struct Run {
  int exit_code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(PRODFORGE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome ac12() {
  const Run all = run_cli("verify --all --profile desk");
  bool ok = all.exit_code == 0;
  std::istringstream lines(all.out);
  std::string line;
  int skipped = 0;
  int passed = 0;
  while (std::getline(lines, line)) {
    if (line.find("SKIPPED-EXPERIMENTAL") != std::string::npos) ++skipped;
    if (line.find("\"pass\":true") != std::string::npos) ++passed;
    if (line.find("\"pass\":false") != std::string::npos) ok = false;
  }
  for (const char* id : {"BOUNDARY_SIN", "BOUNDARY_TAN"}) {
    ok = ok && all.out.find(std::string("\"id\":\"") + id + "\",\"status\":\"SKIPPED-EXPERIMENTAL\"") !=
                   std::string::npos;
    const Run trace = run_cli(std::string("abel --id ") + id + " --xs 0.9,0.99,0.999 --theta 1.0");
    int rows = 0;
    std::istringstream tl(trace.out);
    while (std::getline(tl, line)) rows += line.find("boundary-experimental") != std::string::npos ? 1 : 0;
    ok = ok && trace.exit_code == 0 && rows == 3;
    ok = ok && run_cli(std::string("verify --id ") + id + " --assert").exit_code == 2;
  }
  return {ok, "verify --all exit " + std::to_string(all.exit_code) + ", " + std::to_string(passed) + " passed, " +
                  std::to_string(skipped) + " skipped; boundary traces emitted, --assert refused"};
}

}  // namespace

int main() {
  const std::array<std::pair<const char*, std::function<Outcome()>>, 12> criteria{{
      {"coefficient certification", ac01},
      {"mobius link and convolution rows", ac02},
      {"sqrt(e) and e constants", ac03},
      {"exp(x) products and cross product", ac04},
      {"cos-weighted products", ac05},
      {"mixed parity correction", ac06},
      {"formal log oracle to order 200", ac07},
      {"x/sin x and sec products", ac08},
      {"Stirling squared ratio", ac09},
      {"zeta partial sums", ac10},
      {"b-sum divergence and Abel probe", ac11},
      {"boundary policy", ac12},
  }};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("AC-%02zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
