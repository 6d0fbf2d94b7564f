// prodforge command-line front end. Links only the C interface.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prodforge/prodforge.h"

namespace {

// Stable exit-code contract.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitPolicy = 2;
constexpr int kExitInput = 3;

struct CliError {
  int exit_code;
};

int exit_code_for(pf_status status) {
  if (status == PF_OK) return kExitPass;
  if (status == PF_ERR_POLICY_REFUSAL) return kExitPolicy;
  return kExitInput;
}

void check(pf_status status) {
  if (status == PF_OK) return;
  std::cerr << "prodforge: " << pf_status_name(status) << ": " << pf_last_error() << "\n";
  throw CliError{exit_code_for(status)};
}

struct StringDeleter {
  void operator()(char* p) const { pf_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ContextDeleter {
  void operator()(pf_context* p) const { pf_context_destroy(p); }
};
struct TableDeleter {
  void operator()(pf_table* p) const { pf_table_destroy(p); }
};
struct SeriesDeleter {
  void operator()(pf_series* p) const { pf_series_destroy(p); }
};
struct ProductDeleter {
  void operator()(pf_product* p) const { pf_product_destroy(p); }
};

struct FormatFlags {
  bool json = false;
  bool tsv = false;

  void attach(CLI::App* app) {
    auto* j = app->add_flag("--json", json, "Line-delimited JSON output");
    auto* t = app->add_flag("--tsv", tsv, "Tab-separated output");
    j->excludes(t);
  }
  pf_format resolve(pf_format fallback) const {
    if (json) return PF_FORMAT_JSON;
    if (tsv) return PF_FORMAT_TSV;
    return fallback;
  }
};

struct Options {
  std::uint64_t sieve_limit = 0;

  // coeffs / oracle
  std::string kind;
  std::uint64_t max = 0;
  std::optional<std::int64_t> s_int;
  std::uint64_t inject_mismatch = 0;

  // verify
  std::string id;
  bool all = false;
  std::string profile = "desk";
  std::optional<double> x;
  std::optional<double> theta;
  std::optional<double> s;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> J;
  std::optional<std::uint64_t> N;
  std::uint64_t K = 0;
  std::optional<double> tol;
  bool as_printed = false;
  bool assert_mode = false;

  // transform
  std::string series_path;
  std::string target;

  // stirling
  std::uint64_t terms = 5;

  // abel
  std::vector<double> xs;

  FormatFlags format;
};

using ContextPtr = std::unique_ptr<pf_context, ContextDeleter>;

ContextPtr make_context(const Options& o) {
  pf_context* ctx = nullptr;
  check(pf_context_create(o.sieve_limit, &ctx));
  return ContextPtr(ctx);
}

pf_coeff_kind parse_kind(const std::string& text) {
  if (text == "a") return PF_COEFF_A_LOG;
  if (text == "b") return PF_COEFF_B_LOG;
  if (text == "a_s") return PF_COEFF_A_S;
  if (text == "b_s") return PF_COEFF_B_S;
  std::cerr << "prodforge: unknown --kind '" << text << "' (expected a, b, a_s, b_s)\n";
  throw CliError{kExitInput};
}

bool kind_needs_s(pf_coeff_kind kind) { return kind == PF_COEFF_A_S || kind == PF_COEFF_B_S; }

std::int64_t resolve_s(pf_coeff_kind kind, const Options& o) {
  if (kind_needs_s(kind)) {
    if (!o.s_int) {
      std::cerr << "prodforge: --s is required for kind " << o.kind << "\n";
      throw CliError{kExitInput};
    }
    return *o.s_int;
  }
  if (o.s_int) {
    std::cerr << "prodforge: --s only applies to kinds a_s and b_s\n";
    throw CliError{kExitInput};
  }
  return 0;
}

pf_factor_kind parse_target(const std::string& text) {
  if (text == "minus") return PF_FACTOR_MINUS;
  if (text == "plus") return PF_FACTOR_PLUS;
  if (text == "ratio") return PF_FACTOR_RATIO_ODD;
  if (text == "cos-minus") return PF_FACTOR_COS_MINUS;
  if (text == "cos-plus") return PF_FACTOR_COS_PLUS;
  if (text == "cos-ratio") return PF_FACTOR_COS_RATIO;
  std::cerr << "prodforge: unknown --target '" << text << "'\n";
  throw CliError{kExitInput};
}

int cmd_coeffs(const Options& o) {
  const auto ctx = make_context(o);
  const pf_coeff_kind kind = parse_kind(o.kind);
  const std::int64_t s = resolve_s(kind, o);
  pf_table* raw = nullptr;
  check(pf_table_closed(ctx.get(), kind, o.max, s, &raw));
  const std::unique_ptr<pf_table, TableDeleter> table(raw);
  char* text = nullptr;
  check(pf_table_serialize(table.get(), o.format.resolve(PF_FORMAT_TSV), &text));
  const OwnedString owned(text);
  std::cout << owned.get();
  return kExitPass;
}

int cmd_oracle(const Options& o) {
  const auto ctx = make_context(o);
  const pf_coeff_kind kind = parse_kind(o.kind);
  const std::int64_t s = resolve_s(kind, o);
  pf_certification cert{};
  char* json = nullptr;
  check(pf_certify(ctx.get(), kind, o.max, s, o.inject_mismatch, &cert, &json));
  const OwnedString owned(json);
  if (o.format.json) {
    std::cout << owned.get() << "\n";
  } else if (cert.certified) {
    std::cout << "certified: " << cert.equal << "/" << cert.checked << " equal\n";
  } else {
    const auto j = nlohmann::json::parse(owned.get());
    std::cout << "mismatch: " << cert.equal << "/" << cert.checked << " equal; first mismatch at n="
              << cert.first_mismatch << " (closed " << j.at("closed_value").get<std::string>() << ", solver "
              << j.at("solver_value").get<std::string>() << ")\n";
  }
  return cert.certified ? kExitPass : kExitFail;
}

pf_identity_params gather_params(const Options& o) {
  pf_identity_params p{};
  if (o.x) { p.set |= PF_PARAM_X; p.x = *o.x; }
  if (o.theta) { p.set |= PF_PARAM_THETA; p.theta = *o.theta; }
  if (o.s) { p.set |= PF_PARAM_S; p.s = *o.s; }
  if (o.n) { p.set |= PF_PARAM_N; p.n = *o.n; }
  if (o.J) { p.set |= PF_PARAM_J; p.J = *o.J; }
  if (o.N) { p.set |= PF_PARAM_TERMS_N; p.N = *o.N; }
  p.as_printed = o.as_printed ? 1 : 0;
  return p;
}

std::string skipped_line(const std::string& id) {
  nlohmann::ordered_json j;
  j["schema"] = "prodforge/1";
  j["id"] = id;
  j["status"] = "SKIPPED-EXPERIMENTAL";
  j["pass"] = nullptr;
  return j.dump();
}

bool is_boundary(const std::string& id) {
  for (std::size_t i = 0; i < pf_identity_count(); ++i) {
    pf_identity_info info{};
    check(pf_identity_at(i, &info));
    if (id == info.id) return info.boundary != 0;
  }
  std::cerr << "prodforge: unknown identity '" << id << "'\n";
  throw CliError{kExitInput};
}

int cmd_verify(const Options& o) {
  const auto ctx = make_context(o);
  if (o.all) {
    std::size_t count = 0;
    check(pf_profile_count(o.profile.c_str(), &count));
    bool all_pass = true;
    for (std::size_t i = 0; i < count; ++i) {
      pf_profile_case c{};
      check(pf_profile_case_at(o.profile.c_str(), i, &c));
      if (c.boundary) {
        std::cout << skipped_line(c.id) << "\n";
        continue;
      }
      int pass = 0;
      char* json = nullptr;
      check(pf_identity_check(ctx.get(), c.id, &c.params, c.K, c.tol, nullptr, &pass, &json));
      const OwnedString owned(json);
      std::cout << owned.get() << "\n";
      all_pass = all_pass && pass != 0;
    }
    return all_pass ? kExitPass : kExitFail;
  }
  if (o.id.empty()) {
    std::cerr << "prodforge: verify needs --id or --all\n";
    throw CliError{kExitInput};
  }
  if (is_boundary(o.id) && !o.assert_mode) {
    std::cout << skipped_line(o.id) << "\n";
    return kExitPass;
  }
  const pf_identity_params params = gather_params(o);
  int pass = 0;
  char* json = nullptr;
  check(pf_identity_check(ctx.get(), o.id.c_str(), &params, o.K, o.tol.value_or(1e-9), nullptr, &pass, &json));
  const OwnedString owned(json);
  std::cout << owned.get() << "\n";
  return pass ? kExitPass : kExitFail;
}

int cmd_transform(const Options& o) {
  const auto ctx = make_context(o);
  pf_series* raw_series = nullptr;
  check(pf_series_load(o.series_path.c_str(), &raw_series));
  const std::unique_ptr<pf_series, SeriesDeleter> series(raw_series);
  pf_transform_request request{};
  request.target = parse_target(o.target);
  request.K = o.K;
  if (o.theta) { request.has_theta = 1; request.theta = *o.theta; }
  if (o.x) { request.has_x = 1; request.x = *o.x; }
  pf_product* raw_product = nullptr;
  check(pf_transform(ctx.get(), series.get(), &request, &raw_product));
  const std::unique_ptr<pf_product, ProductDeleter> product(raw_product);
  const pf_format format = o.format.resolve(PF_FORMAT_JSON);
  char* text = nullptr;
  check(pf_product_serialize(product.get(), format, &text));
  const OwnedString owned(text);
  std::cout << owned.get() << (format == PF_FORMAT_JSON ? "\n" : "");
  return kExitPass;
}

int cmd_stirling(const Options& o) {
  const auto ctx = make_context(o);
  if (!o.n) {
    std::cerr << "prodforge: stirling needs --n\n";
    throw CliError{kExitInput};
  }
  const double tol = o.tol.value_or(1e-10);
  pf_eval_report report{};
  char* json = nullptr;
  check(pf_stirling(ctx.get(), *o.n, o.terms, o.K == 0 ? 25 : o.K, tol, &report, &json));
  const OwnedString owned(json);
  std::cout << owned.get() << "\n";
  if (report.status == PF_EVAL_TAIL_DOMINATED) return kExitPass;  // report only
  return report.residual <= tol ? kExitPass : kExitFail;
}

int cmd_zeta(const Options& o) {
  const auto ctx = make_context(o);
  pf_sum_kind kind = PF_SUM_A_S;
  double default_tol = 2e-5;
  if (o.kind == "a") {
    kind = PF_SUM_A_S;
  } else if (o.kind == "b") {
    kind = PF_SUM_B_S;
    default_tol = 1e-4;
  } else if (o.kind == "b_raw") {
    kind = PF_SUM_B_LOG_RAW;
  } else {
    std::cerr << "prodforge: unknown zeta --kind '" << o.kind << "' (expected a, b, b_raw)\n";
    throw CliError{kExitInput};
  }
  const double tol = o.tol.value_or(default_tol);
  pf_partial_sum_report report{};
  char* json = nullptr;
  check(pf_partial_sum(ctx.get(), kind, o.s.value_or(2.0), o.N.value_or(100000), tol, &report, &json));
  const OwnedString owned(json);
  std::cout << owned.get() << "\n";
  if (kind == PF_SUM_B_LOG_RAW) return kExitPass;  // divergent; report only
  return report.diff <= tol ? kExitPass : kExitFail;
}

int cmd_abel(const Options& o) {
  const auto ctx = make_context(o);
  std::vector<pf_abel_row> rows(o.xs.size());
  char* json = nullptr;
  check(pf_abel(ctx.get(), o.id.c_str(), o.xs.data(), o.xs.size(), o.theta ? 1 : 0, o.theta.value_or(0.0),
                rows.data(), &json));
  const OwnedString owned(json);
  if (o.format.tsv) {
    std::cout << "x\tK\tlhs\ttarget\tresidual\tboundary_value\tboundary_target\n";
    for (const auto& r : rows) {
      std::printf("%.17g\t%llu\t%.17g\t%.17g\t%.3e\t%.17g\t%.17g\n", r.x, static_cast<unsigned long long>(r.K),
                  r.lhs, r.target, r.residual, r.boundary_value, r.boundary_target);
    }
  } else {
    std::cout << owned.get();
  }
  return kExitPass;
}

int cmd_list(const Options& o) {
  for (std::size_t i = 0; i < pf_identity_count(); ++i) {
    pf_identity_info info{};
    check(pf_identity_at(i, &info));
    if (o.format.json) {
      nlohmann::ordered_json j;
      j["schema"] = "prodforge/1";
      j["id"] = info.id;
      j["validity"] = info.boundary ? "boundary-experimental" : "interior";
      j["status"] = info.erratum_corrected ? "erratum-corrected" : "as-printed";
      j["params"] = info.params;
      j["identity"] = info.anchor;
      j["description"] = info.description;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << info.id << "\t" << (info.boundary ? "boundary-experimental" : "interior") << "\t"
                << (info.erratum_corrected ? "erratum-corrected" : "as-printed") << "\t" << info.anchor << "\n";
    }
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prodforge: square-free exponent sequences and infinite-product identities"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--sieve-limit", o.sieve_limit, "Sieve bound (default: PRODFORGE_SIEVE_LIMIT or 10^7)");

  auto* coeffs = app.add_subcommand("coeffs", "Closed-form coefficient table as exact num/den values");
  coeffs->add_option("--kind", o.kind, "a, b, a_s or b_s")->required();
  coeffs->add_option("--max", o.max, "Largest index")->required();
  coeffs->add_option("--s", o.s_int, "Integer exponent s >= 2 (a_s, b_s)");
  o.format.attach(coeffs);

  auto* oracle = app.add_subcommand("oracle", "Triangular solve certified against the closed form");
  oracle->add_option("--kind", o.kind, "a, b, a_s or b_s")->required();
  oracle->add_option("--max", o.max, "Largest index")->required();
  oracle->add_option("--s", o.s_int, "Integer exponent s >= 2 (a_s, b_s)");
  oracle->add_option("--inject-mismatch", o.inject_mismatch)->group("");
  o.format.attach(oracle);

  auto* verify = app.add_subcommand("verify", "Evaluate identities against their closed-form sides");
  auto* id_opt = verify->add_option("--id", o.id, "Identity id (see `list`)");
  auto* all_opt = verify->add_flag("--all", o.all, "Run every identity of the profile");
  id_opt->excludes(all_opt);
  verify->add_option("--profile", o.profile, "Parameter profile for --all")->capture_default_str();
  verify->add_option("--x", o.x);
  verify->add_option("--theta", o.theta);
  verify->add_option("--s", o.s);
  verify->add_option("--n", o.n);
  verify->add_option("--J", o.J);
  verify->add_option("--N", o.N);
  verify->add_option("--K", o.K, "Truncation order (0: from the tail bound)");
  verify->add_option("--tol", o.tol, "Residual tolerance (default 1e-9)");
  verify->add_flag("--as-printed", o.as_printed, "Use the printed form of a corrected identity");
  verify->add_flag("--assert", o.assert_mode, "Refuse (exit 2) instead of skipping boundary identities");
  o.format.attach(verify);

  auto* transform = app.add_subcommand("transform", "Convert a series file into a product form");
  transform->add_option("--series", o.series_path, "Series JSON file")->required()->check(CLI::ExistingFile);
  transform->add_option("--target", o.target, "minus, plus, ratio, cos-minus, cos-plus, cos-ratio")->required();
  transform->add_option("--theta", o.theta, "Angle for cos targets over a power series");
  transform->add_option("--x", o.x, "Radius for cos targets over a trigonometric series");
  transform->add_option("--K", o.K, "Number of product factors")->required();
  o.format.attach(transform);

  auto* stirling = app.add_subcommand("stirling", "Squared Stirling ratio as an odd-ratio product");
  stirling->add_option("--n", o.n)->required();
  stirling->add_option("--terms", o.terms, "Bernoulli terms J")->capture_default_str();
  stirling->add_option("--K", o.K, "Product truncation (default 25)");
  stirling->add_option("--tol", o.tol, "Residual tolerance (default 1e-10)");

  auto* zeta = app.add_subcommand("zeta", "Partial sums of the s-parameterized sequences against zeta targets");
  zeta->add_option("--kind", o.kind, "a, b or b_raw")->required();
  zeta->add_option("--s", o.s, "Real s > 1 (default 2)");
  zeta->add_option("--N", o.N, "Number of terms (default 100000)");
  zeta->add_option("--tol", o.tol, "Tolerance (default 2e-5 for a, 1e-4 for b)");

  auto* abel = app.add_subcommand("abel", "Trace a boundary identity as x -> 1-");
  abel->add_option("--id", o.id)->required();
  abel->add_option("--xs", o.xs, "Comma-separated probe points in [0, 1)")->required()->delimiter(',');
  abel->add_option("--theta", o.theta, "Angle (default 1.0)");
  o.format.attach(abel);

  auto* list = app.add_subcommand("list", "Registered identities");
  o.format.attach(list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*coeffs) return cmd_coeffs(o);
    if (*oracle) return cmd_oracle(o);
    if (*verify) return cmd_verify(o);
    if (*transform) return cmd_transform(o);
    if (*stirling) return cmd_stirling(o);
    if (*zeta) return cmd_zeta(o);
    if (*abel) return cmd_abel(o);
    if (*list) return cmd_list(o);
  } catch (const CliError& e) {
    return e.exit_code;
  }
  return kExitInput;
}
