#include "prodforge/prodforge.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "prodforge/arithmetic.hpp"
#include "prodforge/catalog.hpp"
#include "prodforge/coefficients.hpp"
#include "prodforge/error.hpp"
#include "prodforge/json_io.hpp"
#include "prodforge/series.hpp"

struct pf_context {
  prodforge::SpfTable sieve;
};

struct pf_table {
  prodforge::CoeffTable table;
};

struct pf_series {
  prodforge::SeriesSpec series;
};

struct pf_product {
  prodforge::ProductForm form;
};

namespace {

using namespace prodforge;

thread_local std::string last_error;

pf_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return PF_ERR_INVALID_ARGUMENT;
    case ErrorCode::OutOfRange: return PF_ERR_OUT_OF_RANGE;
    case ErrorCode::ResourceLimit: return PF_ERR_RESOURCE_LIMIT;
    case ErrorCode::UnsupportedParameter: return PF_ERR_UNSUPPORTED_PARAMETER;
    case ErrorCode::SingularWeight: return PF_ERR_SINGULAR_WEIGHT;
    case ErrorCode::IllConditioned: return PF_ERR_ILL_CONDITIONED;
    case ErrorCode::Domain: return PF_ERR_DOMAIN;
    case ErrorCode::Unsupported: return PF_ERR_UNSUPPORTED;
    case ErrorCode::UnknownIdentity: return PF_ERR_UNKNOWN_IDENTITY;
    case ErrorCode::PolicyRefusal: return PF_ERR_POLICY_REFUSAL;
    case ErrorCode::Parse: return PF_ERR_PARSE;
  }
  return PF_ERR_INTERNAL;
}

template <typename F>
pf_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return PF_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PF_ERR_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PF_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return PF_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void maybe_emit(char** json, const std::string& text) {
  if (json != nullptr) *json = copy_string(text);
}

CoeffKind coeff_kind(pf_coeff_kind kind) {
  switch (kind) {
    case PF_COEFF_A_LOG: return CoeffKind::ALog;
    case PF_COEFF_B_LOG: return CoeffKind::BLog;
    case PF_COEFF_A_S: return CoeffKind::AS;
    case PF_COEFF_B_S: return CoeffKind::BS;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown coefficient kind");
}

std::optional<std::int64_t> s_for(CoeffKind kind, std::int64_t s) {
  if (needs_s(kind)) return s;
  return std::nullopt;
}

FactorKind factor_kind(pf_factor_kind kind) {
  switch (kind) {
    case PF_FACTOR_MINUS: return FactorKind::Minus;
    case PF_FACTOR_PLUS: return FactorKind::Plus;
    case PF_FACTOR_RATIO_ODD: return FactorKind::RatioOdd;
    case PF_FACTOR_COS_MINUS: return FactorKind::CosMinus;
    case PF_FACTOR_COS_PLUS: return FactorKind::CosPlus;
    case PF_FACTOR_COS_RATIO: return FactorKind::CosRatio;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown factor kind");
}

void fill_report(const EvalReport& r, pf_eval_report* out) {
  out->value = r.value;
  out->log_value = r.log_value;
  out->K = r.K_used;
  out->tail_bound = r.tail_bound;
  out->has_reference = r.reference.has_value() ? 1 : 0;
  out->reference = r.reference.value_or(0.0);
  out->residual = r.residual.value_or(0.0);
  out->residual_relative = r.residual_relative ? 1 : 0;
  switch (r.status) {
    case EvalStatus::Converged: out->status = PF_EVAL_CONVERGED; break;
    case EvalStatus::BoundaryExperimental: out->status = PF_EVAL_BOUNDARY_EXPERIMENTAL; break;
    case EvalStatus::TailDominated: out->status = PF_EVAL_TAIL_DOMINATED; break;
  }
}

EvalReport report_from(const pf_eval_report& in) {
  EvalReport r;
  r.value = in.value;
  r.log_value = in.log_value;
  r.K_used = in.K;
  r.tail_bound = in.tail_bound;
  if (in.has_reference) {
    r.reference = in.reference;
    r.residual = in.residual;
    r.residual_relative = in.residual_relative != 0;
  }
  switch (in.status) {
    case PF_EVAL_CONVERGED: r.status = EvalStatus::Converged; break;
    case PF_EVAL_BOUNDARY_EXPERIMENTAL: r.status = EvalStatus::BoundaryExperimental; break;
    case PF_EVAL_TAIL_DOMINATED: r.status = EvalStatus::TailDominated; break;
  }
  return r;
}

IdentityParams params_from(const pf_identity_params* p) {
  IdentityParams out;
  if (p == nullptr) return out;
  if (p->set & PF_PARAM_X) out.x = p->x;
  if (p->set & PF_PARAM_THETA) out.theta = p->theta;
  if (p->set & PF_PARAM_S) out.s = p->s;
  if (p->set & PF_PARAM_N) out.n = p->n;
  if (p->set & PF_PARAM_J) out.J = p->J;
  if (p->set & PF_PARAM_TERMS_N) out.N = p->N;
  out.as_printed = p->as_printed != 0;
  return out;
}

pf_identity_params params_to(const IdentityParams& p) {
  pf_identity_params out{};
  if (p.x) { out.set |= PF_PARAM_X; out.x = *p.x; }
  if (p.theta) { out.set |= PF_PARAM_THETA; out.theta = *p.theta; }
  if (p.s) { out.set |= PF_PARAM_S; out.s = *p.s; }
  if (p.n) { out.set |= PF_PARAM_N; out.n = *p.n; }
  if (p.J) { out.set |= PF_PARAM_J; out.J = *p.J; }
  if (p.N) { out.set |= PF_PARAM_TERMS_N; out.N = *p.N; }
  out.as_printed = p.as_printed ? 1 : 0;
  return out;
}

std::uint64_t sieve_limit_from_env() {
  const char* env = std::getenv("PRODFORGE_SIEVE_LIMIT");
  if (env == nullptr || *env == '\0') return kDefaultSieveLimit;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw Error(ErrorCode::InvalidArgument, std::string("PRODFORGE_SIEVE_LIMIT is not an integer: '") + env + "'");
  }
  return v;
}

struct IdentityStrings {
  std::string params;
};

const std::vector<IdentityStrings>& identity_strings() {
  static const std::vector<IdentityStrings> strings = [] {
    std::vector<IdentityStrings> out;
    for (const auto& e : list_identities()) {
      std::string joined;
      for (const auto& p : e.params) joined += (joined.empty() ? "" : ",") + p;
      out.push_back({joined});
    }
    return out;
  }();
  return strings;
}

}  // namespace

extern "C" {

const char* pf_version(void) { return "1.0.0"; }

const char* pf_status_name(pf_status status) {
  switch (status) {
    case PF_OK: return "ok";
    case PF_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case PF_ERR_OUT_OF_RANGE: return "out-of-range";
    case PF_ERR_RESOURCE_LIMIT: return "resource-limit";
    case PF_ERR_UNSUPPORTED_PARAMETER: return "unsupported-parameter";
    case PF_ERR_SINGULAR_WEIGHT: return "singular-weight";
    case PF_ERR_ILL_CONDITIONED: return "ill-conditioned-transform";
    case PF_ERR_DOMAIN: return "domain-error";
    case PF_ERR_UNSUPPORTED: return "unsupported";
    case PF_ERR_UNKNOWN_IDENTITY: return "unknown-identity";
    case PF_ERR_POLICY_REFUSAL: return "policy-refusal";
    case PF_ERR_PARSE: return "parse-error";
    case PF_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* pf_last_error(void) { return last_error.c_str(); }

void pf_free(char* str) { std::free(str); }

pf_status pf_context_create(uint64_t sieve_limit, pf_context** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    const std::uint64_t limit = sieve_limit != 0 ? sieve_limit : sieve_limit_from_env();
    *out = new pf_context{SpfTable(limit)};
  });
}

void pf_context_destroy(pf_context* ctx) { delete ctx; }

uint64_t pf_context_sieve_limit(const pf_context* ctx) { return ctx ? ctx->sieve.limit() : 0; }

pf_status pf_mobius(const pf_context* ctx, uint64_t n, int* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = mobius(n, ctx->sieve);
  });
}

pf_status pf_squarefree_order(const pf_context* ctx, uint64_t n, int* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    const auto order = squarefree_order(n, ctx->sieve);
    *out = order ? static_cast<int>(*order) : -1;
  });
}

pf_status pf_table_closed(const pf_context* ctx, pf_coeff_kind kind, uint64_t N, int64_t s, pf_table** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = nullptr;
    const CoeffKind k = coeff_kind(kind);
    *out = new pf_table{closed_table(k, N, s_for(k, s), ctx->sieve)};
  });
}

pf_status pf_table_solve(pf_coeff_kind kind, uint64_t N, int64_t s, pf_table** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    const CoeffKind k = coeff_kind(kind);
    *out = new pf_table{solve_triangular(k, N, s_for(k, s))};
  });
}

void pf_table_destroy(pf_table* table) { delete table; }

uint64_t pf_table_limit(const pf_table* table) { return table ? table->table.limit() : 0; }

pf_status pf_table_value(const pf_table* table, uint64_t n, char** out) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    *out = copy_string(table->table[n].to_string());
  });
}

pf_status pf_table_serialize(const pf_table* table, pf_format format, char** out) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    *out = copy_string(format == PF_FORMAT_TSV ? table_tsv(table->table) : table_json_lines(table->table));
  });
}

pf_status pf_certify(const pf_context* ctx, pf_coeff_kind kind, uint64_t N, int64_t s, uint64_t inject_mismatch_at,
                     pf_certification* out, char** json) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    const CoeffKind k = coeff_kind(kind);
    CertifyOptions options;
    if (inject_mismatch_at != 0) options.inject_mismatch_at = inject_mismatch_at;
    const Certification cert = certify_table(k, N, s_for(k, s), ctx->sieve, options);
    out->checked = cert.checked;
    out->equal = cert.equal;
    out->first_mismatch = cert.first_mismatch.value_or(0);
    out->certified = cert.certified() ? 1 : 0;
    maybe_emit(json, dump_line(certification_json(cert)));
  });
}

pf_status pf_series_parse(const char* json, pf_series** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = nullptr;
    *out = new pf_series{parse_series_json(json)};
  });
}

pf_status pf_series_load(const char* path, pf_series** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    *out = new pf_series{load_series_file(path)};
  });
}

void pf_series_destroy(pf_series* series) { delete series; }

pf_status pf_transform(const pf_context* ctx, const pf_series* series, const pf_transform_request* request,
                       pf_product** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(series, "series");
    require(request, "request");
    require(out, "out");
    *out = nullptr;
    const FactorKind target = factor_kind(request->target);
    TransformLimits limits;
    if (request->eps_cos > 0.0) limits.eps_cos = request->eps_cos;
    if (request->growth_max > 0.0) limits.growth_max = request->growth_max;
    if (!is_cos_kind(target)) {
      if (request->has_theta || request->has_x) {
        throw Error(ErrorCode::InvalidArgument, "theta / x apply to cos targets only");
      }
      *out = new pf_product{to_product(series->series, target, request->K, ctx->sieve)};
    } else if (request->has_theta && request->has_x) {
      throw Error(ErrorCode::InvalidArgument, "give either theta (power series) or x (trigonometric series)");
    } else if (request->has_theta) {
      *out = new pf_product{to_cos_product(series->series, request->theta, target, request->K, ctx->sieve, limits)};
    } else if (request->has_x) {
      *out = new pf_product{trig_to_product(series->series, request->x, target, request->K, ctx->sieve, limits)};
    } else {
      throw Error(ErrorCode::InvalidArgument, "cos targets need theta or x");
    }
  });
}

void pf_product_destroy(pf_product* product) { delete product; }

pf_status pf_product_serialize(const pf_product* product, pf_format format, char** out) {
  return guarded([&] {
    require(product, "product");
    require(out, "out");
    *out = copy_string(format == PF_FORMAT_TSV ? product_tsv(product->form) : dump_line(product_json(product->form)));
  });
}

pf_status pf_product_evaluate(const pf_product* product, double x, int has_theta, double theta, uint64_t K,
                              pf_eval_report* out) {
  return guarded([&] {
    require(product, "product");
    require(out, "out");
    EvalPoint point{x, has_theta ? std::optional<double>(theta) : std::nullopt};
    fill_report(eval_product(product->form, point, K), out);
  });
}

pf_status pf_formal_log_check(const pf_product* product, const pf_series* series, uint64_t K, int* ok,
                              uint64_t* first_mismatch) {
  return guarded([&] {
    require(product, "product");
    require(series, "series");
    require(ok, "ok");
    const FormalCheck check = formal_log_check(product->form, series->series, K);
    *ok = check.ok ? 1 : 0;
    if (first_mismatch != nullptr) *first_mismatch = check.first_mismatch.value_or(0);
  });
}

size_t pf_identity_count(void) { return list_identities().size(); }

pf_status pf_identity_at(size_t index, pf_identity_info* out) {
  return guarded([&] {
    require(out, "out");
    const auto& all = list_identities();
    if (index >= all.size()) throw Error(ErrorCode::OutOfRange, "identity index out of range");
    const IdentityEntry& e = all[index];
    out->id = e.id.c_str();
    out->anchor = e.anchor.c_str();
    out->description = e.description.c_str();
    out->params = identity_strings()[index].params.c_str();
    out->boundary = e.validity == Validity::BoundaryExperimental ? 1 : 0;
    out->erratum_corrected = e.status == ErratumStatus::ErratumCorrected ? 1 : 0;
  });
}

pf_status pf_identity_check(const pf_context* ctx, const char* id, const pf_identity_params* params, uint64_t K,
                            double tol, pf_eval_report* out, int* pass, char** json) {
  return guarded([&] {
    require(ctx, "ctx");
    require(id, "id");
    const CheckResult result = check_identity(id, params_from(params), K, tol, ctx->sieve);
    if (out != nullptr) fill_report(result.report, out);
    if (pass != nullptr) *pass = result.pass ? 1 : 0;
    maybe_emit(json, dump_line(check_json(result)));
  });
}

pf_status pf_profile_count(const char* name, size_t* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = profile(name).size();
  });
}

pf_status pf_profile_case_at(const char* name, size_t index, pf_profile_case* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto& cases = profile(name);
    if (index >= cases.size()) throw Error(ErrorCode::OutOfRange, "profile case index out of range");
    const ProfileCase& c = cases[index];
    out->id = c.id.c_str();
    out->params = params_to(c.params);
    out->K = c.K;
    out->tol = c.tol;
    out->boundary = find_identity(c.id).validity == Validity::BoundaryExperimental ? 1 : 0;
  });
}

pf_status pf_stirling(const pf_context* ctx, uint64_t n, uint64_t J, uint64_t K, double tol, pf_eval_report* out,
                      char** json) {
  return guarded([&] {
    require(ctx, "ctx");
    StirlingOptions options;
    if (tol > 0.0) options.tol = tol;
    const EvalReport report = stirling_ratio(n, J, K, ctx->sieve, options);
    if (out != nullptr) fill_report(report, out);
    if (json != nullptr) {
      Json j = report_json(report);
      j["n"] = n;
      j["J"] = J;
      j["tol"] = options.tol;
      j["pass"] = report.passes(options.tol);
      *json = copy_string(dump_line(j));
    }
  });
}

pf_status pf_partial_sum(const pf_context* ctx, pf_sum_kind kind, double s, uint64_t N, double tol,
                         pf_partial_sum_report* out, char** json) {
  return guarded([&] {
    require(ctx, "ctx");
    PartialSumKind k = PartialSumKind::AS;
    switch (kind) {
      case PF_SUM_A_S: k = PartialSumKind::AS; break;
      case PF_SUM_B_S: k = PartialSumKind::BS; break;
      case PF_SUM_B_LOG_RAW: k = PartialSumKind::BLogRaw; break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown sum kind");
    }
    const PartialSumReport report = partial_sum(k, s, N, ctx->sieve);
    const double target = partial_sum_target(k, k == PartialSumKind::BLogRaw ? 1.0 : s);
    if (out != nullptr) {
      out->s = report.s;
      out->N = report.N;
      out->sum = report.sum;
      out->tail_bound = report.tail_bound;
      out->target = target;
      out->diff = std::abs(report.sum - target);
    }
    maybe_emit(json, dump_line(partial_sum_json(report, target, tol)));
  });
}

pf_status pf_zeta_reference(double s, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = zeta_reference(s);
  });
}

pf_status pf_abel(const pf_context* ctx, const char* id, const double* xs, size_t count, int has_theta, double theta,
                  pf_abel_row* rows, char** json) {
  return guarded([&] {
    require(ctx, "ctx");
    require(id, "id");
    if (count > 0) require(xs, "xs");
    const std::vector<double> points(xs, xs + count);
    const auto trace = abel_evaluate(id, points, has_theta ? std::optional<double>(theta) : std::nullopt,
                                     ctx->sieve);
    std::string lines;
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const AbelRow& r = trace[i];
      if (rows != nullptr) rows[i] = {r.x, r.K, r.lhs, r.target, r.residual, r.boundary_value, r.boundary_target};
      lines += dump_line(abel_row_json(id, r)) + "\n";
    }
    maybe_emit(json, lines);
  });
}

pf_status pf_report_json(const pf_eval_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_string(dump_line(report_json(report_from(*report))));
  });
}

}  // extern "C"
