#include "prodforge/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "prodforge/error.hpp"

namespace prodforge {

namespace {

Parity parse_parity(const std::string& text) {
  if (text == "all") return Parity::All;
  if (text == "odd") return Parity::OddOnly;
  if (text == "even-squared") return Parity::EvenSquared;
  throw Error(ErrorCode::Parse, "unknown parity '" + text + "'");
}

std::string integer_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::Parse, std::string("coefficient is missing '") + key + "'");
  const auto& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error(ErrorCode::Parse, std::string("'") + key + "' must be an integer string");
}

Json with_schema() {
  Json j;
  j["schema"] = kSchema;
  return j;
}

}  // namespace

SeriesSpec parse_series_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("series JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::Parse, "series JSON must be an object");
  try {
    const std::string name = j.value("name", std::string("series"));
    const Parity parity = parse_parity(j.value("parity", std::string("all")));
    const std::string description = j.value("description", std::string());
    if (!j.contains("coefficients") || !j.at("coefficients").is_array()) {
      throw Error(ErrorCode::Parse, "series JSON needs a 'coefficients' array");
    }
    std::vector<SeriesTerm> terms;
    for (const auto& c : j.at("coefficients")) {
      if (!c.contains("degree") || !c.at("degree").is_number_unsigned()) {
        throw Error(ErrorCode::Parse, "coefficient degree must be a positive integer");
      }
      const auto degree = c.at("degree").get<std::uint64_t>();
      terms.push_back({degree, Rational::parse(integer_field(c, "num"), integer_field(c, "den"))});
    }
    return SeriesSpec(name, parity, std::move(terms), description);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("series JSON: ") + e.what());
  }
}

SeriesSpec load_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open series file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_series_json(buf.str());
}

Json series_json(const SeriesSpec& series) {
  Json j;
  j["name"] = series.name();
  j["parity"] = to_string(series.parity());
  if (!series.description().empty()) j["description"] = series.description();
  Json coeffs = Json::array();
  for (const auto& t : series.terms()) {
    coeffs.push_back({{"degree", t.degree},
                      {"num", t.value.numerator().get_str()},
                      {"den", t.value.denominator().get_str()}});
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

Json real_json(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

Json product_json(const ProductForm& form) {
  Json j = with_schema();
  j["type"] = "product_form";
  j["source"] = form.source;
  j["factor_kind"] = to_string(form.kind);
  j["variable"] = form.variable_power == 2 ? "x^2" : "x";
  j["scale"] = form.scale.to_string();
  j["theta"] = form.theta ? Json(*form.theta) : Json(nullptr);
  j["x"] = form.fixed_x ? Json(*form.fixed_x) : Json(nullptr);
  Json entries = Json::array();
  for (const auto& e : form.entries) {
    Json item;
    item["k"] = e.k;
    if (e.exact) {
      item["exponent"] = e.exact->to_string();
    } else {
      item["exponent"] = real_json(e.exponent);
    }
    entries.push_back(std::move(item));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string product_tsv(const ProductForm& form) {
  std::ostringstream out;
  for (const auto& e : form.entries) {
    out << e.k << '\t' << (e.exact ? e.exact->to_string() : real_json(e.exponent).dump()) << '\n';
  }
  return out.str();
}

Json report_json(const EvalReport& report) {
  Json j = with_schema();
  j["value"] = real_json(report.value);
  j["log_value"] = real_json(report.log_value);
  j["K"] = report.K_used;
  j["tail_bound"] = real_json(report.tail_bound);
  j["reference"] = report.reference ? real_json(*report.reference) : Json(nullptr);
  j["residual"] = report.residual ? real_json(*report.residual) : Json(nullptr);
  if (report.residual) j["residual_kind"] = report.residual_relative ? "relative" : "absolute";
  j["status"] = to_string(report.status);
  return j;
}

Json params_json(const IdentityParams& p) {
  Json j = Json::object();
  if (p.x) j["x"] = *p.x;
  if (p.theta) j["theta"] = *p.theta;
  if (p.n) j["n"] = *p.n;
  if (p.J) j["J"] = *p.J;
  if (p.s) j["s"] = *p.s;
  if (p.N) j["N"] = *p.N;
  if (p.as_printed) j["as_printed"] = true;
  return j;
}

Json check_json(const CheckResult& result) {
  Json j = with_schema();
  j["id"] = result.id;
  j["params"] = params_json(result.params);
  j["tol"] = result.tol;
  const Json report = report_json(result.report);
  for (const auto& [key, value] : report.items()) {
    if (key != "schema") j[key] = value;
  }
  j["pass"] = result.pass;
  return j;
}

Json abel_row_json(const std::string& id, const AbelRow& row) {
  Json j = with_schema();
  j["id"] = id;
  j["x"] = row.x;
  j["K"] = row.K;
  j["lhs"] = real_json(row.lhs);
  j["target"] = real_json(row.target);
  j["residual"] = real_json(row.residual);
  j["boundary_value"] = real_json(row.boundary_value);
  j["boundary_target"] = real_json(row.boundary_target);
  j["status"] = to_string(EvalStatus::BoundaryExperimental);
  return j;
}

Json partial_sum_json(const PartialSumReport& report, double target, double tol) {
  Json j = with_schema();
  j["kind"] = to_string(report.kind);
  j["s"] = report.s;
  j["N"] = report.N;
  j["sum"] = real_json(report.sum);
  j["target"] = real_json(target);
  j["diff"] = real_json(std::abs(report.sum - target));
  j["tail_bound"] = real_json(report.tail_bound);
  if (report.kind == PartialSumKind::BLogRaw) {
    // Divergent; the row is a trace, never a verdict.
    j["tol"] = nullptr;
    j["pass"] = nullptr;
    j["status"] = "divergent";
  } else {
    j["tol"] = tol;
    j["pass"] = std::abs(report.sum - target) <= tol;
  }
  return j;
}

Json certification_json(const Certification& cert) {
  Json j = with_schema();
  j["kind"] = to_string(cert.kind);
  j["s"] = cert.s ? Json(*cert.s) : Json(nullptr);
  j["checked"] = cert.checked;
  j["equal"] = cert.equal;
  j["certified"] = cert.certified();
  if (cert.first_mismatch) {
    j["first_mismatch"] = *cert.first_mismatch;
    j["closed_value"] = cert.closed_value;
    j["solver_value"] = cert.solver_value;
  }
  return j;
}

std::string table_tsv(const CoeffTable& table) {
  std::ostringstream out;
  for (std::uint64_t n = 1; n <= table.limit(); ++n) out << n << '\t' << table[n].to_string() << '\n';
  return out.str();
}

std::string table_json_lines(const CoeffTable& table) {
  std::ostringstream out;
  for (std::uint64_t n = 1; n <= table.limit(); ++n) {
    Json j = with_schema();
    j["kind"] = to_string(table.kind());
    j["s"] = table.s() ? Json(*table.s()) : Json(nullptr);
    j["n"] = n;
    j["value"] = table[n].to_string();
    out << dump_line(j) << '\n';
  }
  return out.str();
}

std::string dump_line(const Json& j) { return j.dump(); }

}  // namespace prodforge
