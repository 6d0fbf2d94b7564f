#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "prodforge/catalog.hpp"
#include "prodforge/coefficients.hpp"
#include "prodforge/evaluator.hpp"
#include "prodforge/series.hpp"

namespace prodforge {

inline constexpr const char* kSchema = "prodforge/1";

using Json = nlohmann::ordered_json;

/// {"name": str, "parity": "all"|"odd"|"even-squared", "description"?: str,
///  "coefficients": [{"degree": int, "num": str, "den": str}, ...]}
SeriesSpec parse_series_json(const std::string& text);
SeriesSpec load_series_file(const std::string& path);
Json series_json(const SeriesSpec& series);

Json product_json(const ProductForm& form);
std::string product_tsv(const ProductForm& form);

/// Non-finite reals are written as the strings "inf", "-inf" or "nan".
Json real_json(double value);
Json report_json(const EvalReport& report);
Json check_json(const CheckResult& result);
Json params_json(const IdentityParams& params);
Json abel_row_json(const std::string& id, const AbelRow& row);
Json partial_sum_json(const PartialSumReport& report, double target, double tol);
Json certification_json(const Certification& cert);

std::string table_tsv(const CoeffTable& table);
/// One line per index.
std::string table_json_lines(const CoeffTable& table);

/// Single-line dump.
std::string dump_line(const Json& j);

}  // namespace prodforge
