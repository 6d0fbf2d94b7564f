#include <doctest.h>

#include <limits>

#include "prodforge/error.hpp"
#include "prodforge/json_io.hpp"

using namespace prodforge;

namespace {

const SpfTable& sieve() {
  static const SpfTable table(1000);
  return table;
}

}  // namespace

TEST_SUITE("json") {

TEST_CASE("series round trip") {
  const SeriesSpec s = parse_series_json(R"({"name":"p","parity":"odd","coefficients":[
      {"degree":1,"num":1,"den":3},{"degree":3,"num":"-2","den":"5"}]})");
  CHECK(s.parity() == Parity::OddOnly);
  CHECK(s.coefficient(3) == Rational(-2, 5));
  const SeriesSpec back = parse_series_json(series_json(s).dump());
  CHECK(back.coefficient(1) == Rational(1, 3));
  CHECK(back.parity() == Parity::OddOnly);
}

TEST_CASE("series parse errors") {
  auto code = [](const std::string& text) {
    try {
      (void)parse_series_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Unsupported;
  };
  CHECK(code("{") == ErrorCode::Parse);
  CHECK(code(R"({"name":"p","parity":"weird","coefficients":[]})") == ErrorCode::Parse);
  CHECK(code(R"({"name":"p","parity":"all","coefficients":[{"degree":1,"num":"x","den":1}]})") == ErrorCode::Parse);
  CHECK(code(R"({"name":"p","parity":"all","coefficients":[{"degree":1,"num":1,"den":0}]})") ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("tables render exact strings") {
  const CoeffTable a = closed_table(CoeffKind::ALog, 6, std::nullopt, sieve());
  CHECK(table_tsv(a) == "1\t-1\n2\t1/2\n3\t1/3\n4\t0\n5\t1/5\n6\t-1/6\n");
  const std::string lines = table_json_lines(a);
  CHECK(lines.find(R"("n":6,"value":"-1/6")") != std::string::npos);
  CHECK(lines.find(R"("schema":"prodforge/1")") != std::string::npos);
}

TEST_CASE("reports") {
  EvalReport r;
  r.value = 1.5;
  r.log_value = 0.4054651081081644;
  r.K_used = 3;
  r.tail_bound = std::numeric_limits<double>::infinity();
  attach_reference(r, 1.5);
  const std::string line = dump_line(report_json(r));
  CHECK(line == dump_line(report_json(r)));
  CHECK(line.find(R"("tail_bound":"inf")") != std::string::npos);
  CHECK(line.find(R"("log_value":0.4054651081081644)") != std::string::npos);
  CHECK(line.find('\n') == std::string::npos);
}

}  // TEST_SUITE
