#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prodforge/arithmetic.hpp"
#include "prodforge/evaluator.hpp"
#include "prodforge/series.hpp"

namespace prodforge {

enum class Validity { Interior, BoundaryExperimental };
enum class ErratumStatus { AsPrinted, ErratumCorrected };

const char* to_string(Validity validity) noexcept;
const char* to_string(ErratumStatus status) noexcept;

struct IdentityEntry {
  std::string id;
  std::string anchor;
  std::string description;
  /// Parameter names accepted by check_identity (subset of x, theta, n, J, s, N).
  std::vector<std::string> params;
  Validity validity;
  ErratumStatus status;
};

/// Registry of product identities, ordered by id.
const std::vector<IdentityEntry>& list_identities();
/// Throws Error(UnknownIdentity).
const IdentityEntry& find_identity(const std::string& id);

struct IdentityParams {
  std::optional<double> x;
  std::optional<double> theta;
  std::optional<double> s;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> J;
  std::optional<std::uint64_t> N;
  /// Evaluate the uncorrected variant, kept to show where it breaks.
  bool as_printed = false;
};

struct CheckResult {
  std::string id;
  IdentityParams params;
  std::uint64_t K = 0;
  double tol = 0.0;
  EvalReport report;
  bool pass = false;
};

/// Builds the product, evaluates it and compares with the independent reference.
/// K = 0 picks the smallest K whose tail bound is <= 1e-12 (x-only identities).
/// Boundary-experimental identities throw Error(PolicyRefusal).
CheckResult check_identity(const std::string& id, const IdentityParams& params, std::uint64_t K, double tol,
                           const SpfTable& sieve);

// Series whose exponential is the identity's closed-form side.

/// log(x / sin x) in y = x^2: c_k = 2^{2k-1} |B_{2k}| / (k (2k)!), k = 1..L.
SeriesSpec x_over_sin_log_series(std::uint64_t L);
/// log(1 / cos x) in y = x^2: c_k = 2^{2k-1} (2^{2k} - 1) |B_{2k}| / (k (2k)!), k = 1..L.
SeriesSpec sec_log_series(std::uint64_t L);
/// Stirling correction in x = 1/n: d_j = B_{2j} / (2j (2j - 1)) at degree 2j - 1, j = 1..J.
SeriesSpec stirling_series(std::uint64_t J);

struct StirlingOptions {
  std::uint64_t max_terms = 8;
  double tol = 1e-10;
};

/// ((n-1)! / (sqrt(2 pi) n^{n-1/2} e^{-n}))^2 as an odd-ratio product at x = 1/n.
EvalReport stirling_ratio(std::uint64_t n, std::uint64_t J, std::uint64_t K, const SpfTable& sieve,
                          const StirlingOptions& options = {});
/// Exact-factorial reference for the squared ratio.
double stirling_reference(std::uint64_t n);

double zeta_reference(double s);

enum class PhiVariant { Phi, PhiTilde };

struct PhiResult {
  double value;
  double tail_bound;
};

/// sum_{j <= M} x^j / j^s, or the alternating variant.
PhiResult phi_reference(double x, double s, PhiVariant variant, std::uint64_t M);

/// Limit targets: 1/zeta(s) for A_S, 1/((1 - 2^{1-s}) zeta(s)) for B_S.
double partial_sum_target(PartialSumKind kind, double s);

struct AbelRow {
  double x;
  std::uint64_t K;
  double lhs;         // log-domain left side at x
  double target;      // interior right side at x
  double residual;    // |lhs - target|
  double boundary_value;
  double boundary_target;
};

/// Traces a boundary identity as x -> 1-. Rows are reported; nothing is asserted.
std::vector<AbelRow> abel_evaluate(const std::string& id, const std::vector<double>& xs,
                                   std::optional<double> theta, const SpfTable& sieve);

struct ProfileCase {
  std::string id;
  IdentityParams params;
  std::uint64_t K;
  double tol;
};

/// Named parameter sets; "desk" holds two points per interior identity plus the boundary ids.
const std::vector<ProfileCase>& profile(const std::string& name);

}  // namespace prodforge
