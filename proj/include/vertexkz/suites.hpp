#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vertexkz/determinant_rep.hpp"
#include "vertexkz/model.hpp"
#include "vertexkz/oracle.hpp"
#include "vertexkz/serialize.hpp"

namespace vertexkz {

inline constexpr int kReportSchema = 1;

/// Suite names in run order.
const std::vector<std::string>& all_suites();

struct RunConfig {
  Rat eta = Rat(1, 3);
  /// Inhomogeneities for the largest L; smaller L use a prefix. Empty means
  /// mu_j = j + 1/5.
  std::vector<Rat> mu;
  int L_min = 1;
  int L_max = 3;
  std::uint64_t seed = 7;
  int points_per_test = 5;
  std::set<std::string> suites = {all_suites().begin(), all_suites().end()};
  std::string output_path;
  /// Negative-control hook: shifts the weight a(x) by this amount.
  std::optional<Rat> corrupt_weight_a;

  /// Throws std::invalid_argument unless 1 <= L_min <= L_max <= 8,
  /// points_per_test >= 1, mu is empty or has >= L_max entries, and every
  /// suite name is known.
  void validate() const;
  [[nodiscard]] ModelParams params_for(int L) const;
};

/// How `value` is compared with `expected`.
enum class Relation { Equal, NotEqual, LessThan, AtMost, Record };

/// One recorded check. Values are exact rationals (or integers) as strings;
/// `pass` is recomputable from value, relation and expected.
struct CheckEntry {
  std::string id;
  Json inputs;
  std::string value;
  Relation relation = Relation::Equal;
  std::string expected;
  bool pass = false;
};

CheckEntry make_check(std::string id, Json inputs, const Rat& value, Relation relation,
                      const Rat& expected);
/// Re-derives the pass flag from the recorded strings.
bool audit(const CheckEntry& entry);

struct SuiteResult {
  std::string name;
  std::vector<CheckEntry> checks;
  std::vector<Json> excluded;  // points skipped as degenerate, with reasons
  double millis = 0;
  [[nodiscard]] bool pass() const;
};

struct Report {
  RunConfig config;
  std::optional<BoundaryOrientation> orientation;
  std::map<int, Rat> calibration;  // r_L
  std::vector<LeadingCoefficient> leading;
  std::vector<SuiteResult> suites;
  std::vector<std::string> errors;  // hard failures

  [[nodiscard]] bool all_pass() const;
  /// Keys are sorted; with include_timings = false the output is a pure
  /// function of the config.
  [[nodiscard]] Json to_json(bool include_timings = true) const;
};

Json config_json(const RunConfig& config);

/// Runs the selected suites for every L in [L_min, L_max]. Hard failures are
/// recorded in Report::errors and stop the run; the partial report is kept.
Report run_suites(const RunConfig& config);

/// {n, point, residual} for n in `ns` at `points` seeded points.
Json functional_batch(const ModelParams& params, const std::vector<int>& ns, int points,
                      std::uint64_t seed, BoundaryOrientation orientation);

/// {i, n, point, residual} for every (i, n) at `points` seeded points.
Json kz_batch(const ModelParams& params, int points, std::uint64_t seed,
              BoundaryOrientation orientation);

/// Writes the partition-function polynomial via "oracle" or "det" (i = 1).
/// Throws BudgetExceeded above kMaxInterpolationL.
MultiPoly reconstruct_polynomial(const ModelParams& params, const std::string& via,
                                 BoundaryOrientation orientation);
void emit_polynomial(const ModelParams& params, const std::string& via,
                     BoundaryOrientation orientation, const std::string& path);

}  // namespace vertexkz
