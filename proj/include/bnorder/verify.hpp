#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bnorder/bipartition.hpp"
#include "bnorder/symbol.hpp"

namespace bnorder {

inline constexpr std::size_t kWitnessCap = 10;

struct CheckReport {
  std::string check_name;
  std::optional<WeightParams> params;  // empty for checks that take no parameters
  int n = 0;
  long long instances = 0;
  long long violations = 0;
  bool pass = true;
  std::vector<std::string> witnesses;  // at most kWitnessCap
  double elapsed_ms = 0.0;

  nlohmann::json to_json() const;
};

class CheckError : public std::runtime_error {
 public:
  enum class Kind { unknown_check, beyond_bound, wrong_regime };
  CheckError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Collects violations for one run; keeps the first kWitnessCap witnesses.
class CheckContext {
 public:
  void count(long long k = 1) { instances_ += k; }
  void fail(std::string witness);
  void note(std::string witness);  // recorded without failing
  /// count() and, when !ok, fail(witness()).
  template <class F>
  void expect(bool ok, F&& witness) {
    count();
    if (!ok) fail(witness());
  }

  long long instances() const { return instances_; }
  long long violations() const { return violations_; }
  std::vector<std::string>& witnesses() { return witnesses_; }

 private:
  long long instances_ = 0;
  long long violations_ = 0;
  std::vector<std::string> witnesses_;
};

struct CheckPoint {
  WeightParams params;
  int n;
};

struct CheckSpec {
  std::string name;
  std::string statement;
  int max_n;
  bool uses_params;
  std::string regime;  // human-readable applicability
  std::function<bool(const WeightParams&, int)> applies;
  /// Points of the default suite for a bound <= max_n.
  std::function<std::vector<CheckPoint>(int)> default_points;
  std::function<void(const WeightParams&, int, CheckContext&)> body;
};

const std::vector<CheckSpec>& check_registry();
const CheckSpec* find_check(const std::string& name);

/// Throws CheckError for an unknown name, n beyond the check's bound, or
/// parameters outside its regime.
CheckReport run_check(const std::string& name, const WeightParams& params, int n);

/// Every default point of the named checks (all when `names` is empty),
/// with each check's bound lowered to `bound` if given.
std::vector<CheckReport> run_suite(const std::vector<std::string>& names = {},
                                   std::optional<int> bound = std::nullopt);

/// Pairs with preceq_ab true and preceq_L false. Needs a > 0.
std::vector<std::pair<Bipartition, Bipartition>> counterexample_search(const WeightParams& params,
                                                                       int n);

/// One JSON object per line.
std::string reports_to_jsonl(const std::vector<CheckReport>& reports);
/// Fixed-width table, one row per report, plus a totals line.
std::string summary_table(const std::vector<CheckReport>& reports);

}  // namespace bnorder
