#pragma once

// Built-in scenario table: each scenario builds its rings, runs checks and
// compares the outcomes with tagged expectations.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grings/properties.hpp"

namespace grings {

/// Where an expected value comes from: a statement of the source text,
/// an immediate fact, or an independent computation frozen as an oracle.
enum class Provenance { Paper, Trivial, Derived };
std::string to_string(Provenance p);

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  Provenance provenance = Provenance::Derived;
  bool certified = true;
  bool pass = false;
};

struct Report {
  std::string id;
  std::string description;
  std::string construction;
  std::vector<std::string> tags;
  std::vector<CheckResult> checks;
  std::vector<nlohmann::json> verdicts;
  std::uint64_t work = 0;
  double wall_ms = 0;
  std::string error;  // set when the scenario threw

  bool pass() const;

  /// Status expectation: passes only on a certified matching verdict.
  void expect(const std::string& name, const PropertyVerdict& v, Status expected, Provenance p);
  void expect_true(const std::string& name, bool actual, Provenance p);
  void expect_eq(const std::string& name, const std::string& expected, const std::string& actual,
                 Provenance p);
};

/// Timing is left out when `timing` is false so that runs can be compared.
nlohmann::json to_json(const Report& r, bool timing = true);

struct Scenario {
  std::string id;
  std::string description;
  std::string construction;
  std::vector<std::string> tags;
  std::function<void(Report&, const Budget&)> run;
};

const std::vector<Scenario>& builtin_scenarios();

/// Scenarios whose id or one of whose tags equals `only`; all when empty.
std::vector<const Scenario*> select_scenarios(std::string_view only);

/// Runs on up to `workers` threads; reports come back ordered by id.
std::vector<Report> run_scenarios(const std::vector<const Scenario*>& scenarios,
                                  const Budget& budget, unsigned workers = 1);

/// Group rings used by the cross-checks between left/right duo and between
/// reversible and SI.
const std::vector<std::string>& group_ring_corpus();

/// Rings of the implication audit.
const std::vector<std::string>& audit_corpus();

}  // namespace grings
