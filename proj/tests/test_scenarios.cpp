#include <doctest.h>

#include <set>

#include "grings/expr.hpp"
#include "grings/scenarios.hpp"

using namespace grings;

TEST_CASE("scenario table") {
  const auto& all = builtin_scenarios();
  REQUIRE_FALSE(all.empty());
  std::set<std::string> ids;
  for (const auto& s : all) {
    CHECK(ids.insert(s.id).second);
    CHECK_FALSE(s.description.empty());
  }
  CHECK(select_scenarios("").size() == all.size());
  CHECK(select_scenarios("znq8").size() == 5);
  CHECK(select_scenarios("hamiltonian").size() == 3);
  CHECK(select_scenarios("ac01-f2q8").size() == 1);
  CHECK(select_scenarios("nope").empty());
}

TEST_CASE("corpus expressions round-trip") {
  for (const auto& e : group_ring_corpus()) {
    auto r = parse_ring(e);
    CHECK(parse_ring(r->label())->label() == r->label());
  }
  for (const auto& e : audit_corpus()) {
    auto r = parse_ring(e);
    CHECK(parse_ring(r->label())->label() == r->label());
  }
}

TEST_CASE("reports") {
  auto reps = run_scenarios(select_scenarios("hamiltonian"), Budget{}, 2);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].id < reps[1].id);
  for (const auto& r : reps) CHECK(r.pass());
  auto j = to_json(reps[0], false);
  CHECK_FALSE(j.contains("wall_ms"));
  CHECK(to_json(reps[0])["wall_ms"].is_number());
  for (const auto& c : j["checks"]) {
    std::string p = c["provenance"];
    CHECK((p == "PAPER" || p == "TRIVIAL" || p == "DERIVED"));
  }
}

TEST_CASE("an Unknown verdict fails an expectation") {
  Report r;
  PropertyVerdict v;
  v.status = Status::Unknown;
  r.expect("x", v, Status::Holds, Provenance::Paper);
  CHECK_FALSE(r.pass());
  Report empty;
  CHECK_FALSE(empty.pass());
}

TEST_CASE("a tight budget makes certified expectations fail") {
  Budget tight;
  tight.max_pairs = 50;
  auto reps = run_scenarios(select_scenarios("ac01-f2q8"), tight, 1);
  REQUIRE(reps.size() == 1);
  CHECK_FALSE(reps[0].pass());
}
