#include <doctest.h>

#include <optional>
#include <tuple>

#include "grings/expr.hpp"
#include "grings/group_ring.hpp"
#include "grings/properties.hpp"
#include "grings/rings.hpp"
#include "oracle.hpp"

using namespace grings;

namespace {

const std::vector<Property> kAll{Property::Reduced, Property::Reversible, Property::Symmetric,
                                 Property::SI,      Property::DuoLeft,    Property::DuoRight,
                                 Property::Duo,     Property::TwoPrimal};

std::optional<std::pair<Elem, Elem>> oracle_reversible(const oracle::Q8Algebra& q, Elem limit_a) {
  for (Elem a = 1; a < limit_a; ++a)
    for (Elem b = 1; b < q.size(); ++b)
      if (q.mul(a, b) == 0 && q.mul(b, a) != 0) return std::make_pair(a, b);
  return std::nullopt;
}

}  // namespace

TEST_CASE("property names") {
  for (Property p : kAll) CHECK(property_from_string(to_string(p)) == p);
  CHECK(to_string(Property::TwoPrimal) == "2primal");
  CHECK(to_string(Property::DuoLeft) == "duo-left");
  CHECK_FALSE(property_from_string("commutative"));
}

TEST_CASE("reduced") {
  CHECK(check_reduced(*parse_ring("GF(4)")).status == Status::Holds);
  auto z4 = check_reduced(*make_zmod(4));
  CHECK(z4.status == Status::Fails);
  CHECK(z4.witness->elements == ElementList{2});

  // First nonzero nilpotent of GF(2)Q8 in index order.
  oracle::Q8Algebra q(2);
  Elem first = 0;
  for (Elem a = 1; a < q.size() && !first; ++a)
    if (q.nilpotent(a)) first = a;
  auto r = parse_ring("GF(2)[Q8]");
  auto v = check_reduced(*r);
  REQUIRE(v.status == Status::Fails);
  CHECK(v.witness->elements[0] == first);
  CHECK(v.witness->rendered[0] == "1 + x");
  // 1 + x^2 is nilpotent as well.
  CHECK(is_nilpotent(*r, r->parse("1 + x^2")));
}

TEST_CASE("GF(2)Q8 is reversible but not symmetric") {
  oracle::Q8Algebra q(2);
  CHECK_FALSE(oracle_reversible(q, q.size()));

  auto r = parse_ring("GF(2)[Q8]");
  auto rev = check_reversible(*r);
  CHECK(rev.status == Status::Holds);
  CHECK(rev.certified);
  CHECK(rev.work == 1464);

  // Lexicographically first (a, b, c) with abc = 0 and acb != 0.
  std::optional<std::tuple<Elem, Elem, Elem>> want;
  for (Elem a = 1; a < q.size() && !want; ++a)
    for (Elem b = 1; b < q.size() && !want; ++b) {
      Elem ab = q.mul(a, b);
      for (Elem c = 1; c < q.size(); ++c)
        if (q.mul(ab, c) == 0 && q.mul(q.mul(a, c), b) != 0) {
          want = std::tuple{a, b, c};
          break;
        }
    }
  REQUIRE(want);
  auto sym = check_symmetric(*r);
  REQUIRE(sym.status == Status::Fails);
  auto [a, b, c] = *want;
  CHECK(sym.witness->elements == ElementList{a, b, c});
  CHECK(sym.witness->elements == ElementList{3, 17, 54});
  CHECK(sym.witness->rendered == std::vector<std::string>{"1 + x", "1 + y", "x + x^2 + y + x*y"});
  CHECK(sym.work == 3316);
  CHECK(revalidate(*r, sym));

  CHECK(check_si(*r).status == Status::Holds);
  CHECK(check_two_primal(*r).status == Status::Holds);
  CHECK(check_duo(*r, Side::Left).status == Status::Holds);
  CHECK(check_duo(*r, Side::Right).status == Status::Holds);
}

TEST_CASE("Z/n Q8 reversibility") {
  // n = 3 and n = 5: the oracle finds the first pair itself.
  for (std::uint64_t n : {3u, 5u}) {
    oracle::Q8Algebra q(n);
    auto want = oracle_reversible(q, q.size());
    REQUIRE(want);
    auto r = parse_group_ring("Z/" + std::to_string(n), "Q8");
    auto v = check_reversible(*r);
    REQUIRE(v.status == Status::Fails);
    CHECK(v.witness->elements == ElementList{want->first, want->second});
  }
  // Frozen witnesses; the oracle replays them.
  const std::vector<std::tuple<std::uint64_t, const char*, const char*>> frozen{
      {3, "1 + x + y", "2 + 2*x^2 + x^3 + y + x*y"},
      {4, "3 + x + x^2 + x^3 + 2*y", "2 + x + x^2 + y + x*y"},
      {5, "2 + x", "2*y + 4*x*y + 3*x^2*y + x^3*y"},
      {6, "1 + x + y", "4 + 4*x^2 + 2*x^3 + 2*y + 2*x*y"}};
  for (const auto& [n, a, b] : frozen) {
    CAPTURE(n);
    auto r = parse_group_ring("Z/" + std::to_string(n), "Q8");
    auto v = check_reversible(*r);
    REQUIRE(v.status == Status::Fails);
    CHECK(v.witness->rendered == std::vector<std::string>{a, b});
    CHECK(revalidate(*r, v));
    oracle::Q8Algebra q(n);
    Elem ea = r->parse(a), eb = r->parse(b);
    CHECK(q.mul(ea, eb) == 0);
    CHECK(q.mul(eb, ea) != 0);
  }
  CHECK(check_reversible(*parse_group_ring("Z/2", "Q8")).status == Status::Holds);
}

TEST_CASE("non-Hamiltonian groups give non-reversible group algebras") {
  for (const char* g : {"D3", "D4"}) {
    auto r = parse_group_ring("GF(2)", g);
    auto v = check_reversible(*r);
    REQUIRE(v.status == Status::Fails);
    CHECK(revalidate(*r, v));
  }
  auto d3 = parse_group_ring("GF(2)", "D3");
  auto v = check_reversible(*d3);
  CHECK(v.witness->rendered == std::vector<std::string>{"r + r*s", "1 + s"});
}

TEST_CASE("M2(GF(2)) fails everything") {
  auto m = parse_ring("M2(GF(2))");
  for (Property p : kAll) {
    auto v = check_property(*m, p);
    CHECK_MESSAGE(v.status == Status::Fails, to_string(p));
    CHECK(revalidate(*m, v));
  }
  auto right = check_duo(*m, Side::Right);
  CHECK(right.witness->rendered == std::vector<std::string>{"[[1,0],[0,0]]", "[[0,0],[1,0]]"});
  auto left = check_duo(*m, Side::Left);
  CHECK(left.witness->rendered == std::vector<std::string>{"[[1,0],[0,0]]", "[[0,1],[0,0]]"});
  auto reduced = check_reduced(*m);
  CHECK(reduced.witness->rendered[0] == "[[0,1],[0,0]]");
  auto primal = check_two_primal(*m);
  CHECK(primal.witness->kind == "sum");
}

TEST_CASE("2-primal") {
  CHECK(check_two_primal(*make_zmod(8)).status == Status::Holds);
  CHECK(check_two_primal(*parse_ring("Z/4[Q8]")).status == Status::Holds);
  auto big = check_two_primal(*parse_ring("Z/6[Q8]"));
  CHECK(big.status == Status::Unknown);
  CHECK_FALSE(big.certified);
}

TEST_CASE("commutative rings short-circuit") {
  auto r = parse_ring("Z/4[C2]");
  for (Property p : {Property::Reversible, Property::Symmetric, Property::SI, Property::Duo}) {
    auto v = check_property(*r, p);
    CHECK(v.status == Status::Holds);
    CHECK(v.work == 0);
  }
  auto red = check_reduced(*r);
  CHECK(red.status == Status::Fails);
  CHECK(red.witness->rendered[0] == "2");
}

TEST_CASE("direct sum with GF(2)Q8") {
  auto r = parse_ring("GF(2)[Q8](+)Z/3");
  CHECK(check_reversible(*r).status == Status::Holds);
  auto sym = check_symmetric(*r);
  CHECK(sym.status == Status::Fails);
  CHECK(revalidate(*r, sym));
  CHECK(check_si(*r).status == Status::Holds);
}

TEST_CASE("budgets") {
  auto r = parse_ring("GF(2)[Q8]");
  Budget tight;
  tight.max_pairs = 100;
  auto v = check_reversible(*r, tight);
  CHECK(v.status == Status::Unknown);
  CHECK_FALSE(v.certified);

  Budget rnd;
  rnd.mode = Mode::Random;
  rnd.seed = 42;
  rnd.max_pairs = 20000;
  for (Property p : {Property::Reversible, Property::SI, Property::DuoLeft})
    CHECK(check_property(*r, p, rnd).status == Status::Unknown);
  auto z3 = parse_ring("Z/3[Q8]");
  auto s = check_reversible(*z3, rnd);
  CHECK(s.status != Status::Holds);
  if (s.status == Status::Fails) CHECK(revalidate(*z3, s));
  auto j = to_json(s);
  CHECK(j["mode"] == "rand");
  CHECK(j["seed"] == 42);
}

TEST_CASE("verdict JSON") {
  auto r = parse_ring("Z/3[Q8]");
  auto j = to_json(check_reversible(*r));
  for (const char* k : {"ring", "property", "status", "certified", "work", "mode", "witness"})
    CHECK_MESSAGE(j.contains(k), k);
  CHECK_FALSE(j.contains("seed"));
  CHECK(j["status"] == "Fails");
  CHECK(j["witness"]["elements"][0]["literal"] == "1 + x + y");
  CHECK(j["witness"]["elements"][1]["role"] == "b");
  auto h = to_json(check_reversible(*parse_ring("GF(2)[Q8]")));
  CHECK_FALSE(h.contains("witness"));
}

TEST_CASE("witnesses replay on every corpus ring") {
  for (const char* e : {"Z/4", "Z/12", "GF(4)", "M2(GF(2))", "M2(Z/3)", "GF(2)[Q8]", "Z/3[Q8]",
                        "GF(2)[D3]", "GF(3)[D3]", "GF(2)[Q8](+)Z/3", "Z/4[C2](+)M2(GF(2))"}) {
    auto r = parse_ring(e);
    for (Property p : kAll) {
      auto v = check_property(*r, p);
      CAPTURE(e);
      CAPTURE(to_string(p));
      if (v.status == Status::Holds) CHECK(v.certified);
      if (v.status == Status::Fails) {
        REQUIRE(v.witness);
        CHECK(revalidate(*r, v));
      }
    }
  }
}

TEST_CASE("left and right agree on group rings; reversible agrees with SI") {
  for (const char* e : {"GF(2)[Q8]", "Z/3[Q8]", "Z/4[Q8]", "GF(3)[Q8]", "GF(2)[D3]", "GF(4)[Q8]",
                        "Z/4[D3]"}) {
    auto r = parse_ring(e);
    CAPTURE(e);
    CHECK(check_duo(*r, Side::Left).status == check_duo(*r, Side::Right).status);
    CHECK(check_reversible(*r).status == check_si(*r).status);
  }
}

TEST_CASE("implication audit") {
  std::vector<RingPtr> zn;
  for (int n = 2; n <= 12; ++n) zn.push_back(make_zmod(n));
  auto a = implication_audit(zn);
  CHECK(a.violations.empty());
  CHECK(a.edges_not_evaluated == 0);

  auto m = implication_audit({parse_ring("M2(GF(2))")});
  CHECK(m.violations.empty());

  auto q = implication_audit({parse_ring("GF(2)[Q8]")});
  CHECK(q.violations.empty());
  const auto& row = q.rows[0];
  CHECK(row[Property::Reversible].status == Status::Holds);
  CHECK(row[Property::SI].status == Status::Holds);
  CHECK(row[Property::TwoPrimal].status == Status::Holds);
  CHECK(row[Property::Symmetric].status == Status::Fails);
  CHECK(q.diagram().find("GF(2)[Q8]") != std::string::npos);
  CHECK(to_json(q)["violations"].empty());

  // Unknown verdicts mark edges as not evaluated.
  Budget tight;
  tight.max_pairs = 10;
  tight.max_triples = 10;
  auto u = implication_audit({parse_ring("GF(2)[Q8]")}, tight);
  CHECK(u.violations.empty());
  CHECK(u.edges_not_evaluated > 0);
}
