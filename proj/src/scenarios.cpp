#include "grings/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <thread>
#include <tuple>

#include "grings/decompose.hpp"
#include "grings/expr.hpp"
#include "grings/group.hpp"
#include "grings/group_ring.hpp"
#include "grings/rings.hpp"

namespace grings {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "PAPER";
    case Provenance::Trivial: return "TRIVIAL";
    case Provenance::Derived: return "DERIVED";
  }
  return "?";
}

bool Report::pass() const {
  return error.empty() && !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void Report::expect(const std::string& name, const PropertyVerdict& v, Status expected,
                    Provenance p) {
  CheckResult c;
  c.name = name;
  c.expected = to_string(expected);
  c.actual = to_string(v.status);
  c.provenance = p;
  c.certified = v.certified;
  c.pass = v.certified && v.status == expected;
  // A Fails verdict only counts when its witness replays.
  if (c.pass && v.status == Status::Fails && !v.witness) c.pass = false;
  checks.push_back(std::move(c));
  verdicts.push_back(to_json(v));
  work += v.work;
}

void Report::expect_true(const std::string& name, bool actual, Provenance p) {
  expect_eq(name, "true", actual ? "true" : "false", p);
}

void Report::expect_eq(const std::string& name, const std::string& expected,
                       const std::string& actual, Provenance p) {
  CheckResult c;
  c.name = name;
  c.expected = expected;
  c.actual = actual;
  c.provenance = p;
  c.pass = expected == actual;
  checks.push_back(std::move(c));
}

nlohmann::json to_json(const Report& r, bool timing) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"provenance", to_string(c.provenance)},
                      {"certified", c.certified},
                      {"pass", c.pass}});
  nlohmann::json j{{"id", r.id},
                   {"description", r.description},
                   {"construction", r.construction},
                   {"tags", r.tags},
                   {"pass", r.pass()},
                   {"checks", checks},
                   {"verdicts", r.verdicts},
                   {"work", r.work}};
  if (!r.error.empty()) j["error"] = r.error;
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

const std::vector<std::string>& group_ring_corpus() {
  static const std::vector<std::string> corpus{
      "GF(2)[Q8]", "Z/3[Q8]",   "Z/4[Q8]",   "Z/5[Q8]",  "Z/6[Q8]",     "GF(4)[Q8]",
      "GF(3)[Q8]", "GF(2)[D3]", "GF(2)[D4]", "GF(2)[C3]", "Z/4[C2]", "GF(2)[Q8xC2]"};
  return corpus;
}

const std::vector<std::string>& audit_corpus() {
  static const std::vector<std::string> corpus = [] {
    std::vector<std::string> c;
    for (int n = 2; n <= 12; ++n) c.push_back("Z/" + std::to_string(n));
    for (const char* s : {"GF(2)", "GF(3)", "GF(4)", "M2(GF(2))", "GF(2)[C3]", "GF(2)[Q8]",
                          "Z/4[C2]", "GF(2)(+)Z/3", "GF(2)[Q8](+)Z/3", "M2(GF(2))(+)GF(3)",
                          "Z/4[C2](+)GF(4)", "GF(2)[C3](+)Z/4"})
      c.push_back(s);
    return c;
  }();
  return corpus;
}

namespace {

constexpr auto kPaper = Provenance::Paper;
constexpr auto kTrivial = Provenance::Trivial;
constexpr auto kDerived = Provenance::Derived;

std::string join(const std::vector<Elem>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

// Fails verdicts must also replay through the raw definition.
void expect_replay(Report& rep, const FiniteRing& r, const PropertyVerdict& v,
                   const std::string& name) {
  if (v.status == Status::Fails) rep.expect_true(name + " witness replays", revalidate(r, v), kTrivial);
}

void run_f2q8(Report& rep, const Budget& b) {
  auto r = parse_ring("GF(2)[Q8]");
  auto rev = check_reversible(*r, b);
  rep.expect("reversible", rev, Status::Holds, kPaper);
  auto sym = check_symmetric(*r, b);
  rep.expect("symmetric", sym, Status::Fails, kPaper);
  expect_replay(rep, *r, sym, "symmetric");
  rep.expect("si", check_si(*r, b), Status::Holds, kPaper);
  rep.expect("2primal", check_two_primal(*r, b), Status::Holds, kPaper);
}

Scenario znq8(std::uint64_t n) {
  std::string ring = "Z/" + std::to_string(n) + "[Q8]";
  Scenario s;
  s.id = "ac02-znq8-n" + std::to_string(n);
  s.description = "Z/n Q8 is reversible exactly for n = 2 (n = " + std::to_string(n) + ")";
  s.construction = ring;
  s.tags = {"znq8"};
  s.run = [ring, n](Report& rep, const Budget& b) {
    auto r = parse_ring(ring);
    auto v = check_reversible(*r, b);
    rep.expect("reversible", v, n == 2 ? Status::Holds : Status::Fails, kPaper);
    expect_replay(rep, *r, v, "reversible");
  };
  return s;
}

Scenario hamiltonian_ring(const std::string& ring) {
  Scenario s;
  s.id = "ac03-hamiltonian-" + ring.substr(ring.find('[') + 1, 2);
  for (auto& ch : s.id) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  s.description = "group ring over a non-Hamiltonian group is not reversible";
  s.construction = ring;
  s.tags = {"hamiltonian"};
  s.run = [ring](Report& rep, const Budget& b) {
    auto r = parse_ring(ring);
    auto v = check_reversible(*r, b);
    rep.expect("reversible", v, Status::Fails, kPaper);
    expect_replay(rep, *r, v, "reversible");
  };
  return s;
}

void run_hamiltonian_groups(Report& rep, const Budget&) {
  for (auto [g, expected, prov] :
       {std::tuple{"Q8", true, kTrivial}, std::tuple{"Q8xC3", true, kTrivial},
        std::tuple{"Q8xC2", true, kTrivial}, std::tuple{"D3", false, kTrivial},
        std::tuple{"D4", false, kTrivial}, std::tuple{"C6", false, kTrivial}})
    rep.expect_eq(std::string("is_hamiltonian(") + g + ")", expected ? "true" : "false",
                  is_hamiltonian(*parse_group(g)) ? "true" : "false", prov);
}

// Witness of right-duo failure (a, x) mapped through the involution.
PropertyVerdict mirrored(const GroupRing& r, const PropertyVerdict& right) {
  PropertyVerdict v = right;
  v.property = Property::DuoLeft;
  Witness w = *right.witness;
  w.kind = "left";
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    w.elements[i] = r.involution(w.elements[i]);
    w.rendered[i] = r.format(w.elements[i]);
  }
  v.witness = w;
  return v;
}

void run_duo_sides(Report& rep, const Budget& b) {
  for (const auto& e : group_ring_corpus()) {
    auto r = parse_ring(e);
    auto left = check_duo(*r, Side::Left, b);
    auto right = check_duo(*r, Side::Right, b);
    if (!left.certified || !right.certified) {
      rep.expect_eq(e + " duo sides certified", "true", "false", kTrivial);
      continue;
    }
    rep.expect_eq(e + " duo-left = duo-right", to_string(right.status), to_string(left.status),
                  kPaper);
    rep.verdicts.push_back(to_json(left));
    rep.verdicts.push_back(to_json(right));
    rep.work += left.work + right.work;
    if (right.status == Status::Fails) {
      const auto& gr = dynamic_cast<const GroupRing&>(*r);
      rep.expect_true(e + " involution maps right witness to left witness",
                      revalidate(*r, mirrored(gr, right)), kPaper);
    }
  }
}

void run_reversible_si(Report& rep, const Budget& b) {
  for (const auto& e : group_ring_corpus()) {
    auto r = parse_ring(e);
    auto rev = check_reversible(*r, b);
    auto si = check_si(*r, b);
    if (!rev.certified || !si.certified) {
      rep.expect_eq(e + " reversible/si certified", "true", "false", kTrivial);
      continue;
    }
    rep.expect_eq(e + " reversible = si", to_string(rev.status), to_string(si.status), kPaper);
    rep.verdicts.push_back(to_json(rev));
    rep.verdicts.push_back(to_json(si));
    rep.work += rev.work + si.work;
  }
}

void run_audit(Report& rep, const Budget& b) {
  std::vector<RingPtr> corpus;
  for (const auto& e : audit_corpus()) corpus.push_back(parse_ring(e));
  auto audit = implication_audit(corpus, b);
  rep.expect_eq("violated edges", "0", std::to_string(audit.violations.size()), kPaper);
  rep.expect_eq("edges not evaluated", "0", std::to_string(audit.edges_not_evaluated), kDerived);
  for (const auto& row : audit.rows) {
    for (const auto& v : row.verdicts) {
      rep.work += v.work;
      if (v.status == Status::Fails && !revalidate(*corpus[&row - audit.rows.data()], v))
        rep.expect_true(row.ring + " " + to_string(v.property) + " witness replays", false,
                        kTrivial);
    }
  }
  // The pattern of the quaternion algebra over GF(2).
  for (const auto& row : audit.rows) {
    if (row.ring != "GF(2)[Q8]") continue;
    for (auto [p, s] : {std::pair{Property::Reversible, Status::Holds},
                        std::pair{Property::SI, Status::Holds},
                        std::pair{Property::TwoPrimal, Status::Holds},
                        std::pair{Property::Symmetric, Status::Fails}})
      rep.expect_eq("GF(2)[Q8] " + to_string(p), to_string(s), to_string(row[p].status), kPaper);
  }
}

void run_example1(Report& rep, const Budget& b) {
  const std::vector<Property> all{Property::Reduced,  Property::Reversible, Property::Symmetric,
                                  Property::SI,       Property::DuoLeft,    Property::DuoRight,
                                  Property::Duo,      Property::TwoPrimal};
  for (const auto& e : audit_corpus()) {
    auto r = parse_ring(e);
    if (!is_division_ring(*r)) continue;
    for (Property p : all) rep.expect(e + " " + to_string(p), check_property(*r, p, b), Status::Holds, kPaper);
  }
  auto m = parse_ring("M2(GF(2))");
  for (Property p : {Property::DuoLeft, Property::DuoRight, Property::Reversible,
                     Property::Symmetric, Property::SI}) {
    auto v = check_property(*m, p, b);
    rep.expect("M2(GF(2)) " + to_string(p), v, Status::Fails, kPaper);
    expect_replay(rep, *m, v, "M2(GF(2)) " + to_string(p));
  }
  // Matrices with zero second row.
  ElementList first_row;
  for (Elem a = 0; a < m->size(); ++a) {
    auto text = m->format(a);
    if (text.substr(text.find("],[")) == "],[0,0]]") first_row.push_back(a);
  }
  rep.expect_eq("first-row subset size", "4", std::to_string(first_row.size()), kTrivial);
  rep.expect_true("first-row subset is a right ideal", is_ideal(*m, first_row, Side::Right), kPaper);
  rep.expect_eq("first-row subset is a left ideal", "false",
                is_ideal(*m, first_row, Side::Left) ? "true" : "false", kPaper);
}

void run_semisimple_gf3q8(Report& rep, const Budget& b) {
  auto rep6 = verify_semisimple_equivalences(parse_ring("GF(3)"), parse_group("Q8"), b);
  rep.expect_true("is_semisimple(GF(3)[Q8])", is_semisimple(*parse_ring("GF(3)[Q8]")), kPaper);
  rep.expect_true("order of Q8 is a unit in GF(3)", rep6.hypothesis(), kTrivial);
  for (const auto& v : rep6.verdicts) rep.expect(to_string(v.property), v, Status::Fails, kDerived);
  rep.expect_true("equivalence consistent", rep6.consistent, kPaper);
  rep.expect_eq("primitive central idempotents", "5",
                std::to_string(rep6.decomposition.idempotents.size()), kDerived);
  auto sizes = rep6.decomposition.factor_sizes();
  std::sort(sizes.begin(), sizes.end());
  rep.expect_eq("factor sizes", "3,3,3,3,81", join(sizes), kDerived);
  bool big_is_division = false;
  for (std::size_t i = 0; i < rep6.decomposition.factors.size(); ++i)
    if (rep6.decomposition.factors[i]->size() == 81)
      big_is_division = rep6.decomposition.kinds[i] == FactorKind::DivisionRing;
  rep.expect_eq("size-81 factor is a division ring", "false", big_is_division ? "true" : "false",
                kDerived);
  rep.expect_true("decomposition checks", rep6.decomposition.checks.all(), kTrivial);
}

void run_semisimple_gf2c3(Report& rep, const Budget& b) {
  auto rep6 = verify_semisimple_equivalences(parse_ring("GF(2)"), parse_group("C3"), b);
  rep.expect_true("hypothesis", rep6.hypothesis(), kTrivial);
  for (const auto& v : rep6.verdicts) rep.expect(to_string(v.property), v, Status::Holds, kDerived);
  auto sizes = rep6.decomposition.factor_sizes();
  std::sort(sizes.begin(), sizes.end());
  rep.expect_eq("factor sizes", "2,4", join(sizes), kDerived);
  rep.expect_true("all factors are fields", rep6.all_division, kDerived);
  rep.expect_true("equivalence consistent", rep6.consistent, kPaper);
  rep.expect_true("decomposition checks", rep6.decomposition.checks.all(), kTrivial);
}

void run_semisimple_gf2q8(Report& rep, const Budget& b) {
  auto rep6 = verify_semisimple_equivalences(parse_ring("GF(2)"), parse_group("Q8"), b);
  rep.expect_eq("hypothesis", "false", rep6.hypothesis() ? "true" : "false", kTrivial);
  rep.expect_eq("equivalence asserted", "false", rep6.asserted ? "true" : "false", kTrivial);
}

void run_direct_sum(Report& rep, const Budget& b) {
  auto lemma = [&](const std::vector<std::string>& exprs, const std::vector<Status>& expected,
                   Provenance prov) {
    std::vector<RingPtr> parts;
    std::string name;
    for (const auto& e : exprs) {
      parts.push_back(parse_ring(e));
      name += (name.empty() ? "" : " (+) ") + e;
    }
    auto r = verify_direct_sum_lemma(parts, b);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      const auto& row = r.rows[i];
      rep.expect_eq(name + " " + to_string(row.property), to_string(expected[i]),
                    row.certified ? to_string(row.sum) : "Unknown", prov);
      rep.expect_true(name + " " + to_string(row.property) + " matches the parts", row.consistent,
                      kPaper);
    }
  };
  // Rows follow semisimple_properties(): duo, symmetric, reversible, si.
  lemma({"GF(2)[Q8]", "Z/3"}, {Status::Holds, Status::Fails, Status::Holds, Status::Holds}, kPaper);
  lemma({"M2(GF(2))", "GF(3)"}, {Status::Fails, Status::Fails, Status::Fails, Status::Fails},
        kDerived);
  lemma({"GF(2)"}, {Status::Holds, Status::Holds, Status::Holds, Status::Holds}, kTrivial);
}

void run_radical(Report& rep, const Budget&) {
  auto r = parse_ring("GF(2)[Q8]");
  auto j = jacobson_radical(*r);
  rep.expect_eq("|J(GF(2)[Q8])|", "128", std::to_string(j.carrier.size()), kDerived);
  bool nil = std::all_of(j.carrier.begin(), j.carrier.end(),
                         [&](Elem a) { return is_nilpotent(*r, a); });
  rep.expect_true("radical is nil", nil, kDerived);
  rep.expect_true("radical is an ideal", is_ideal(*r, j.carrier, Side::TwoSided), kTrivial);
  rep.expect_eq("is_semisimple(GF(2)[Q8])", "false", is_semisimple(*r) ? "true" : "false", kTrivial);
  rep.expect_true("is_semisimple(GF(3)[Q8])", is_semisimple(*parse_ring("GF(3)[Q8]")), kTrivial);
}

void run_commutative_fields(Report& rep, const Budget&) {
  for (const auto& e : audit_corpus()) {
    auto r = parse_ring(e);
    if (!r->is_commutative() || !is_semisimple(*r)) continue;
    rep.expect_true(e + " splits into fields", commutative_factors_are_fields(r), kPaper);
  }
}

void run_base_splitting(Report& rep, const Budget& b) {
  auto s = verify_base_splitting(parse_ring("Z/6"), parse_group("Q8"), b);
  rep.expect_eq("factor group rings", "2", std::to_string(s.factor_rings.size()), kTrivial);
  for (const auto& row : s.rows) {
    rep.expect_true(to_string(row.property) + " matches the factors", row.consistent, kPaper);
    rep.expect_eq(to_string(row.property), "Fails", to_string(row.sum), kPaper);
  }
}

Scenario make(std::string id, std::string description, std::string construction,
              std::vector<std::string> tags, std::function<void(Report&, const Budget&)> run) {
  return Scenario{std::move(id), std::move(description), std::move(construction), std::move(tags),
                  std::move(run)};
}

std::vector<Scenario> build_table() {
  std::vector<Scenario> t;
  t.push_back(make("ac01-f2q8", "GF(2)Q8 is reversible but not symmetric", "GF(2)[Q8]",
                   {"ac1"}, run_f2q8));
  for (std::uint64_t n = 2; n <= 6; ++n) t.push_back(znq8(n));
  t.push_back(hamiltonian_ring("GF(2)[D3]"));
  t.push_back(hamiltonian_ring("GF(2)[D4]"));
  t.push_back(make("ac03-hamiltonian-groups", "Hamiltonian group recognition",
                   "Q8, Q8xC3, Q8xC2, D3, D4, C6", {"hamiltonian"}, run_hamiltonian_groups));
  t.push_back(make("ac04-duo-sides", "left duo agrees with right duo on group rings",
                   "group ring corpus", {"ac4"}, run_duo_sides));
  t.push_back(make("ac05-reversible-si", "reversible agrees with SI on group rings", "group ring corpus",
                   {"ac5"}, run_reversible_si));
  t.push_back(make("ac06-audit", "implication diagram holds on the corpus", "audit corpus",
                   {"ac6"}, run_audit));
  t.push_back(make("ac07-example1", "fields satisfy everything, M2(GF(2)) fails",
                   "M2(GF(2)) and the corpus fields", {"ac7"}, run_example1));
  t.push_back(make("ac08-semisimple-gf3q8", "semisimple equivalences on GF(3)Q8", "GF(3)[Q8]",
                   {"ac8", "semisimple"}, run_semisimple_gf3q8));
  t.push_back(make("ac08-semisimple-gf2c3", "semisimple equivalences on GF(2)C3", "GF(2)[C3]",
                   {"ac8", "semisimple"}, run_semisimple_gf2c3));
  t.push_back(make("ac08-semisimple-gf2q8", "no assertion when |G| is not a unit", "GF(2)[Q8]",
                   {"ac8", "semisimple"}, run_semisimple_gf2q8));
  t.push_back(make("ac09-direct-sum", "properties of direct sums follow the summands",
                   "GF(2)[Q8](+)Z/3, M2(GF(2))(+)GF(3), GF(2)", {"ac9"}, run_direct_sum));
  t.push_back(make("ac10-radical", "Jacobson radical of GF(2)Q8", "GF(2)[Q8], GF(3)[Q8]",
                   {"ac10"}, run_radical));
  t.push_back(make("x01-commutative-fields", "semisimple commutative rings split into fields",
                   "commutative semisimple corpus rings", {"semisimple"}, run_commutative_fields));
  t.push_back(make("x02-base-splitting", "Z/6 Q8 follows GF(2) Q8 and GF(3) Q8", "Z/6[Q8]",
                   {"semisimple"}, run_base_splitting));
  std::sort(t.begin(), t.end(), [](const Scenario& a, const Scenario& b) { return a.id < b.id; });
  return t;
}

}  // namespace

const std::vector<Scenario>& builtin_scenarios() {
  static const std::vector<Scenario> table = build_table();
  return table;
}

std::vector<const Scenario*> select_scenarios(std::string_view only) {
  std::vector<const Scenario*> out;
  for (const auto& s : builtin_scenarios())
    if (only.empty() || s.id == only ||
        std::find(s.tags.begin(), s.tags.end(), only) != s.tags.end())
      out.push_back(&s);
  return out;
}

std::vector<Report> run_scenarios(const std::vector<const Scenario*>& scenarios,
                                  const Budget& budget, unsigned workers) {
  std::vector<Report> reports(scenarios.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < scenarios.size();) {
      const Scenario& s = *scenarios[i];
      Report& rep = reports[i];
      rep.id = s.id;
      rep.description = s.description;
      rep.construction = s.construction;
      rep.tags = s.tags;
      auto t0 = std::chrono::steady_clock::now();
      try {
        s.run(rep, budget);
      } catch (const std::exception& e) {
        rep.error = e.what();
      }
      rep.wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(scenarios.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(reports.begin(), reports.end(),
            [](const Report& a, const Report& b) { return a.id < b.id; });
  return reports;
}

}  // namespace grings
