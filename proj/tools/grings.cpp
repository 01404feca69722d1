// grings: run ring property checks, the built-in scenario suite, the
// implication audit and decompositions from the command line.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grings/decompose.hpp"
#include "grings/errors.hpp"
#include "grings/expr.hpp"
#include "grings/group.hpp"
#include "grings/scenarios.hpp"

using namespace grings;

namespace {

struct Options {
  std::string ring;
  std::string group;
  std::string property;
  std::uint64_t pairs = Budget{}.max_pairs;
  std::uint64_t triples = Budget{}.max_triples;
  std::string mode = "det";
  std::uint64_t seed = 0;
  std::string json;
  std::string only;
  unsigned workers = 1;
  bool verbose = false;
};

Budget budget_of(const Options& o) {
  Budget b;
  b.max_pairs = o.pairs;
  b.max_triples = o.triples;
  b.mode = o.mode == "rand" ? Mode::Random : Mode::Deterministic;
  b.seed = o.seed;
  return b;
}

// A parse error together with the text it points into.
struct Located {
  std::string text;
  ParseError error;
};

template <class F>
auto located(const std::string& text, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw Located{text, e};
  }
}

RingPtr build_ring(const Options& o) {
  if (o.ring.empty()) throw std::invalid_argument("--ring is required");
  RingPtr r = located(o.ring, [&] { return parse_ring(o.ring); });
  if (o.group.empty()) return r;
  auto g = located(o.group, [&] { return parse_group(o.group); });
  return make_group_ring(r, g);
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void print_verdict(const PropertyVerdict& v) {
  std::cout << v.ring << "  " << to_string(v.property) << ": " << to_string(v.status)
            << (v.certified ? " (certified)" : "") << "  work=" << v.work << "\n";
  if (v.witness) {
    std::cout << "  witness [" << v.witness->kind << "]\n";
    for (std::size_t i = 0; i < v.witness->elements.size(); ++i)
      std::cout << "    " << v.witness->roles[i] << " = " << v.witness->rendered[i] << "\n";
  }
}

int run_check(const Options& o) {
  auto r = build_ring(o);
  std::vector<Property> props;
  if (o.property.empty() || o.property == "all") {
    props = {Property::Reduced, Property::Reversible, Property::Symmetric, Property::SI,
             Property::DuoLeft, Property::DuoRight,   Property::Duo,       Property::TwoPrimal};
  } else {
    auto p = property_from_string(o.property);
    if (!p) throw std::invalid_argument("unknown property '" + o.property + "'");
    props = {*p};
  }
  nlohmann::json out = nlohmann::json::array();
  for (Property p : props) {
    auto v = check_property(*r, p, budget_of(o));
    print_verdict(v);
    out.push_back(to_json(v));
  }
  write_json(o.json, props.size() == 1 ? out[0] : out);
  return 0;
}

int run_suite(const Options& o) {
  auto selected = select_scenarios(o.only);
  if (selected.empty()) {
    std::cerr << "no scenario matches '" << o.only << "'\n";
    return 2;
  }
  auto reports = run_scenarios(selected, budget_of(o), o.workers);
  nlohmann::json out = nlohmann::json::array();
  int failed = 0;
  for (const auto& rep : reports) {
    bool ok = rep.pass();
    failed += !ok;
    std::printf("%-28s %s  %8.0f ms  work=%llu\n", rep.id.c_str(), ok ? "PASS" : "FAIL",
                rep.wall_ms, static_cast<unsigned long long>(rep.work));
    if (!rep.error.empty()) std::printf("    error: %s\n", rep.error.c_str());
    for (const auto& c : rep.checks)
      if (!c.pass || o.verbose)
        std::printf("    %s %s: expected %s, got %s [%s]\n", c.pass ? "ok  " : "MISS",
                    c.name.c_str(), c.expected.c_str(), c.actual.c_str(),
                    to_string(c.provenance).c_str());
    out.push_back(to_json(rep));
  }
  std::printf("%zu scenarios, %d failed\n", reports.size(), failed);
  write_json(o.json, out);
  return failed == 0 ? 0 : 1;
}

int run_audit(const Options& o) {
  std::vector<RingPtr> corpus;
  if (!o.ring.empty()) {
    corpus.push_back(build_ring(o));
  } else {
    for (const auto& e : audit_corpus()) corpus.push_back(parse_ring(e));
  }
  auto report = implication_audit(corpus, budget_of(o));
  std::cout << report.diagram();
  std::cout << "edges checked: " << report.edges_checked
            << ", not evaluated: " << report.edges_not_evaluated
            << ", violated: " << report.violations.size() << "\n";
  for (const auto& v : report.violations)
    std::cout << "  VIOLATION " << v.ring << ": " << to_string(v.edge.from) << " => "
              << to_string(v.edge.to) << "  " << v.detail << "\n";
  write_json(o.json, to_json(report));
  return report.violations.empty() ? 0 : 1;
}

int run_decompose(const Options& o) {
  auto r = build_ring(o);
  auto d = central_idempotent_decomposition(r);
  std::cout << d.ring << ": " << d.central_idempotent_count << " central idempotents, "
            << d.idempotents.size() << " primitive\n";
  for (std::size_t i = 0; i < d.idempotents.size(); ++i)
    std::cout << "  e" << i + 1 << " = " << d.rendered[i] << "   factor size "
              << d.factors[i]->size() << ", " << to_string(d.kinds[i]) << "\n";
  std::cout << "checks: " << (d.checks.all() ? "all passed" : "FAILED") << "\n";
  write_json(o.json, to_json(d));
  return d.checks.all() ? 0 : 1;
}

int run_group(const Options& o) {
  if (o.group.empty()) throw std::invalid_argument("--group is required");
  auto g = located(o.group, [&] { return parse_group(o.group); });
  std::cout << g->label() << ": order " << g->order() << ", "
            << (g->is_abelian() ? "abelian" : "non-abelian") << ", "
            << (is_hamiltonian(*g) ? "Hamiltonian" : "not Hamiltonian") << ", "
            << conjugacy_class_count(*g) << " conjugacy classes\n";
  return 0;
}

void add_budget(CLI::App* app, Options& o) {
  app->add_option("--budget-pairs", o.pairs, "pair evaluations before giving up")
      ->check(CLI::PositiveNumber);
  app->add_option("--budget-triples", o.triples, "triple evaluations before giving up")
      ->check(CLI::PositiveNumber);
  app->add_option("--mode", o.mode, "det or rand")->check(CLI::IsMember({"det", "rand"}));
  app->add_option("--seed", o.seed, "seed for rand mode");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite ring and group ring property checker"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "run property checks on one ring");
  check->add_option("--ring", o.ring, "ring expression, e.g. Z/2, GF(4), M2(GF(2)), GF(2)[Q8]")
      ->required();
  check->add_option("--group", o.group, "group expression, e.g. Q8, D4, Q8xC3");
  check->add_option("--property", o.property,
                    "reduced|reversible|symmetric|si|duo-left|duo-right|duo|2primal|all");
  check->add_option("--json", o.json, "write the verdict(s) as JSON ('-' for stdout)");
  add_budget(check, o);

  auto* suite = app.add_subcommand("suite", "run the built-in scenarios");
  suite->add_option("--only", o.only, "scenario id or tag");
  suite->add_option("--workers", o.workers, "scenarios run concurrently")
      ->check(CLI::PositiveNumber);
  suite->add_option("--json", o.json, "write the reports as a JSON array");
  suite->add_flag("-v,--verbose", o.verbose, "list every check");
  add_budget(suite, o);

  auto* audit = app.add_subcommand("audit", "implication diagram over a corpus");
  audit->add_option("--ring", o.ring, "audit one ring instead of the default corpus");
  audit->add_option("--group", o.group, "group for --ring");
  audit->add_option("--json", o.json, "write the audit as JSON");
  add_budget(audit, o);

  auto* decompose = app.add_subcommand("decompose", "primitive central idempotents");
  decompose->add_option("--ring", o.ring, "ring expression")->required();
  decompose->add_option("--group", o.group, "group expression");
  decompose->add_option("--json", o.json, "write the decomposition as JSON");

  auto* group = app.add_subcommand("group", "basic facts about a group");
  group->add_option("--group", o.group, "group expression")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return run_check(o);
    if (*suite) return run_suite(o);
    if (*audit) return run_audit(o);
    if (*decompose) return run_decompose(o);
    if (*group) return run_group(o);
  } catch (const Located& e) {
    std::cerr << e.error.what() << "\n  " << e.text << "\n  "
              << std::string(std::min(e.error.position(), e.text.size()), ' ') << "^\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
