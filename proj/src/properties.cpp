#include "grings/properties.hpp"

#include <array>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "grings/group_ring.hpp"

namespace grings {

std::string to_string(Property p) {
  switch (p) {
    case Property::Reduced: return "reduced";
    case Property::Reversible: return "reversible";
    case Property::Symmetric: return "symmetric";
    case Property::SI: return "si";
    case Property::DuoLeft: return "duo-left";
    case Property::DuoRight: return "duo-right";
    case Property::Duo: return "duo";
    case Property::TwoPrimal: return "2primal";
  }
  return "?";
}

std::optional<Property> property_from_string(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(Property::TwoPrimal); ++i) {
    auto p = static_cast<Property>(i);
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Mode m) { return m == Mode::Deterministic ? "det" : "rand"; }

nlohmann::json to_json(const PropertyVerdict& v) {
  nlohmann::json j{{"ring", v.ring},
                   {"property", to_string(v.property)},
                   {"status", to_string(v.status)},
                   {"certified", v.certified},
                   {"work", v.work},
                   {"mode", to_string(v.mode)},
                   {"method", v.method}};
  if (v.mode == Mode::Random) j["seed"] = v.seed;
  if (v.witness) {
    nlohmann::json w{{"kind", v.witness->kind}};
    for (std::size_t i = 0; i < v.witness->elements.size(); ++i)
      w["elements"].push_back({{"role", v.witness->roles[i]},
                               {"index", v.witness->elements[i]},
                               {"literal", v.witness->rendered[i]}});
    j["witness"] = w;
  }
  return j;
}

namespace {

constexpr const char* kCommutative = "commutative short-circuit";

PropertyVerdict start(const FiniteRing& r, Property p, const Budget& b) {
  PropertyVerdict v;
  v.property = p;
  v.ring = r.label();
  v.mode = b.mode;
  v.seed = b.seed;
  return v;
}

void set_holds(PropertyVerdict& v, std::string method) {
  v.status = Status::Holds;
  v.certified = true;
  v.method = std::move(method);
}

void set_unknown(PropertyVerdict& v, std::string method) {
  v.status = Status::Unknown;
  v.certified = false;
  v.method = std::move(method);
}

void set_fails(PropertyVerdict& v, const FiniteRing& r, std::string kind,
               std::vector<std::string> roles, ElementList elems, std::string method) {
  Witness w;
  w.kind = std::move(kind);
  w.roles = std::move(roles);
  for (Elem e : elems) w.rendered.push_back(r.format(e));
  w.elements = std::move(elems);
  v.status = Status::Fails;
  v.certified = true;
  v.witness = std::move(w);
  v.method = std::move(method);
}

// Leading elements in canonical order, or seeded samples in random mode.
class LeadOrder {
 public:
  LeadOrder(const FiniteRing& r, const Budget& b, Elem first)
      : size_(r.size()), random_(b.mode == Mode::Random), next_(first), rng_(b.seed),
        pick_(first, r.size() - 1) {}

  bool next(Elem& out) {
    if (random_) {
      if (next_ >= size_) return false;  // nothing to sample
      out = pick_(rng_);
      return true;
    }
    if (next_ >= size_) return false;
    out = next_++;
    return true;
  }
  bool exhaustive() const { return !random_; }

 private:
  Elem size_;
  bool random_;
  Elem next_;
  std::mt19937_64 rng_;
  std::uniform_int_distribution<Elem> pick_;
};

std::string scan_method(const FiniteRing& r, const char* what) {
  const auto* gr = dynamic_cast<const GroupRing*>(&r);
  std::string how = gr && gr->has_linear_solver() ? "annihilators by linear algebra"
                                                   : "annihilators by carrier scan";
  return std::string(what) + "; " + how;
}

// Smallest x with pred(x), scanning the whole carrier.
template <typename Pred>
std::optional<Elem> first_in_carrier(const FiniteRing& r, std::uint64_t& work, Pred pred) {
  for (Elem x = 0; x < r.size(); ++x) {
    ++work;
    if (pred(x)) return x;
  }
  return std::nullopt;
}

// Candidates a = g(1 - x), b = 1 + x + ... + x^(n-1) with n the order of x:
// ab = 0 always, and ba != 0 exactly when the pair breaks reversibility.
std::optional<std::pair<Elem, Elem>> seeded_zero_divisor(const GroupRing& gr,
                                                         std::uint64_t& work) {
  const FiniteGroup& g = gr.group();
  for (GroupElem x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    const std::uint64_t n = element_order(g, x);
    Elem norm = 0;
    for (std::uint64_t i = 0; i < n; ++i) norm = gr.add(norm, gr.basis(g.pow(x, i)));
    for (GroupElem h = 0; h < g.order(); ++h) {
      ++work;
      Elem a = gr.sub(gr.basis(h), gr.basis(g.mul(h, x)));
      if (gr.mul(a, norm) == 0 && gr.mul(norm, a) != 0) return std::make_pair(a, norm);
    }
  }
  return std::nullopt;
}

PropertyVerdict check_duo_side(const FiniteRing& r, Side side, const Budget& budget) {
  const bool right = side == Side::Right;
  auto v = start(r, right ? Property::DuoRight : Property::DuoLeft, budget);
  if (r.is_commutative()) {
    set_holds(v, kCommutative);
    return v;
  }
  const char* method = right ? "principal right ideals: x*a in a*R for all a, x (needs identity)"
                             : "principal left ideals: a*x in R*a for all a, x (needs identity)";
  const auto& gens = r.additive_generators();
  LeadOrder order(r, budget, 1);
  Elem a;
  while (order.next(a)) {
    auto ideal = right ? r.right_multiples(a) : r.left_multiples(a);
    auto escapes = [&](Elem x) {
      Elem y = right ? r.mul(x, a) : r.mul(a, x);
      return !ideal->contains(y);
    };
    bool failing = false;
    for (Elem g : gens) {
      ++v.work;
      if (escapes(g)) {
        failing = true;
        break;
      }
    }
    if (v.work > budget.max_pairs) {
      set_unknown(v, std::string(method) + "; pair budget exhausted");
      return v;
    }
    if (failing) {
      auto x = first_in_carrier(r, v.work, escapes);
      set_fails(v, r, right ? "right" : "left", {"a", "x"}, {a, *x}, method);
      return v;
    }
  }
  if (order.exhaustive())
    set_holds(v, method);
  else
    set_unknown(v, std::string(method) + "; sampled");
  return v;
}

}  // namespace

PropertyVerdict check_reduced(const FiniteRing& r, const Budget& budget) {
  auto v = start(r, Property::Reduced, budget);
  const char* method = "nilpotency scan by repeated squaring";
  LeadOrder order(r, budget, 1);
  Elem a;
  while (order.next(a)) {
    if (++v.work > budget.max_pairs) {
      set_unknown(v, std::string(method) + "; budget exhausted");
      return v;
    }
    if (is_nilpotent(r, a)) {
      set_fails(v, r, "nonzero nilpotent", {"a"}, {a}, method);
      return v;
    }
  }
  if (order.exhaustive())
    set_holds(v, method);
  else
    set_unknown(v, std::string(method) + "; sampled");
  return v;
}

PropertyVerdict check_reversible(const FiniteRing& r, const Budget& budget) {
  auto v = start(r, Property::Reversible, budget);
  if (r.is_commutative()) {
    set_holds(v, kCommutative);
    return v;
  }
  if (const auto* gr = dynamic_cast<const GroupRing*>(&r)) {
    if (auto seed = seeded_zero_divisor(*gr, v.work)) {
      set_fails(v, r, "ab=0, ba!=0", {"a", "b"}, {seed->first, seed->second},
                "seeded candidate g(1-x), 1+x+...+x^(n-1)");
      return v;
    }
  }
  const std::string method = scan_method(r, "for each a, every b with ab=0 must give ba=0");
  LeadOrder order(r, budget, 1);
  Elem a;
  while (order.next(a)) {
    std::optional<Elem> best;
    bool over = false;
    r.for_each_right_annihilator(a, [&](Elem b) {
      if (++v.work > budget.max_pairs) {
        over = true;
        return false;
      }
      if ((!best || b < *best) && r.mul(b, a) != 0) best = b;
      return true;
    });
    if (over) {
      set_unknown(v, method + "; pair budget exhausted");
      return v;
    }
    if (best) {
      set_fails(v, r, "ab=0, ba!=0", {"a", "b"}, {a, *best}, method);
      return v;
    }
  }
  if (order.exhaustive())
    set_holds(v, method);
  else
    set_unknown(v, method + "; sampled");
  return v;
}

PropertyVerdict check_symmetric(const FiniteRing& r, const Budget& budget) {
  auto v = start(r, Property::Symmetric, budget);
  if (r.is_commutative()) {
    set_holds(v, kCommutative);
    return v;
  }
  const std::string method =
      scan_method(r, "for each pair (a,b), every c with abc=0 must give acb=0");
  const bool random = budget.mode == Mode::Random;
  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<Elem> pick(1, r.size() - 1);
  for (Elem a = 1, b = 1; r.size() > 1;) {
    if (random) {
      a = pick(rng);
      b = pick(rng);
    }
    const Elem ab = r.mul(a, b);
    std::optional<Elem> best;
    bool over = false;
    r.for_each_right_annihilator(ab, [&](Elem c) {
      if (++v.work > budget.max_triples) {
        over = true;
        return false;
      }
      if ((!best || c < *best) && r.mul(r.mul(a, c), b) != 0) best = c;
      return true;
    });
    if (over) {
      set_unknown(v, method + "; triple budget exhausted");
      return v;
    }
    if (best) {
      set_fails(v, r, "abc=0, acb!=0", {"a", "b", "c"}, {a, b, *best}, method);
      return v;
    }
    if (!random && ++b == r.size()) {
      b = 1;
      if (++a == r.size()) break;
    }
  }
  set_holds(v, method);
  return v;
}

PropertyVerdict check_si(const FiniteRing& r, const Budget& budget) {
  auto v = start(r, Property::SI, budget);
  if (r.is_commutative()) {
    set_holds(v, kCommutative);
    return v;
  }
  // a*x*b is additive in x, so testing x over additive generators decides it.
  const std::string method =
      scan_method(r, "for each a and b with ab=0, a*x*b=0 for x over additive generators");
  const auto& gens = r.additive_generators();
  LeadOrder order(r, budget, 1);
  Elem a;
  ElementList ag(gens.size());
  while (order.next(a)) {
    for (std::size_t i = 0; i < gens.size(); ++i) ag[i] = r.mul(a, gens[i]);
    std::optional<Elem> best;
    bool over = false;
    r.for_each_right_annihilator(a, [&](Elem b) {
      if (best && b > *best) return true;
      for (Elem left : ag) {
        if (++v.work > budget.max_triples) {
          over = true;
          return false;
        }
        if (r.mul(left, b) != 0) {
          best = b;
          break;
        }
      }
      return true;
    });
    if (over) {
      set_unknown(v, method + "; triple budget exhausted");
      return v;
    }
    if (best) {
      Elem b = *best;
      auto x = first_in_carrier(r, v.work, [&](Elem x) { return r.mul(r.mul(a, x), b) != 0; });
      set_fails(v, r, "ab=0, axb!=0", {"a", "x", "b"}, {a, *x, b}, method);
      return v;
    }
  }
  if (order.exhaustive())
    set_holds(v, method);
  else
    set_unknown(v, method + "; sampled");
  return v;
}

PropertyVerdict check_duo(const FiniteRing& r, Side side, const Budget& budget) {
  if (side != Side::TwoSided) return check_duo_side(r, side, budget);
  auto v = start(r, Property::Duo, budget);
  auto right = check_duo_side(r, Side::Right, budget);
  v.work = right.work;
  if (right.status == Status::Fails) {
    v.status = Status::Fails;
    v.certified = true;
    v.witness = right.witness;
    v.method = right.method;
    return v;
  }
  auto left = check_duo_side(r, Side::Left, budget);
  v.work += left.work;
  v.method = left.method;
  if (left.status == Status::Fails) {
    v.status = Status::Fails;
    v.certified = true;
    v.witness = left.witness;
  } else if (right.status == Status::Holds && left.status == Status::Holds) {
    v.status = Status::Holds;
    v.certified = true;
    v.method = right.method == kCommutative ? kCommutative : "right and left principal ideals";
  } else {
    set_unknown(v, "one side undecided");
  }
  return v;
}

PropertyVerdict check_two_primal(const FiniteRing& r, const Budget& budget) {
  auto v = start(r, Property::TwoPrimal, budget);
  const char* method =
      "nilpotent set is a two-sided ideal (in a finite ring this forces it to equal the prime "
      "radical)";
  if (r.size() > kMaterializeCap) {
    set_unknown(v, std::string(method) + "; carrier too large to list nilpotents");
    return v;
  }
  ElementList nil = nilpotents(r);
  v.work += r.size();
  std::vector<bool> in(r.size(), false);
  for (Elem n : nil) in[n] = true;

  // Closure under addition: the span of the nilpotents must add nothing.
  const ElementList nil_gens = additive_generators_of(r, nil);
  bool closed = true;
  for (Elem n : nil) {
    for (Elem g : nil_gens) {
      ++v.work;
      if (!in[r.add(n, g)]) {
        closed = false;
        break;
      }
    }
    if (!closed) break;
  }
  if (!closed) {
    for (Elem a : nil)
      for (Elem b : nil) {
        ++v.work;
        if (!in[r.add(a, b)]) {
          set_fails(v, r, "sum", {"a", "b"}, {a, b}, method);
          return v;
        }
      }
  }
  // Absorption, tested on additive generators of both sides.
  bool absorbs = true;
  for (Elem n : nil_gens)
    for (Elem x : r.additive_generators()) {
      ++v.work;
      if (!in[r.mul(x, n)] || !in[r.mul(n, x)]) absorbs = false;
    }
  if (!absorbs) {
    for (Elem n : nil)
      for (Elem x = 0; x < r.size(); ++x) {
        ++v.work;
        if (!in[r.mul(x, n)]) {
          set_fails(v, r, "left-absorb", {"n", "x"}, {n, x}, method);
          return v;
        }
        if (!in[r.mul(n, x)]) {
          set_fails(v, r, "right-absorb", {"n", "x"}, {n, x}, method);
          return v;
        }
      }
  }
  set_holds(v, method);
  return v;
}

PropertyVerdict check_property(const FiniteRing& r, Property p, const Budget& budget) {
  switch (p) {
    case Property::Reduced: return check_reduced(r, budget);
    case Property::Reversible: return check_reversible(r, budget);
    case Property::Symmetric: return check_symmetric(r, budget);
    case Property::SI: return check_si(r, budget);
    case Property::DuoLeft: return check_duo(r, Side::Left, budget);
    case Property::DuoRight: return check_duo(r, Side::Right, budget);
    case Property::Duo: return check_duo(r, Side::TwoSided, budget);
    case Property::TwoPrimal: return check_two_primal(r, budget);
  }
  throw std::invalid_argument("unknown property");
}

namespace {

// True iff y lies in a*R (right) or R*a (left), by direct search when the
// carrier is small enough.
bool in_principal(const FiniteRing& r, Elem a, Elem y, bool right) {
  if (r.size() <= kMaterializeCap) {
    for (Elem z = 0; z < r.size(); ++z)
      if ((right ? r.mul(a, z) : r.mul(z, a)) == y) return true;
    return false;
  }
  return (right ? r.right_multiples(a) : r.left_multiples(a))->contains(y);
}

}  // namespace

bool revalidate(const FiniteRing& r, const PropertyVerdict& v) {
  if (v.status != Status::Fails || !v.witness) return false;
  const auto& w = *v.witness;
  const auto& e = w.elements;
  for (Elem x : e)
    if (x >= r.size()) return false;
  switch (v.property) {
    case Property::Reduced:
      return e.size() == 1 && e[0] != 0 && is_nilpotent(r, e[0]);
    case Property::Reversible:
      return e.size() == 2 && r.mul(e[0], e[1]) == 0 && r.mul(e[1], e[0]) != 0;
    case Property::Symmetric:
      return e.size() == 3 && r.mul(r.mul(e[0], e[1]), e[2]) == 0 &&
             r.mul(r.mul(e[0], e[2]), e[1]) != 0;
    case Property::SI:
      return e.size() == 3 && r.mul(e[0], e[2]) == 0 && r.mul(r.mul(e[0], e[1]), e[2]) != 0;
    case Property::DuoLeft:
    case Property::DuoRight:
    case Property::Duo: {
      if (e.size() != 2) return false;
      const bool right = w.kind == "right";
      if (!right && w.kind != "left") return false;
      Elem y = right ? r.mul(e[1], e[0]) : r.mul(e[0], e[1]);
      return !in_principal(r, e[0], y, right);
    }
    case Property::TwoPrimal: {
      if (e.size() != 2) return false;
      if (w.kind == "sum")
        return is_nilpotent(r, e[0]) && is_nilpotent(r, e[1]) &&
               !is_nilpotent(r, r.add(e[0], e[1]));
      if (w.kind == "left-absorb")
        return is_nilpotent(r, e[0]) && !is_nilpotent(r, r.mul(e[1], e[0]));
      if (w.kind == "right-absorb")
        return is_nilpotent(r, e[0]) && !is_nilpotent(r, r.mul(e[0], e[1]));
      return false;
    }
  }
  return false;
}

const std::vector<AuditEdge>& audit_edges() {
  static const std::vector<AuditEdge> edges{
      {Property::Reduced, Property::Symmetric},   {Property::Reduced, Property::Reversible},
      {Property::Symmetric, Property::Reversible}, {Property::Symmetric, Property::SI},
      {Property::Reversible, Property::SI},        {Property::Duo, Property::DuoLeft},
      {Property::Duo, Property::DuoRight},         {Property::DuoLeft, Property::SI},
      {Property::DuoRight, Property::SI},          {Property::SI, Property::TwoPrimal},
  };
  return edges;
}

namespace {

PropertyVerdict combine_duo(const FiniteRing& r, const PropertyVerdict& left,
                            const PropertyVerdict& right, const Budget& budget) {
  auto v = start(r, Property::Duo, budget);
  v.work = left.work + right.work;
  if (right.status == Status::Fails || left.status == Status::Fails) {
    const auto& src = right.status == Status::Fails ? right : left;
    v.status = Status::Fails;
    v.certified = true;
    v.witness = src.witness;
    v.method = src.method;
  } else if (right.status == Status::Holds && left.status == Status::Holds) {
    set_holds(v, right.method);
  } else {
    set_unknown(v, "one side undecided");
  }
  return v;
}

char mark(Status s) {
  switch (s) {
    case Status::Holds: return '+';
    case Status::Fails: return '-';
    case Status::Unknown: return '?';
  }
  return '?';
}

}  // namespace

AuditReport implication_audit(const std::vector<RingPtr>& corpus, const Budget& budget) {
  AuditReport report;
  for (const auto& ring : corpus) {
    AuditRingRow row;
    row.ring = ring->label();
    row.verdicts.resize(static_cast<std::size_t>(Property::TwoPrimal) + 1);
    auto put = [&](PropertyVerdict v) { row.verdicts[static_cast<std::size_t>(v.property)] = v; };
    put(check_reduced(*ring, budget));
    put(check_reversible(*ring, budget));
    put(check_symmetric(*ring, budget));
    put(check_si(*ring, budget));
    put(check_duo(*ring, Side::Left, budget));
    put(check_duo(*ring, Side::Right, budget));
    put(combine_duo(*ring, row[Property::DuoLeft], row[Property::DuoRight], budget));
    put(check_two_primal(*ring, budget));

    for (const auto& edge : audit_edges()) {
      const auto& from = row[edge.from];
      const auto& to = row[edge.to];
      if (from.status == Status::Unknown || to.status == Status::Unknown) {
        ++report.edges_not_evaluated;
        continue;
      }
      ++report.edges_checked;
      if (from.status == Status::Holds && to.status == Status::Fails) {
        std::string detail = to_string(edge.to) + " fails";
        if (to.witness) {
          detail += " at (";
          for (std::size_t i = 0; i < to.witness->rendered.size(); ++i)
            detail += (i ? ", " : "") + to.witness->rendered[i];
          detail += ")";
        }
        report.violations.push_back({row.ring, edge, detail});
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string AuditReport::diagram() const {
  std::ostringstream out;
  for (const auto& row : rows) {
    auto m = [&](Property p) { return std::string("[") + mark(row[p].status) + "]"; };
    out << row.ring << "\n";
    out << "  reduced" << m(Property::Reduced) << " ==> symmetric" << m(Property::Symmetric)
        << " ==> reversible" << m(Property::Reversible) << " ==> SI" << m(Property::SI)
        << " ==> 2-primal" << m(Property::TwoPrimal) << "\n";
    out << "  reduced" << m(Property::Reduced) << " ==> reversible" << m(Property::Reversible)
        << "    symmetric" << m(Property::Symmetric) << " ==> SI" << m(Property::SI) << "\n";
    out << "  duo" << m(Property::Duo) << " ==> duo-left" << m(Property::DuoLeft) << " ==> SI"
        << m(Property::SI) << "\n";
    out << "  duo" << m(Property::Duo) << " ==> duo-right" << m(Property::DuoRight) << " ==> SI"
        << m(Property::SI) << "\n";
  }
  out << "edges checked: " << edges_checked << ", not evaluated: " << edges_not_evaluated
      << ", violated: " << violations.size() << "\n";
  for (const auto& v : violations)
    out << "VIOLATION " << v.ring << ": " << to_string(v.edge.from) << " => "
        << to_string(v.edge.to) << " (" << v.detail << ")\n";
  return out.str();
}

nlohmann::json to_json(const AuditReport& report) {
  nlohmann::json rings = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& v : row.verdicts) verdicts.push_back(to_json(v));
    rings.push_back({{"ring", row.ring}, {"verdicts", verdicts}});
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"ring", v.ring},
                          {"from", to_string(v.edge.from)},
                          {"to", to_string(v.edge.to)},
                          {"detail", v.detail}});
  return {{"rings", rings},
          {"edges_checked", report.edges_checked},
          {"edges_not_evaluated", report.edges_not_evaluated},
          {"violations", violations}};
}

}  // namespace grings
