#include "grings/decompose.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "grings/errors.hpp"
#include "grings/group_ring.hpp"
#include "grings/rings.hpp"

namespace grings {

__extension__ typedef unsigned __int128 u128;

std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::DivisionRing: return "division-ring";
    case FactorKind::MatrixLike: return "matrix-like";
    case FactorKind::Other: return "other";
  }
  return "?";
}

std::vector<Elem> Decomposition::factor_sizes() const {
  std::vector<Elem> out;
  for (const auto& f : factors) out.push_back(f->size());
  return out;
}

bool is_simple(const FiniteRing& r) {
  if (r.size() > kMaterializeCap) throw CapExceeded("ring too large for the simplicity test");
  const auto& gens = r.additive_generators();
  for (Elem a = 1; a < r.size(); ++a) {
    // With identity, the ideal generated by a is spanned by x*a*y.
    ElementList spanning;
    for (Elem x : gens)
      for (Elem y : gens) spanning.push_back(r.mul(r.mul(x, a), y));
    auto in = additive_span(r, spanning);
    if (std::find(in.begin(), in.end(), false) != in.end()) return false;
  }
  return true;
}

namespace {

void check_reassembly(const FiniteRing& r, const Decomposition& d, DecompositionChecks& c) {
  const auto& es = d.idempotents;
  std::vector<const SubsetRing*> parts;
  for (const auto& f : d.factors) parts.push_back(dynamic_cast<const SubsetRing*>(f.get()));
  // Tuple index of (e_i * a) in the product of the factor carriers.
  auto project = [&](Elem a) {
    Elem idx = 0, scale = 1;
    for (std::size_t i = 0; i < es.size(); ++i) {
      idx += parts[i]->from_parent(r.mul(es[i], a)) * scale;
      scale *= parts[i]->size();
    }
    return idx;
  };
  auto component = [&](Elem a, std::size_t i) { return r.mul(es[i], a); };
  auto respects = [&](Elem a, Elem b) {
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (component(r.add(a, b), i) != r.add(component(a, i), component(b, i))) return false;
      if (component(r.mul(a, b), i) != r.mul(component(a, i), component(b, i))) return false;
    }
    return true;
  };
  c.reassembly = true;
  if (r.size() <= kCenterCap) {
    std::vector<bool> hit(r.size(), false);
    for (Elem a = 0; a < r.size(); ++a) {
      Elem t = project(a);
      if (t >= r.size() || hit[t]) {
        c.reassembly = false;
        return;
      }
      hit[t] = true;
    }
  }
  if (r.size() * r.size() <= kCenterCap) {
    for (Elem a = 0; a < r.size(); ++a)
      for (Elem b = 0; b < r.size(); ++b)
        if (!respects(a, b)) {
          c.reassembly = false;
          return;
        }
  } else {
    std::mt19937_64 rng(0xdec0);
    std::uniform_int_distribution<Elem> pick(0, r.size() - 1);
    for (int i = 0; i < 10000; ++i) {
      Elem a = pick(rng), b = pick(rng);
      if (!respects(a, b)) {
        c.reassembly = false;
        return;
      }
    }
  }
}

}  // namespace

Decomposition central_idempotent_decomposition(const RingPtr& rp) {
  const FiniteRing& r = *rp;
  if (r.size() > kMaterializeCap)
    throw CapExceeded("ring " + r.label() + " is too large to decompose");
  Decomposition d;
  d.ring = r.label();

  // The center is found by streaming the carrier; stop once it outgrows the cap.
  ElementList z;
  const auto& gens = r.additive_generators();
  for (Elem a = 0; a < r.size(); ++a) {
    bool central = std::all_of(gens.begin(), gens.end(),
                               [&](Elem g) { return r.mul(a, g) == r.mul(g, a); });
    if (central) {
      z.push_back(a);
      if (z.size() > kCenterCap)
        throw CapExceeded("center of " + r.label() + " exceeds " + std::to_string(kCenterCap));
    }
  }

  ElementList idem;
  for (Elem e : z)
    if (r.mul(e, e) == e) idem.push_back(e);
  d.central_idempotent_count = idem.size();

  // Primitive: nonzero with no central idempotent strictly below it.
  for (Elem e : idem) {
    if (e == 0) continue;
    bool primitive = std::none_of(idem.begin(), idem.end(), [&](Elem f) {
      return f != 0 && f != e && r.mul(e, f) == f;
    });
    if (primitive) d.idempotents.push_back(e);
  }

  for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
    Elem e = d.idempotents[i];
    ElementList carrier;
    std::vector<bool> seen(r.size(), false);
    for (Elem x = 0; x < r.size(); ++x) {
      Elem y = r.mul(e, x);
      if (!seen[y]) {
        seen[y] = true;
        carrier.push_back(y);
      }
    }
    auto factor = make_subset_ring(rp, std::move(carrier), e,
                                   r.label() + ":e" + std::to_string(i + 1));
    FactorKind kind = is_division_ring(*factor) ? FactorKind::DivisionRing
                      : is_simple(*factor)      ? FactorKind::MatrixLike
                                                : FactorKind::Other;
    d.factors.push_back(factor);
    d.kinds.push_back(kind);
    d.rendered.push_back(r.format(e));
  }

  auto& c = d.checks;
  c.idempotent = c.central = c.orthogonal = c.primitive = true;
  Elem sum = 0;
  for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
    Elem e = d.idempotents[i];
    sum = r.add(sum, e);
    if (r.mul(e, e) != e) c.idempotent = false;
    for (Elem g : gens)
      if (r.mul(e, g) != r.mul(g, e)) c.central = false;
    for (std::size_t j = 0; j < d.idempotents.size(); ++j)
      if (i != j && r.mul(e, d.idempotents[j]) != 0) c.orthogonal = false;
    for (Elem f : idem)
      if (f != 0 && f != e && r.mul(e, f) == f) c.primitive = false;
  }
  c.sums_to_one = sum == r.one();
  u128 product = 1;
  for (const auto& f : d.factors) product *= f->size();
  c.sizes_multiply = product == r.size();
  if (c.sums_to_one && c.sizes_multiply && c.orthogonal)
    check_reassembly(r, d, c);
  return d;
}

nlohmann::json to_json(const Decomposition& d) {
  nlohmann::json kinds = nlohmann::json::array();
  for (auto k : d.kinds) kinds.push_back(to_string(k));
  return {{"ring", d.ring},
          {"idempotents", d.rendered},
          {"factor_sizes", d.factor_sizes()},
          {"factor_kinds", kinds},
          {"checks",
           {{"idempotent", d.checks.idempotent},
            {"central", d.checks.central},
            {"orthogonal", d.checks.orthogonal},
            {"sums_to_one", d.checks.sums_to_one},
            {"primitive", d.checks.primitive},
            {"sizes_multiply", d.checks.sizes_multiply},
            {"reassembly", d.checks.reassembly}}}};
}

const std::vector<Property>& semisimple_properties() {
  static const std::vector<Property> props{Property::Duo, Property::Symmetric,
                                           Property::Reversible, Property::SI};
  return props;
}

SemisimpleReport verify_semisimple_equivalences(const RingPtr& base, const GroupPtr& g,
                                                const Budget& budget) {
  auto rg = make_group_ring(base, g);
  SemisimpleReport rep;
  rep.ring = rg->label();
  rep.base_semisimple = is_semisimple(*base);
  rep.order_invertible = base->is_unit(base->times(base->one(), g->order()));
  for (Property p : semisimple_properties()) rep.verdicts.push_back(check_property(*rg, p, budget));
  rep.decomposition = central_idempotent_decomposition(rg);
  rep.all_division = std::all_of(rep.decomposition.kinds.begin(), rep.decomposition.kinds.end(),
                                 [](FactorKind k) { return k == FactorKind::DivisionRing; });
  if (!rep.hypothesis()) {
    rep.note = "hypothesis not met: base semisimple and |G| a unit are both required";
    return rep;
  }
  rep.asserted = true;
  const Status first = rep.verdicts.front().status;
  bool same = std::all_of(rep.verdicts.begin(), rep.verdicts.end(), [&](const PropertyVerdict& v) {
    return v.certified && v.status == first;
  });
  rep.consistent = same && first != Status::Unknown &&
                   (first == Status::Holds) == rep.all_division && rep.decomposition.checks.all();
  rep.note = rep.consistent ? "all four properties agree with the factor shapes"
                            : "equivalence violated or undecided";
  return rep;
}

namespace {

Status conjunction(const std::vector<Status>& parts) {
  bool unknown = false;
  for (Status s : parts) {
    if (s == Status::Fails) return Status::Fails;
    if (s == Status::Unknown) unknown = true;
  }
  return unknown ? Status::Unknown : Status::Holds;
}

ComparisonRow compare(Property p, const FiniteRing& whole, const std::vector<RingPtr>& parts,
                 const Budget& budget) {
  ComparisonRow row;
  row.property = p;
  row.certified = true;
  for (const auto& part : parts) {
    auto v = check_property(*part, p, budget);
    row.parts.push_back(v.status);
    row.certified = row.certified && v.certified;
  }
  auto v = check_property(whole, p, budget);
  row.sum = v.status;
  row.certified = row.certified && v.certified;
  row.consistent = row.certified && row.sum == conjunction(row.parts);
  return row;
}

}  // namespace

bool DirectSumReport::consistent() const {
  return std::all_of(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.consistent; });
}

bool SplittingReport::consistent() const {
  return !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.consistent; });
}

DirectSumReport verify_direct_sum_lemma(const std::vector<RingPtr>& parts, const Budget& budget) {
  auto sum = direct_sum(parts);
  DirectSumReport rep;
  rep.ring = sum->label();
  for (Property p : semisimple_properties()) rep.rows.push_back(compare(p, *sum, parts, budget));
  return rep;
}

SplittingReport verify_base_splitting(const RingPtr& base, const GroupPtr& g,
                                      const Budget& budget) {
  SplittingReport rep;
  auto rg = make_group_ring(base, g);
  rep.ring = rg->label();
  if (!base->is_commutative() || !is_semisimple(*base)) return rep;
  auto d = central_idempotent_decomposition(base);
  std::vector<RingPtr> factor_rings;
  for (const auto& f : d.factors) {
    auto fg = make_group_ring(f, g);
    rep.factor_rings.push_back(fg->label());
    factor_rings.push_back(fg);
  }
  for (Property p : semisimple_properties()) rep.rows.push_back(compare(p, *rg, factor_rings, budget));
  return rep;
}

bool commutative_factors_are_fields(const RingPtr& r) {
  if (!r->is_commutative() || !is_semisimple(*r)) return false;
  auto d = central_idempotent_decomposition(r);
  return d.checks.all() &&
         std::all_of(d.kinds.begin(), d.kinds.end(),
                     [](FactorKind k) { return k == FactorKind::DivisionRing; });
}

}  // namespace grings
