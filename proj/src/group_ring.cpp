#include "grings/group_ring.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "grings/errors.hpp"

namespace grings {

__extension__ typedef unsigned __int128 u128;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class SolvableSet final : public ElementSet {
 public:
  SolvableSet(const GroupRing& r, const CoefficientSolver& solver, CoeffMatrix m)
      : r_(r), solver_(solver), m_(std::move(m)) {}
  bool contains(Elem e) const override { return solver_.solvable(m_, r_.coefficients(e)); }

 private:
  const GroupRing& r_;
  const CoefficientSolver& solver_;
  CoeffMatrix m_;
};

}  // namespace

std::string group_ring_label(const FiniteRing& base, const FiniteGroup& group) {
  const std::string& b = base.label();
  bool wrap = b.find("(+)") != std::string::npos;
  return (wrap ? "(" + b + ")" : b) + "[" + group.label() + "]";
}

GroupRing::GroupRing(RingPtr base, GroupPtr group, Elem size, std::string label)
    : FiniteRing(size, std::move(label)),
      base_(std::move(base)),
      group_(std::move(group)),
      n_(group_->order()),
      q_(base_->size()),
      solver_(CoefficientSolver::for_ring(*base_)) {}

std::vector<Elem> GroupRing::coefficients(Elem a) const {
  std::vector<Elem> c(n_);
  for (auto& x : c) {
    x = a % q_;
    a /= q_;
  }
  return c;
}

Elem GroupRing::from_coefficients(const std::vector<Elem>& coeffs) const {
  if (coeffs.size() != n_) throw std::invalid_argument("coefficient vector has the wrong length");
  Elem out = 0;
  for (std::size_t i = n_; i-- > 0;) {
    if (coeffs[i] >= q_) throw std::invalid_argument("coefficient out of range");
    out = out * q_ + coeffs[i];
  }
  return out;
}

Elem GroupRing::basis(GroupElem g) const { return basis(g, base_->one()); }

Elem GroupRing::basis(GroupElem g, Elem c) const {
  std::vector<Elem> v(n_, 0);
  v.at(g) = c;
  return from_coefficients(v);
}

Elem GroupRing::involution(Elem a) const {
  auto c = coefficients(a);
  std::vector<Elem> out(n_);
  for (GroupElem g = 0; g < n_; ++g) out[group_->inv(g)] = c[g];
  return from_coefficients(out);
}

Elem GroupRing::trace(Elem a) const { return coefficients(a)[group_->identity()]; }

Elem GroupRing::augmentation(Elem a) const {
  Elem s = 0;
  for (Elem c : coefficients(a)) s = base_->add(s, c);
  return s;
}

CoeffMatrix GroupRing::left_mul_matrix(Elem a) const {
  auto c = coefficients(a);
  CoeffMatrix m(n_, n_);
  for (GroupElem k = 0; k < n_; ++k)
    for (GroupElem j = 0; j < n_; ++j) m.at(k, j) = c[group_->mul(k, group_->inv(j))];
  return m;
}

CoeffMatrix GroupRing::right_mul_matrix(Elem a) const {
  auto c = coefficients(a);
  CoeffMatrix m(n_, n_);
  for (GroupElem k = 0; k < n_; ++k)
    for (GroupElem i = 0; i < n_; ++i) m.at(k, i) = c[group_->mul(group_->inv(i), k)];
  return m;
}

Elem GroupRing::raw_add(Elem a, Elem b) const {
  Elem out = 0, scale = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    out += base_->add(a % q_, b % q_) * scale;
    a /= q_;
    b /= q_;
    scale *= q_;
  }
  return out;
}

Elem GroupRing::raw_neg(Elem a) const {
  Elem out = 0, scale = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    out += base_->neg(a % q_) * scale;
    a /= q_;
    scale *= q_;
  }
  return out;
}

Elem GroupRing::raw_mul(Elem a, Elem b) const {
  // The size cap keeps the group order at most 40 (|R| >= 2, |RG| <= 2^40).
  std::array<Elem, 64> x{}, y{}, z{};
  for (std::size_t i = 0; i < n_; ++i) {
    x[i] = a % q_;
    a /= q_;
    y[i] = b % q_;
    b /= q_;
  }
  const auto& table = group_->table();
  for (std::size_t g = 0; g < n_; ++g) {
    if (x[g] == 0) continue;
    const GroupElem* row = table.data() + g * n_;
    for (std::size_t h = 0; h < n_; ++h) {
      if (y[h] == 0) continue;
      z[row[h]] = base_->add(z[row[h]], base_->mul(x[g], y[h]));
    }
  }
  Elem out = 0;
  for (std::size_t i = n_; i-- > 0;) out = out * q_ + z[i];
  return out;
}

Elem GroupRing::raw_one() const { return basis(group_->identity()); }

ElementList GroupRing::compute_additive_generators() const {
  ElementList gens;
  for (GroupElem g = 0; g < n_; ++g)
    for (Elem c : base_->additive_generators()) gens.push_back(basis(g, c));
  return gens;
}

bool GroupRing::is_unit(Elem a) const {
  if (size() <= kTableCap || !solver_) return FiniteRing::is_unit(a);
  // In a finite ring a is a unit iff x -> a*x is injective.
  return solver_->injective(left_mul_matrix(a));
}

FiniteRing::Scan GroupRing::kernel(const CoeffMatrix& m, const ElementVisitor& visit) const {
  return solver_->for_each_solution(m, std::vector<Elem>(n_, 0), [&](const std::vector<Elem>& x) {
    return visit(from_coefficients(x));
  });
}

FiniteRing::Scan GroupRing::for_each_right_annihilator(Elem a, const ElementVisitor& visit) const {
  if (!solver_) return FiniteRing::for_each_right_annihilator(a, visit);
  return kernel(left_mul_matrix(a), visit);
}

FiniteRing::Scan GroupRing::for_each_left_annihilator(Elem a, const ElementVisitor& visit) const {
  if (!solver_) return FiniteRing::for_each_left_annihilator(a, visit);
  return kernel(right_mul_matrix(a), visit);
}

std::unique_ptr<ElementSet> GroupRing::right_multiples(Elem a) const {
  if (!solver_) return FiniteRing::right_multiples(a);
  return std::make_unique<SolvableSet>(*this, *solver_, left_mul_matrix(a));
}

std::unique_ptr<ElementSet> GroupRing::left_multiples(Elem a) const {
  if (!solver_) return FiniteRing::left_multiples(a);
  return std::make_unique<SolvableSet>(*this, *solver_, right_mul_matrix(a));
}

std::string GroupRing::format(Elem a) const {
  auto c = coefficients(a);
  std::string out;
  for (GroupElem g = 0; g < n_; ++g) {
    if (c[g] == 0) continue;
    std::string coef = base_->format(c[g]);
    bool plain = std::all_of(coef.begin(), coef.end(),
                             [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    bool wrapped = coef.size() >= 2 && coef.front() == '(' && coef.back() == ')';
    if (!plain && !wrapped) coef = "(" + coef + ")";
    std::string term;
    if (g == group_->identity())
      term = coef;
    else if (c[g] == base_->one())
      term = group_->element_name(g);
    else
      term = coef + "*" + group_->element_name(g);
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

Elem GroupRing::parse(std::string_view text) const {
  // Split into signed terms at '+' / '-' outside parentheses.
  std::vector<Elem> acc(n_, 0);
  std::size_t i = 0;
  const std::size_t len = text.size();
  bool any = false;
  while (i < len) {
    bool negative = false;
    while (i < len && (text[i] == '+' || text[i] == '-' ||
                       std::isspace(static_cast<unsigned char>(text[i])))) {
      if (text[i] == '-') negative = !negative;
      ++i;
    }
    if (i >= len) break;
    std::size_t start = i;
    int depth = 0;
    while (i < len) {
      char ch = text[i];
      if (ch == '(' || ch == '[') ++depth;
      if (ch == ')' || ch == ']') --depth;
      if (depth == 0 && (ch == '+' || ch == '-')) break;
      ++i;
    }
    std::string_view term = trim(text.substr(start, i - start));
    std::string_view coef_text, word;
    if (term.front() == '(') {
      std::size_t k = 0;
      int d = 0;
      for (; k < term.size(); ++k) {
        if (term[k] == '(') ++d;
        if (term[k] == ')' && --d == 0) break;
      }
      if (k == term.size()) throw ParseError(start, "unbalanced parenthesis");
      coef_text = term.substr(0, k + 1);
      word = trim(term.substr(k + 1));
    } else if (std::isdigit(static_cast<unsigned char>(term.front()))) {
      std::size_t k = 0;
      while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
      coef_text = term.substr(0, k);
      word = trim(term.substr(k));
    } else {
      word = term;
    }
    if (!coef_text.empty() && !word.empty()) {
      if (word.front() != '*') throw ParseError(start, "expected '*' after a coefficient");
      word = trim(word.substr(1));
      if (word.empty()) throw ParseError(start, "missing group element after '*'");
    }
    Elem c = base_->one();
    if (!coef_text.empty()) {
      try {
        c = base_->parse(coef_text);
      } catch (const ParseError&) {
        if (coef_text.front() != '(') throw;
        c = base_->parse(coef_text.substr(1, coef_text.size() - 2));
      }
    }
    GroupElem g = group_->identity();
    if (!word.empty()) {
      try {
        g = group_->parse_word(word);
      } catch (const ParseError& e) {
        throw ParseError(start + e.position(), e.what());
      }
    }
    if (negative) c = base_->neg(c);
    acc[g] = base_->add(acc[g], c);
    any = true;
  }
  if (!any) throw ParseError(0, "empty group ring literal");
  return from_coefficients(acc);
}

std::shared_ptr<const GroupRing> make_group_ring(const RingPtr& base, const GroupPtr& group,
                                                 Elem cap) {
  if (!base->is_commutative())
    throw std::invalid_argument("group ring needs a commutative coefficient ring");
  u128 size = 1;
  for (std::size_t i = 0; i < group->order(); ++i) {
    size *= base->size();
    if (size > cap)
      throw CapExceeded("group ring " + group_ring_label(*base, *group) +
                        " exceeds the size cap " + std::to_string(cap));
  }
  auto r = std::shared_ptr<GroupRing>(
      new GroupRing(base, group, static_cast<Elem>(size), group_ring_label(*base, *group)));
  r->finalize(group->is_abelian());
  return r;
}

GroupRingElement::GroupRingElement(std::shared_ptr<const GroupRing> parent,
                                   std::vector<Elem> coeffs)
    : parent_(std::move(parent)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != parent_->group().order())
    throw std::invalid_argument("coefficient vector length must equal the group order");
  for (Elem c : coeffs_)
    if (c >= parent_->base().size()) throw std::invalid_argument("coefficient out of range");
}

GroupRingElement GroupRingElement::from_index(std::shared_ptr<const GroupRing> parent,
                                              Elem index) {
  auto c = parent->coefficients(index);
  return GroupRingElement(std::move(parent), std::move(c));
}

GroupRingElement GroupRingElement::parse(std::shared_ptr<const GroupRing> parent,
                                         std::string_view text) {
  Elem e = parent->parse(text);
  return from_index(std::move(parent), e);
}

namespace {

void require_same_parent(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.parent() != b.parent() && a.parent()->label() != b.parent()->label())
    throw std::invalid_argument("group ring elements belong to different rings");
}

}  // namespace

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_parent(a, b);
  return GroupRingElement::from_index(a.parent(), a.parent()->mul(a.index(), b.index()));
}

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_parent(a, b);
  return GroupRingElement::from_index(a.parent(), a.parent()->add(a.index(), b.index()));
}

GroupRingElement involution(const GroupRingElement& a) {
  return GroupRingElement::from_index(a.parent(), a.parent()->involution(a.index()));
}

Elem trace(const GroupRingElement& a) { return a.coeffs()[a.parent()->group().identity()]; }

Elem augmentation(const GroupRingElement& a) { return a.parent()->augmentation(a.index()); }

nlohmann::json to_json(const GroupRingElement& a) {
  const auto& r = *a.parent();
  nlohmann::json coeffs = nlohmann::json::array();
  for (Elem c : a.coeffs()) coeffs.push_back(r.base().format(c));
  return {{"ring", r.label()},
          {"base", r.base().label()},
          {"group", r.group().label()},
          {"coefficients", coeffs},
          {"literal", a.to_string()}};
}

GroupRingElement element_from_json(std::shared_ptr<const GroupRing> parent,
                                   const nlohmann::json& j) {
  if (j.at("ring").get<std::string>() != parent->label())
    throw std::invalid_argument("element belongs to ring " + j.at("ring").get<std::string>());
  std::vector<Elem> c;
  for (const auto& v : j.at("coefficients")) c.push_back(parent->base().parse(v.get<std::string>()));
  return GroupRingElement(std::move(parent), std::move(c));
}

}  // namespace grings
