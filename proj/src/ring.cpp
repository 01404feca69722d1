#include "grings/ring.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "grings/errors.hpp"

namespace grings {

namespace {

constexpr Elem kExhaustiveAxiomSize = 256;
constexpr std::size_t kAxiomSamples = 10000;
// Bitmaps over the carrier are allowed up to this size (8 MiB).
constexpr Elem kBitmapCap = Elem{1} << 26;

void require_bitmap(const FiniteRing& r) {
  if (r.size() > kBitmapCap)
    throw CapExceeded("ring " + r.label() + " is too large for a membership bitmap");
}

void require_materializable(const FiniteRing& r) {
  if (r.size() > kMaterializeCap)
    throw CapExceeded("ring " + r.label() + " has " + std::to_string(r.size()) +
                      " elements; element lists are capped at " +
                      std::to_string(kMaterializeCap));
}

class BitmapSet final : public ElementSet {
 public:
  explicit BitmapSet(std::vector<bool> bits) : bits_(std::move(bits)) {}
  bool contains(Elem e) const override { return bits_[e]; }

 private:
  std::vector<bool> bits_;
};

}  // namespace

FiniteRing::FiniteRing(Elem size, std::string label)
    : size_(size), label_(std::move(label)) {
  if (size_ == 0) throw std::invalid_argument("ring must be nonempty");
}

Elem FiniteRing::pow(Elem a, std::uint64_t k) const {
  Elem result = one_;
  while (k) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

Elem FiniteRing::times(Elem a, std::uint64_t k) const {
  Elem result = 0;
  while (k) {
    if (k & 1) result = add(result, a);
    a = add(a, a);
    k >>= 1;
  }
  return result;
}

std::string FiniteRing::format(Elem a) const { return "#" + std::to_string(a); }

Elem FiniteRing::parse(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  bool index_form = !text.empty() && text.front() == '#';
  if (index_form) text.remove_prefix(1);
  bool negative = !index_form && !text.empty() && text.front() == '-';
  if (negative) text.remove_prefix(1);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError(0, "cannot read '" + std::string(text) + "' as an element of " + label_);
  if (index_form) {
    if (value >= size_) throw ParseError(0, "element index out of range");
    return value;
  }
  Elem e = times(one_, value % (characteristic_ ? characteristic_ : 1));
  return negative ? neg(e) : e;
}

const ElementList& FiniteRing::additive_generators() const {
  std::call_once(gens_once_, [this] { gens_ = compute_additive_generators(); });
  return gens_;
}

ElementList FiniteRing::compute_additive_generators() const {
  require_bitmap(*this);
  ElementList all(size_);
  for (Elem e = 0; e < size_; ++e) all[e] = e;
  return additive_generators_of(*this, all);
}

bool FiniteRing::is_unit(Elem a) const {
  std::call_once(units_once_, [this] {
    require_bitmap(*this);
    units_.assign(size_, false);
    for (Elem x = 0; x < size_; ++x) {
      if (units_[x]) continue;
      for (Elem y = 0; y < size_; ++y) {
        if (mul(x, y) == one_) {
          // One-sided inverses are two-sided in a finite ring.
          units_[x] = true;
          units_[y] = true;
          break;
        }
      }
    }
  });
  return units_[a];
}

FiniteRing::Scan FiniteRing::for_each_right_annihilator(Elem a,
                                                        const ElementVisitor& visit) const {
  Scan scan;
  for (Elem b = 0; b < size_; ++b) {
    ++scan.examined;
    if (mul(a, b) == 0 && !visit(b)) {
      scan.completed = false;
      break;
    }
  }
  return scan;
}

FiniteRing::Scan FiniteRing::for_each_left_annihilator(Elem a,
                                                       const ElementVisitor& visit) const {
  Scan scan;
  for (Elem b = 0; b < size_; ++b) {
    ++scan.examined;
    if (mul(b, a) == 0 && !visit(b)) {
      scan.completed = false;
      break;
    }
  }
  return scan;
}

std::unique_ptr<ElementSet> FiniteRing::right_multiples(Elem a) const {
  ElementList gens;
  for (Elem g : additive_generators()) gens.push_back(mul(a, g));
  return std::make_unique<BitmapSet>(additive_span(*this, gens));
}

std::unique_ptr<ElementSet> FiniteRing::left_multiples(Elem a) const {
  ElementList gens;
  for (Elem g : additive_generators()) gens.push_back(mul(g, a));
  return std::make_unique<BitmapSet>(additive_span(*this, gens));
}

void FiniteRing::finalize(bool claims_commutative) {
  if (size_ <= kTableCap) {
    add_tab_.resize(size_ * size_);
    mul_tab_.resize(size_ * size_);
    neg_tab_.resize(size_);
    for (Elem a = 0; a < size_; ++a) {
      neg_tab_[a] = static_cast<std::uint16_t>(raw_neg(a));
      for (Elem b = 0; b < size_; ++b) {
        add_tab_[a * size_ + b] = static_cast<std::uint16_t>(raw_add(a, b));
        mul_tab_[a * size_ + b] = static_cast<std::uint16_t>(raw_mul(a, b));
      }
    }
    tables_ = true;
  }
  one_ = raw_one();

  characteristic_ = 1;
  for (Elem cur = one_; cur != 0; cur = add(cur, one_)) ++characteristic_;
  if (size_ == 1) characteristic_ = 1;

  verify_axioms();

  // Commutativity is bilinear, so checking generator pairs decides it.
  const auto& gens = additive_generators();
  bool commutes = true;
  for (std::size_t i = 0; i < gens.size() && commutes; ++i)
    for (std::size_t j = i + 1; j < gens.size() && commutes; ++j)
      commutes = mul(gens[i], gens[j]) == mul(gens[j], gens[i]);
  if (claims_commutative && !commutes)
    throw std::logic_error("ring " + label_ + " was declared commutative but is not");
  commutative_ = commutes;
}

void FiniteRing::verify_axioms() const {
  auto check = [&](Elem a, Elem b, Elem c) {
    if (add(add(a, b), c) != add(a, add(b, c))) return "addition is not associative";
    if (add(a, b) != add(b, a)) return "addition is not commutative";
    if (add(a, 0) != a || add(a, neg(a)) != 0) return "additive identity or negation fails";
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return "multiplication is not associative";
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return "left distributivity fails";
    if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) return "right distributivity fails";
    if (mul(one_, a) != a || mul(a, one_) != a) return "one is not a two-sided identity";
    return static_cast<const char*>(nullptr);
  };
  auto fail = [&](const char* what) {
    throw std::logic_error("ring " + label_ + ": " + what);
  };
  if (size_ <= kExhaustiveAxiomSize) {
    for (Elem a = 0; a < size_; ++a)
      for (Elem b = 0; b < size_; ++b)
        for (Elem c = 0; c < size_; ++c)
          if (const char* what = check(a, b, c)) fail(what);
  } else {
    std::mt19937_64 rng(0xa11ce);
    std::uniform_int_distribution<Elem> pick(0, size_ - 1);
    for (std::size_t i = 0; i < kAxiomSamples; ++i) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      if (const char* what = check(a, b, c)) fail(what);
    }
  }
}

std::vector<bool> additive_span(const FiniteRing& r, const ElementList& gens) {
  require_bitmap(r);
  std::vector<bool> in(r.size(), false);
  ElementList members{0};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem g : gens) {
      Elem next = r.add(members[i], g);
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  }
  return in;
}

ElementList additive_generators_of(const FiniteRing& r, const ElementList& members) {
  // The span grows by whole cosets: after adding generator g, repeatedly
  // adding g to every member closes the list under the new subgroup.
  std::unordered_set<Elem> in{0};
  ElementList span{0};
  ElementList gens;
  for (Elem m : members) {
    if (in.count(m)) continue;
    gens.push_back(m);
    for (std::size_t i = 0; i < span.size(); ++i) {
      Elem next = r.add(span[i], m);
      if (in.insert(next).second) span.push_back(next);
    }
  }
  return gens;
}

bool is_ideal(const FiniteRing& r, const ElementList& carrier, Side side) {
  std::unordered_set<Elem> in(carrier.begin(), carrier.end());
  if (!in.count(0)) return false;
  ElementList gens = additive_generators_of(r, carrier);
  for (Elem c : carrier) {
    if (!in.count(r.neg(c))) return false;
    for (Elem g : gens)
      if (!in.count(r.add(c, g))) return false;
  }
  for (Elem c : gens) {
    for (Elem x : r.additive_generators()) {
      if (side != Side::Right && !in.count(r.mul(x, c))) return false;
      if (side != Side::Left && !in.count(r.mul(c, x))) return false;
    }
  }
  return true;
}

bool is_nilpotent(const FiniteRing& r, Elem a) {
  // a^(2^m) with 2^m >= size is zero whenever a is nilpotent.
  const int squarings = std::bit_width(r.size()) + 1;
  for (int i = 0; i < squarings && a != 0; ++i) a = r.mul(a, a);
  return a == 0;
}

ElementList units(const FiniteRing& r) {
  require_materializable(r);
  ElementList out;
  for (Elem a = 0; a < r.size(); ++a)
    if (r.is_unit(a)) out.push_back(a);
  return out;
}

ElementList nilpotents(const FiniteRing& r) {
  require_materializable(r);
  ElementList out;
  for (Elem a = 0; a < r.size(); ++a)
    if (is_nilpotent(r, a)) out.push_back(a);
  return out;
}

ElementList center(const FiniteRing& r) {
  require_materializable(r);
  const auto& gens = r.additive_generators();
  ElementList out;
  for (Elem a = 0; a < r.size(); ++a) {
    bool central = std::all_of(gens.begin(), gens.end(),
                               [&](Elem g) { return r.mul(a, g) == r.mul(g, a); });
    if (central) out.push_back(a);
  }
  return out;
}

namespace {

// a is left quasi-regular against every x iff 1 - x*a is always a unit.
bool in_radical(const FiniteRing& r, Elem a) {
  for (Elem x = 0; x < r.size(); ++x)
    if (!r.is_unit(r.sub(r.one(), r.mul(x, a)))) return false;
  return true;
}

}  // namespace

SubsetIdeal jacobson_radical(const FiniteRing& r) {
  require_materializable(r);
  SubsetIdeal j;
  for (Elem a = 0; a < r.size(); ++a)
    if (in_radical(r, a)) j.carrier.push_back(a);
  return j;
}

bool is_semisimple(const FiniteRing& r) {
  require_materializable(r);
  for (Elem a = 1; a < r.size(); ++a)
    if (in_radical(r, a)) return false;
  return true;
}

bool is_division_ring(const FiniteRing& r) {
  if (r.size() < 2) return false;
  for (Elem a = 1; a < r.size(); ++a)
    if (!r.is_unit(a)) return false;
  return true;
}

}  // namespace grings
