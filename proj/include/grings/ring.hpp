#pragma once

// Uniform contract for a finite ring with identity.
//
// Elements are dense indices 0..size-1 and zero is always index 0. Concrete
// rings implement the raw_* arithmetic; rings of size <= kTableCap get
// memoized operation tables built once in finalize(). Rings are immutable
// after construction and every query is safe to call concurrently.

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace grings {

using Elem = std::uint64_t;
using ElementList = std::vector<Elem>;

/// Return false to stop an enumeration early.
using ElementVisitor = std::function<bool(Elem)>;

/// Carriers above this size are streamed, never materialized as lists.
inline constexpr Elem kMaterializeCap = Elem{1} << 20;

/// Default size cap for derived constructions (matrix rings, direct sums).
inline constexpr Elem kDefaultRingSizeCap = Elem{1} << 20;

/// Membership oracle for a subset of a ring (for example a principal ideal).
class ElementSet {
 public:
  virtual ~ElementSet() = default;
  virtual bool contains(Elem e) const = 0;
};

class FiniteRing {
 public:
  static constexpr Elem kTableCap = 4096;

  virtual ~FiniteRing() = default;
  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  Elem size() const noexcept { return size_; }
  static constexpr Elem zero() noexcept { return 0; }
  Elem one() const noexcept { return one_; }
  /// Additive order of one.
  std::uint64_t characteristic() const noexcept { return characteristic_; }
  bool is_commutative() const noexcept { return commutative_; }
  const std::string& label() const noexcept { return label_; }

  Elem add(Elem a, Elem b) const {
    return tables_ ? add_tab_[a * size_ + b] : raw_add(a, b);
  }
  Elem mul(Elem a, Elem b) const {
    return tables_ ? mul_tab_[a * size_ + b] : raw_mul(a, b);
  }
  Elem neg(Elem a) const { return tables_ ? neg_tab_[a] : raw_neg(a); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  /// k copies of a added together.
  Elem times(Elem a, std::uint64_t k) const;

  /// Human-readable rendering; parse() accepts what format() produces.
  virtual std::string format(Elem a) const;
  virtual Elem parse(std::string_view text) const;

  /// A generating set of the additive group. Many checks only need to test
  /// a linear condition on these instead of on every element.
  const ElementList& additive_generators() const;

  virtual bool is_unit(Elem a) const;

  /// Outcome of an enumeration: whether it ran to the end, and how many
  /// candidate elements were examined to produce it.
  struct Scan {
    bool completed = true;
    std::uint64_t examined = 0;
  };

  /// Visits every b with a*b == 0 (right) or b*a == 0 (left). The visiting
  /// order is implementation-defined. The generic version scans the whole
  /// carrier; structured rings override it with linear algebra.
  virtual Scan for_each_right_annihilator(Elem a, const ElementVisitor& visit) const;
  virtual Scan for_each_left_annihilator(Elem a, const ElementVisitor& visit) const;

  /// The principal right ideal a*R and principal left ideal R*a.
  virtual std::unique_ptr<ElementSet> right_multiples(Elem a) const;
  virtual std::unique_ptr<ElementSet> left_multiples(Elem a) const;

 protected:
  FiniteRing(Elem size, std::string label);

  virtual Elem raw_add(Elem a, Elem b) const = 0;
  virtual Elem raw_mul(Elem a, Elem b) const = 0;
  virtual Elem raw_neg(Elem a) const = 0;
  virtual Elem raw_one() const = 0;
  virtual ElementList compute_additive_generators() const;

  /// Must be called by every factory once the object is fully constructed:
  /// builds tables, derives one and the characteristic, and verifies the
  /// ring axioms (exhaustively up to 256 elements, sampled above) together
  /// with the claimed commutativity. Throws std::logic_error on violation.
  void finalize(bool claims_commutative);

 private:
  void verify_axioms() const;

  Elem size_;
  std::string label_;
  Elem one_ = 0;
  std::uint64_t characteristic_ = 0;
  bool commutative_ = false;
  bool tables_ = false;
  std::vector<std::uint16_t> add_tab_, mul_tab_, neg_tab_;

  mutable std::once_flag gens_once_;
  mutable ElementList gens_;
  mutable std::once_flag units_once_;
  mutable std::vector<bool> units_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Additive subgroup generated by `gens`, as a membership bitmap over the
/// carrier. Requires size <= kMaterializeCap.
std::vector<bool> additive_span(const FiniteRing& r, const ElementList& gens);

/// Greedy additive generating set for an additive subgroup given by its
/// members (sorted or not).
ElementList additive_generators_of(const FiniteRing& r, const ElementList& members);

enum class Side { Left, Right, TwoSided };

struct SubsetIdeal {
  ElementList carrier;  // sorted
  Side side = Side::TwoSided;
};

/// Checks closure under addition and negation and absorption on the declared
/// side(s).
bool is_ideal(const FiniteRing& r, const ElementList& carrier, Side side);

bool is_nilpotent(const FiniteRing& r, Elem a);

ElementList units(const FiniteRing& r);
ElementList nilpotents(const FiniteRing& r);
ElementList center(const FiniteRing& r);
SubsetIdeal jacobson_radical(const FiniteRing& r);
bool is_semisimple(const FiniteRing& r);
bool is_division_ring(const FiniteRing& r);

}  // namespace grings
