#pragma once

// Finite groups given by explicit multiplication tables.
//
// Elements are dense indices 0..order-1. Every group carries a list of named
// generators so that elements can be printed and parsed as words such as
// "x^2*y". Groups are immutable once constructed and safe to share.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace grings {

using GroupElem = std::uint32_t;

/// Default upper bound on group orders accepted by the constructors.
inline constexpr std::size_t kDefaultGroupOrderCap = 256;

struct Generator {
  std::string name;
  GroupElem element;
};

class FiniteGroup {
 public:
  /// Validates the table (Latin square, identity, associativity) and derives
  /// the inverse table. Throws std::invalid_argument on a malformed table.
  FiniteGroup(std::size_t order, std::vector<GroupElem> mul_table,
              GroupElem identity, std::string label,
              std::vector<Generator> generators,
              std::vector<std::string> element_names);

  std::size_t order() const noexcept { return order_; }
  GroupElem identity() const noexcept { return identity_; }
  const std::string& label() const noexcept { return label_; }

  GroupElem mul(GroupElem a, GroupElem b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  GroupElem inv(GroupElem a) const noexcept { return inv_[a]; }
  GroupElem pow(GroupElem a, std::uint64_t k) const noexcept;

  const std::vector<GroupElem>& table() const noexcept { return table_; }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  const std::string& element_name(GroupElem e) const { return names_.at(e); }

  bool is_abelian() const noexcept;

  /// Parses a word like "x^3*y" over the named generators.
  GroupElem parse_word(std::string_view word) const;

 private:
  std::size_t order_;
  std::vector<GroupElem> table_;
  GroupElem identity_;
  std::vector<GroupElem> inv_;
  std::string label_;
  std::vector<Generator> gens_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_cyclic(std::size_t n);
GroupPtr make_quaternion8();
GroupPtr make_dihedral(std::size_t n);
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h,
                        std::size_t order_cap = kDefaultGroupOrderCap);

std::uint64_t element_order(const FiniteGroup& g, GroupElem e);

/// Sorted element list of the cyclic subgroup generated by e.
std::vector<GroupElem> cyclic_subgroup(const FiniteGroup& g, GroupElem e);

/// Closure of a generating set under multiplication (a finite group needs no
/// inverses). Returned sorted.
std::vector<GroupElem> generated_subgroup(const FiniteGroup& g,
                                          const std::vector<GroupElem>& gens);

/// True iff every conjugate a*s*a^-1 stays in s. Throws std::invalid_argument
/// when s is not a subgroup.
bool is_normal(const FiniteGroup& g, const std::vector<GroupElem>& s);

/// Non-abelian with every cyclic subgroup normal.
bool is_hamiltonian(const FiniteGroup& g);

/// All subgroups, found by joining cyclic subgroups until no new subgroup
/// appears. Meant for small groups.
std::vector<std::vector<GroupElem>> all_subgroups(const FiniteGroup& g);

std::size_t conjugacy_class_count(const FiniteGroup& g);

/// Parses the group mini-language: `Q8`, `C<n>`, `D<n>`, joined by `x`
/// (left-associative products), e.g. `Q8xC2xC3`.
GroupPtr parse_group(std::string_view expr,
                     std::size_t order_cap = kDefaultGroupOrderCap);

}  // namespace grings
