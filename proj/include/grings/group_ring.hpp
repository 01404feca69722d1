#pragma once

// The group ring RG of a finite group over a finite commutative ring.
//
// An element sum_g c_g g is stored as the mixed-radix index
// sum_g c_g * |R|^g, so the coefficient of the group identity (element 0 in
// every built-in group) is the least significant digit. Carriers above
// kMaterializeCap are never listed; scans stream indices instead.

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "grings/group.hpp"
#include "grings/linalg.hpp"
#include "grings/ring.hpp"

namespace grings {

/// Largest group-ring carrier the constructor accepts.
inline constexpr Elem kGroupRingSizeCap = Elem{1} << 40;

class GroupRing final : public FiniteRing {
 public:
  const FiniteRing& base() const noexcept { return *base_; }
  const RingPtr& base_ptr() const noexcept { return base_; }
  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }

  std::vector<Elem> coefficients(Elem a) const;
  Elem from_coefficients(const std::vector<Elem>& coeffs) const;
  /// c * g; c defaults to the base identity.
  Elem basis(GroupElem g) const;
  Elem basis(GroupElem g, Elem c) const;

  /// Classical involution induced by g -> g^-1.
  Elem involution(Elem a) const;
  /// Coefficient of the group identity.
  Elem trace(Elem a) const;
  /// Sum of the coefficients.
  Elem augmentation(Elem a) const;

  /// L with L * vec(b) = vec(a*b).
  CoeffMatrix left_mul_matrix(Elem a) const;
  /// R with R * vec(b) = vec(b*a).
  CoeffMatrix right_mul_matrix(Elem a) const;

  /// Whether annihilators and principal ideals go through linear algebra
  /// (field or Z/n base) rather than carrier scans.
  bool has_linear_solver() const noexcept { return solver_ != nullptr; }

  bool is_unit(Elem a) const override;
  Scan for_each_right_annihilator(Elem a, const ElementVisitor& visit) const override;
  Scan for_each_left_annihilator(Elem a, const ElementVisitor& visit) const override;
  std::unique_ptr<ElementSet> right_multiples(Elem a) const override;
  std::unique_ptr<ElementSet> left_multiples(Elem a) const override;

  /// Literal syntax such as "1 + x + 2*x^2*y" or "(t+1)*x".
  std::string format(Elem a) const override;
  Elem parse(std::string_view text) const override;

 private:
  friend std::shared_ptr<const GroupRing> make_group_ring(const RingPtr& base,
                                                          const GroupPtr& group, Elem cap);
  GroupRing(RingPtr base, GroupPtr group, Elem size, std::string label);
  Elem raw_add(Elem a, Elem b) const override;
  Elem raw_mul(Elem a, Elem b) const override;
  Elem raw_neg(Elem a) const override;
  Elem raw_one() const override;
  ElementList compute_additive_generators() const override;

  Scan kernel(const CoeffMatrix& m, const ElementVisitor& visit) const;

  RingPtr base_;
  GroupPtr group_;
  std::size_t n_;  // group order
  Elem q_;         // base size
  std::unique_ptr<CoefficientSolver> solver_;
};

/// Requires a commutative base and |R|^|G| <= cap.
std::shared_ptr<const GroupRing> make_group_ring(const RingPtr& base, const GroupPtr& group,
                                                 Elem cap = kGroupRingSizeCap);

/// Label of R[G] as produced by make_group_ring.
std::string group_ring_label(const FiniteRing& base, const FiniteGroup& group);

/// Value-type view of an element of a group ring.
class GroupRingElement {
 public:
  GroupRingElement(std::shared_ptr<const GroupRing> parent, std::vector<Elem> coeffs);
  static GroupRingElement from_index(std::shared_ptr<const GroupRing> parent, Elem index);
  static GroupRingElement parse(std::shared_ptr<const GroupRing> parent, std::string_view text);

  const std::shared_ptr<const GroupRing>& parent() const noexcept { return parent_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem index() const { return parent_->from_coefficients(coeffs_); }
  std::string to_string() const { return parent_->format(index()); }

  bool operator==(const GroupRingElement& o) const {
    return parent_ == o.parent_ && coeffs_ == o.coeffs_;
  }

 private:
  std::shared_ptr<const GroupRing> parent_;
  std::vector<Elem> coeffs_;
};

/// Throws std::invalid_argument when the operands live in different rings.
GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement involution(const GroupRingElement& a);
Elem trace(const GroupRingElement& a);
Elem augmentation(const GroupRingElement& a);

/// {"ring", "base", "group", "coefficients", "literal"}.
nlohmann::json to_json(const GroupRingElement& a);
GroupRingElement element_from_json(std::shared_ptr<const GroupRing> parent,
                                   const nlohmann::json& j);

}  // namespace grings
