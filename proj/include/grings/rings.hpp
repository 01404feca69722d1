#pragma once

// Concrete finite rings: Z/n, GF(p^k), full matrix rings, direct sums and
// subrings carried by a subset of a parent ring (corner rings e*R*e).

#include <cstdint>
#include <vector>

#include "grings/ring.hpp"

namespace grings {

class ZModRing final : public FiniteRing {
 public:
  std::uint64_t modulus() const noexcept { return size(); }
  std::string format(Elem a) const override { return std::to_string(a); }

 private:
  friend RingPtr make_zmod(std::uint64_t n);
  explicit ZModRing(std::uint64_t n);
  Elem raw_add(Elem a, Elem b) const override;
  Elem raw_mul(Elem a, Elem b) const override;
  Elem raw_neg(Elem a) const override;
  Elem raw_one() const override { return size() > 1 ? 1 : 0; }
  ElementList compute_additive_generators() const override { return {raw_one()}; }
};

/// GF(p^k) as Z/p[t]/(modulus). Element index = sum c_i p^i where c_i is
/// the coefficient of t^i.
class GaloisField final : public FiniteRing {
 public:
  std::uint64_t prime() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  std::string format(Elem a) const override;
  Elem parse(std::string_view text) const override;

 private:
  friend RingPtr make_gf(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);
  GaloisField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);
  Elem raw_add(Elem a, Elem b) const override;
  Elem raw_mul(Elem a, Elem b) const override;
  Elem raw_neg(Elem a) const override;
  Elem raw_one() const override { return 1; }
  ElementList compute_additive_generators() const override;

  std::uint64_t p_;
  unsigned k_;
  std::vector<std::uint64_t> modulus_;  // monic, low degree first, size k+1
};

/// n x n matrices over a base ring; entry (i, j) is digit i*n + j of the
/// mixed-radix index (first entry least significant).
class MatrixRing final : public FiniteRing {
 public:
  const FiniteRing& base() const noexcept { return *base_; }
  unsigned dimension() const noexcept { return n_; }
  Elem entry(Elem a, unsigned i, unsigned j) const;
  Elem from_entries(const std::vector<Elem>& entries) const;
  std::string format(Elem a) const override;
  Elem parse(std::string_view text) const override;

 private:
  friend RingPtr make_matrix_ring(const RingPtr& base, unsigned n, Elem cap);
  MatrixRing(RingPtr base, unsigned n, Elem size);
  std::vector<Elem> entries(Elem a) const;
  Elem raw_add(Elem a, Elem b) const override;
  Elem raw_mul(Elem a, Elem b) const override;
  Elem raw_neg(Elem a) const override;
  Elem raw_one() const override;
  ElementList compute_additive_generators() const override;

  RingPtr base_;
  unsigned n_;
};

/// Componentwise ring on the product of the parts; part 0 is the least
/// significant digit of the index.
class DirectSumRing final : public FiniteRing {
 public:
  const std::vector<RingPtr>& parts() const noexcept { return parts_; }
  std::vector<Elem> components(Elem a) const;
  Elem from_components(const std::vector<Elem>& comps) const;
  /// Embeds an element of one part (other components zero).
  Elem embed(std::size_t part, Elem x) const;
  std::string format(Elem a) const override;
  Elem parse(std::string_view text) const override;

 private:
  friend RingPtr direct_sum(const std::vector<RingPtr>& parts, Elem cap);
  DirectSumRing(std::vector<RingPtr> parts, Elem size, std::string label);
  Elem raw_add(Elem a, Elem b) const override;
  Elem raw_mul(Elem a, Elem b) const override;
  Elem raw_neg(Elem a) const override;
  Elem raw_one() const override;
  ElementList compute_additive_generators() const override;

  std::vector<RingPtr> parts_;
};

/// A subring of `parent` with its own identity, carried by a sorted subset
/// that contains zero (e.g. the corner ring e*R*e of an idempotent e).
class SubsetRing final : public FiniteRing {
 public:
  const FiniteRing& parent() const noexcept { return *parent_; }
  Elem to_parent(Elem a) const { return carrier_[a]; }
  Elem from_parent(Elem x) const;
  std::string format(Elem a) const override { return parent_->format(carrier_[a]); }
  Elem parse(std::string_view text) const override;

 private:
  friend RingPtr make_subset_ring(const RingPtr& parent, ElementList carrier,
                                  Elem identity, std::string label);
  SubsetRing(RingPtr parent, ElementList carrier, Elem identity, std::string label);
  Elem raw_add(Elem a, Elem b) const override;
  Elem raw_mul(Elem a, Elem b) const override;
  Elem raw_neg(Elem a) const override;
  Elem raw_one() const override { return from_parent(identity_); }

  RingPtr parent_;
  ElementList carrier_;
  Elem identity_;
};

RingPtr make_zmod(std::uint64_t n);

/// `modulus` lists the coefficients of a monic degree-k polynomial, constant
/// term first. It must be irreducible over Z/p (checked for k <= 4).
RingPtr make_gf(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

/// GF(p^k) with the built-in modulus for (p, k).
RingPtr make_gf(std::uint64_t p, unsigned k);

/// Smallest monic irreducible polynomial of degree k over Z/p in the order
/// that compares coefficient lists from the constant term up.
std::vector<std::uint64_t> default_irreducible(std::uint64_t p, unsigned k);

bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& monic);

RingPtr make_matrix_ring(const RingPtr& base, unsigned n, Elem cap = kDefaultRingSizeCap);
RingPtr direct_sum(const std::vector<RingPtr>& parts, Elem cap = kDefaultRingSizeCap);
RingPtr make_subset_ring(const RingPtr& parent, ElementList carrier, Elem identity,
                         std::string label);

bool is_prime(std::uint64_t n);

}  // namespace grings
