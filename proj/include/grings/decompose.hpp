#pragma once

// Central idempotent decomposition of a finite ring and the harnesses that
// compare ring properties with the shape of the decomposition.

#include <string>
#include <vector>

#include <json.hpp>

#include "grings/group.hpp"
#include "grings/properties.hpp"
#include "grings/ring.hpp"

namespace grings {

/// Centers above this size are not enumerated.
inline constexpr Elem kCenterCap = Elem{1} << 16;

enum class FactorKind { DivisionRing, MatrixLike, Other };
std::string to_string(FactorKind k);

struct DecompositionChecks {
  bool idempotent = false;
  bool central = false;
  bool orthogonal = false;
  bool sums_to_one = false;
  bool primitive = false;
  bool sizes_multiply = false;
  bool reassembly = false;
  bool all() const {
    return idempotent && central && orthogonal && sums_to_one && primitive && sizes_multiply &&
           reassembly;
  }
};

struct Decomposition {
  std::string ring;
  std::size_t central_idempotent_count = 0;
  /// Primitive central idempotents in ascending index order.
  ElementList idempotents;
  std::vector<std::string> rendered;
  /// Corner rings e*R*e (= e*R, e central) with identity e.
  std::vector<RingPtr> factors;
  std::vector<FactorKind> kinds;
  DecompositionChecks checks;

  std::vector<Elem> factor_sizes() const;
};

/// Throws CapExceeded when the center or the carrier is too large.
Decomposition central_idempotent_decomposition(const RingPtr& r);

/// No two-sided ideals besides 0 and the ring (ideal generated by each
/// nonzero element is the whole ring).
bool is_simple(const FiniteRing& r);

/// {ring, idempotents, factor_sizes, factor_kinds, checks}.
nlohmann::json to_json(const Decomposition& d);

/// The four properties compared by the semisimple harness.
const std::vector<Property>& semisimple_properties();

struct SemisimpleReport {
  std::string ring;
  bool base_semisimple = false;
  bool order_invertible = false;
  bool hypothesis() const { return base_semisimple && order_invertible; }
  std::vector<PropertyVerdict> verdicts;  // in semisimple_properties() order
  Decomposition decomposition;
  bool all_division = false;
  /// Evaluated only when the hypothesis holds: one shared certified status,
  /// Holds exactly when every factor is a division ring.
  bool asserted = false;
  bool consistent = false;
  std::string note;
};

SemisimpleReport verify_semisimple_equivalences(const RingPtr& base, const GroupPtr& g,
                                                const Budget& budget = {});

struct ComparisonRow {
  Property property;
  std::vector<Status> parts;
  Status sum = Status::Unknown;
  bool certified = false;
  bool consistent = false;
};

struct DirectSumReport {
  std::string ring;
  std::vector<ComparisonRow> rows;
  bool consistent() const;
};

/// For duo, reversible, symmetric and SI: the direct sum has the property
/// iff every part has it.
DirectSumReport verify_direct_sum_lemma(const std::vector<RingPtr>& parts,
                                        const Budget& budget = {});

struct SplittingReport {
  std::string ring;
  std::vector<std::string> factor_rings;  // labels of the D_i G
  std::vector<ComparisonRow> rows;             // parts = factor group rings
  bool consistent() const;
};

/// For semisimple commutative R = sum of fields D_i: property(RG) equals
/// the conjunction of property(D_i G) for the four properties.
SplittingReport verify_base_splitting(const RingPtr& base, const GroupPtr& g,
                                      const Budget& budget = {});

/// For a semisimple commutative ring: every decomposition factor is a field.
/// Returns false when the ring is not commutative and semisimple.
bool commutative_factors_are_fields(const RingPtr& r);

}  // namespace grings
