#pragma once

// Witness-producing decision procedures for ring properties.
//
// Every checker scans candidates in the canonical element order (ascending
// index). A Fails verdict carries the lexicographically first violating
// tuple found for the first failing leading element; a Holds verdict is
// always certified by an exhausted search. Budgets bound the work; running
// out yields Unknown. Random mode samples leading elements with a seeded
// generator and can only return Fails or Unknown (or a structural Holds
// such as the commutative short-circuit).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grings/ring.hpp"

namespace grings {

enum class Property { Reduced, Reversible, Symmetric, SI, DuoLeft, DuoRight, Duo, TwoPrimal };
enum class Status { Holds, Fails, Unknown };
enum class Mode { Deterministic, Random };

/// CLI spellings: reduced, reversible, symmetric, si, duo-left, duo-right,
/// duo, 2primal.
std::string to_string(Property p);
std::optional<Property> property_from_string(std::string_view s);
std::string to_string(Status s);
std::string to_string(Mode m);

struct Budget {
  std::uint64_t max_pairs = std::uint64_t{1} << 24;
  std::uint64_t max_triples = std::uint64_t{1} << 26;
  Mode mode = Mode::Deterministic;
  std::uint64_t seed = 0;
};

struct Witness {
  /// Which condition failed, e.g. "ab=0, ba!=0" or "right".
  std::string kind;
  std::vector<std::string> roles;  // names of the tuple entries
  ElementList elements;
  std::vector<std::string> rendered;
};

struct PropertyVerdict {
  Property property = Property::Reduced;
  Status status = Status::Unknown;
  std::optional<Witness> witness;
  std::uint64_t work = 0;
  bool certified = false;
  std::string method;
  std::string ring;
  Mode mode = Mode::Deterministic;
  std::uint64_t seed = 0;
};

/// {ring, property, status, witness?, certified, work, mode, seed?, method}.
nlohmann::json to_json(const PropertyVerdict& v);

PropertyVerdict check_reduced(const FiniteRing& r, const Budget& budget = {});
PropertyVerdict check_reversible(const FiniteRing& r, const Budget& budget = {});
PropertyVerdict check_symmetric(const FiniteRing& r, const Budget& budget = {});
PropertyVerdict check_si(const FiniteRing& r, const Budget& budget = {});
/// Side::Right decides right duo, Side::Left left duo, Side::TwoSided both.
PropertyVerdict check_duo(const FiniteRing& r, Side side, const Budget& budget = {});
PropertyVerdict check_two_primal(const FiniteRing& r, const Budget& budget = {});

PropertyVerdict check_property(const FiniteRing& r, Property p, const Budget& budget = {});

/// Replays a Fails witness through the raw definition of its property.
/// Returns false when the verdict is not Fails or the violation does not
/// reproduce.
bool revalidate(const FiniteRing& r, const PropertyVerdict& v);

struct AuditEdge {
  Property from;
  Property to;
};

/// Edges of the implication diagram checked by the audit.
const std::vector<AuditEdge>& audit_edges();

struct AuditRingRow {
  std::string ring;
  std::vector<PropertyVerdict> verdicts;  // indexed by Property
  const PropertyVerdict& operator[](Property p) const {
    return verdicts[static_cast<std::size_t>(p)];
  }
};

struct AuditViolation {
  std::string ring;
  AuditEdge edge;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditRingRow> rows;
  std::vector<AuditViolation> violations;
  std::uint64_t edges_checked = 0;
  std::uint64_t edges_not_evaluated = 0;

  /// The implication diagram with per-ring marks (+ holds, - fails,
  /// ? unknown).
  std::string diagram() const;
};

AuditReport implication_audit(const std::vector<RingPtr>& corpus, const Budget& budget = {});

nlohmann::json to_json(const AuditReport& report);

}  // namespace grings
