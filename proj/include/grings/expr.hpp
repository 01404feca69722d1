#pragma once

// Ring mini-language used by the CLI and the scenario table:
//
//   ring  := term ("(+)" term)*
//   term  := atom ("[" group "]")*
//   atom  := "Z/" n | "GF(" p ")" | "GF(" p "^" k ")" | "GF(" q ")"
//          | "M" n "(" ring ")" | "(" ring ")"
//
// `R[G]` builds the group ring of the group expression G over R. Every
// label produced by the constructors parses back to the same construction.

#include <string_view>

#include "grings/group_ring.hpp"
#include "grings/ring.hpp"

namespace grings {

RingPtr parse_ring(std::string_view expr, Elem cap = kDefaultRingSizeCap);

/// parse_ring(ring_expr) followed by the group ring over parse_group(group_expr).
std::shared_ptr<const GroupRing> parse_group_ring(std::string_view ring_expr,
                                                  std::string_view group_expr);

}  // namespace grings
