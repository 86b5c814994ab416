#pragma once

#include "dedekind/families.hpp"
#include "dedekind/group.hpp"
#include "dedekind/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dedekind {

// A direct product of family atoms, e.g. "C(3) x D(8)".
//
//   spec := atom ("x" atom)*
//   atom := TAG "(" int ("," int)* ")" | TAG
//
// TAG is one of the names in family_tags(); parameterless atoms (C27Q8, V4C4)
// are written without parentheses. Whitespace is ignored.
struct GroupSpec {
  std::vector<FamilyAtom> atoms;

  static GroupSpec parse(std::string_view text);
  // Canonical form: atoms joined by " x ", no spaces inside atoms.
  std::string str() const;
  BigInt order() const;
  // Builds the product left to right. Throws OrderCapExceeded when the product
  // order exceeds limits.max_order, before building anything.
  FiniteGroup build(const Limits& limits = {}) const;

  bool operator==(const GroupSpec&) const = default;
};

inline GroupSpec parse_spec(std::string_view text) { return GroupSpec::parse(text); }

}  // namespace dedekind
