#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dedekind {

using Element = std::uint32_t;

// Membership bitset over the element indices of a parent group.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

struct Limits {
  std::size_t max_order = 512;
  std::size_t iso_cap = 128;
  std::size_t lattice_budget = 100000;

  // Tables are order^2 indices; this is the largest cap accepted from configuration.
  static constexpr std::size_t kHardOrderCap = 2048;
};

// A finite group stored as its full multiplication table.
// Element 0 is always the identity.
class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup();

  // Validates the Latin-square and identity axioms and derives inverses.
  // The identity is relabelled to index 0 if it is elsewhere. Associativity is
  // not checked here (see check_associativity).
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table,
                                std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element pow(Element a, long long k) const;
  Element conjugate(Element g, Element h) const { return mul(mul(g, h), inverse_[g]); }  // g h g^-1
  Element commutator(Element a, Element b) const;  // a^-1 b^-1 a b

  std::size_t element_order(Element a) const { return element_order_[a]; }
  const std::vector<std::uint32_t>& element_orders() const { return element_order_; }

  bool is_abelian() const;
  // Full O(n^3) check; throws InvalidTable on the first failing triple.
  void check_associativity() const;

  std::string label(Element a) const;
  const std::vector<std::string>& labels() const { return labels_; }

  ElementSet empty_set() const { return ElementSet(order_); }
  ElementSet full_set() const;

  std::span<const Element> table() const { return table_; }

 private:
  std::size_t order_ = 1;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::vector<std::string> labels_;
};

// Group homomorphism given by the image of every source element.
struct Homomorphism {
  std::vector<Element> map;
};

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     std::span<const Element> map);
bool is_bijective(std::size_t target_order, std::span<const Element> map);

std::vector<Element> to_elements(const ElementSet& set);
ElementSet to_set(std::size_t order, std::span<const Element> elements);

}  // namespace dedekind
