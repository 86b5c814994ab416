#pragma once

#include "dedekind/group.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace dedekind {

ElementSet center(const FiniteGroup& g);
ElementSet derived_subgroup(const FiniteGroup& g);
ElementSet centralizer(const FiniteGroup& g, Element x);
ElementSet normalizer(const FiniteGroup& g, const ElementSet& subgroup);

// Isomorphism-invariant summary used to prune isomorphism tests.
struct GroupFingerprint {
  std::size_t order = 0;
  std::vector<std::pair<std::size_t, std::size_t>> order_histogram;  // (element order, count), ascending
  bool abelian = false;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;

  bool operator==(const GroupFingerprint&) const = default;
};

struct GroupFingerprintHash {
  std::size_t operator()(const GroupFingerprint& f) const;
};

GroupFingerprint fingerprint(const FiniteGroup& g);

// A generating set picked by descending element order; cheap, not minimal.
std::vector<Element> generators(const FiniteGroup& g);

// Greedy small generating tuple: each step adds the element that enlarges the
// generated subgroup the most (ties to the smallest index).
std::vector<Element> small_generating_set(const FiniteGroup& g);

}  // namespace dedekind
