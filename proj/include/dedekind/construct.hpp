#pragma once

#include "dedekind/group.hpp"
#include "dedekind/perm.hpp"

#include <span>
#include <vector>

namespace dedekind {

// Group generated by permutations, by breadth-first word closure. Element 0 is
// the identity; the remaining elements appear in discovery order.
FiniteGroup closure_from_generators(std::span<const Perm> gens, std::size_t max_order);

// Element (g, h) has index g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

// action[h][n] is the image of n under h. Element (n, h) has index h * |N| + n and
// (n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2).
using Action = std::vector<std::vector<Element>>;
FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting, const Action& action,
                               const Limits& limits = {});

struct Quotient {
  FiniteGroup group;
  Homomorphism projection;  // G -> G/N, onto
};

// Cosets are numbered by their smallest element, so the identity coset is 0.
Quotient quotient(const FiniteGroup& g, const ElementSet& normal);

// The subgroup `members` as a group in its own right. embedding[i] is the parent
// index of local element i; members are re-indexed in increasing parent order.
struct InducedSubgroup {
  FiniteGroup group;
  std::vector<Element> embedding;
};
InducedSubgroup induced_subgroup(const FiniteGroup& g, const ElementSet& members);

// Subgroup generated by `gens`.
ElementSet closure(const FiniteGroup& g, std::span<const Element> gens);

// <base, extra> where `base` is a subgroup generated by `base_gens`.
ElementSet extend_closure(const FiniteGroup& g, const ElementSet& base, std::span<const Element> base_gens,
                          Element extra);

bool is_subgroup(const FiniteGroup& g, const ElementSet& set);
bool is_normal(const FiniteGroup& g, const ElementSet& subgroup);
// Normal in the subgroup generated by `gens` (assumed to contain `subgroup`).
bool is_normalized_by(const FiniteGroup& g, const ElementSet& subgroup, std::span<const Element> gens);

// { x h x^-1 : h in set }
ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& set, Element x);

}  // namespace dedekind
