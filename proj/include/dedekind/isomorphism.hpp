#pragma once

#include "dedekind/group.hpp"

#include <optional>

namespace dedekind {

// Searches for an isomorphism g -> h by mapping a small generating tuple of g to
// tuples of h with matching element orders and centralizer sizes, extending each
// partial assignment over the generated subgroup and backtracking on conflict.
// Throws IsoCapExceeded if either order is above limits.iso_cap.
std::optional<Homomorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

}  // namespace dedekind
