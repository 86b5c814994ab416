#pragma once

#include "dedekind/group.hpp"

#include <vector>

namespace dedekind {

// Every subgroup by brute force: each subgroup is a union of cyclic subgroups,
// so every union of a set of cyclic subgroups is tested for closure. Intended
// for orders up to about 24; independent of the lattice enumeration.
std::vector<ElementSet> brute_force_subgroups(const FiniteGroup& g);

}  // namespace dedekind
