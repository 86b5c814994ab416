#pragma once

#include "dedekind/group.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dedekind {

struct Subgroup {
  ElementSet members;
  std::size_t order = 0;
  std::vector<Element> generators;  // generates `members` inside the parent group
};

// Canonical subgroup order: by order, then by the ascending member list
// compared lexicographically. Part of the output contract (JSON, DOT).
bool canonical_less(const ElementSet& a, const ElementSet& b);

// Bitset over the subgroup indices of one lattice.
using SubgroupMask = boost::dynamic_bitset<std::uint64_t>;

// Every subgroup of a group, in canonical order, with containment and the
// partition into conjugacy classes. Immutable once built.
class SubgroupLattice {
 public:
  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }

  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  std::optional<std::size_t> find(const ElementSet& members) const;

  static constexpr std::size_t trivial_index() { return 0; }
  std::size_t whole_index() const { return subgroups_.size() - 1; }

  // inner is a subgroup of outer
  bool contains(std::size_t inner, std::size_t outer) const { return below_[outer].test(inner); }
  const SubgroupMask& below(std::size_t j) const { return below_[j]; }
  const SubgroupMask& above(std::size_t i) const { return above_[i]; }
  // All pairs (i, j), i != j, with subgroup i strictly inside subgroup j.
  std::vector<std::pair<std::size_t, std::size_t>> containment_pairs() const;

  // Classes ordered by their smallest member index, which is the representative.
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }
  std::size_t class_size(std::size_t i) const { return classes_[class_of_[i]].size(); }
  bool is_normal(std::size_t i) const { return class_size(i) == 1; }

  std::size_t k_prime() const { return classes_.size(); }
  std::size_t normal_count() const;
  std::size_t nu() const { return k_prime() - normal_count(); }

  // Smallest subgroup containing both / largest contained in both.
  std::size_t join(std::size_t i, std::size_t j) const;
  std::size_t meet(std::size_t i, std::size_t j) const;

  // Index of x S_i x^-1.
  std::size_t conjugate_index(std::size_t i, Element x) const;

  // Subgroups covered by subgroup j (maximal subgroups of S_j).
  std::vector<std::size_t> maximal_below(std::size_t j) const;

 private:
  friend SubgroupLattice all_subgroups(std::shared_ptr<const FiniteGroup> g, const Limits& limits);

  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, std::size_t> index_;
  std::vector<SubgroupMask> below_;
  std::vector<SubgroupMask> above_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

// Cyclic-extension enumeration: start from all cyclic subgroups and extend each
// known subgroup H by one element per right coset of H until no new subgroup
// appears. Throws OrderCapExceeded / LatticeBudgetExceeded.
SubgroupLattice all_subgroups(std::shared_ptr<const FiniteGroup> g, const Limits& limits = {});
SubgroupLattice all_subgroups(const FiniteGroup& g, const Limits& limits = {});

ElementSet conjugate_subgroup(const FiniteGroup& g, const ElementSet& subgroup, Element x);
const std::vector<std::vector<std::size_t>>& conjugacy_classes(const SubgroupLattice& lattice);
std::size_t nu(const SubgroupLattice& lattice);
std::size_t normal_subgroup_count(const SubgroupLattice& lattice);

// Element-level lattice operations (closure of the union / intersection).
ElementSet join(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);
ElementSet meet(const ElementSet& a, const ElementSet& b);

struct ModularityResult {
  bool modular = true;
  // First (X, Y, Z) with X <= Z and X v (Y ^ Z) != (X v Y) ^ Z, in
  // lexicographic order of subgroup indices.
  std::optional<std::array<std::size_t, 3>> violation;
};
// Unless `exhaustive`, a lattice whose members are all normal is reported
// modular without a scan (normal subgroups always form a modular lattice).
ModularityResult is_lattice_modular(const SubgroupLattice& lattice, bool exhaustive = false);

// Covering pairs (i, j): S_i < S_j with nothing strictly between.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const SubgroupLattice& lattice);

// Intersection of the maximal subgroups of S_i (of the whole group by default).
ElementSet frattini_subgroup(const SubgroupLattice& lattice);
ElementSet frattini_subgroup(const SubgroupLattice& lattice, std::size_t i);

// Graphviz digraph of the Hasse diagram, bottom to top.
std::string to_dot(const SubgroupLattice& lattice, const std::string& title = "lattice");

}  // namespace dedekind
