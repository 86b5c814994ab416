#include "dedekind/lattice.hpp"

#include "dedekind/construct.hpp"
#include "dedekind/error.hpp"
#include "dedekind/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dedekind {

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  ElementSet diff = a ^ b;
  const auto d = diff.find_first();
  if (d == ElementSet::npos) return false;
  return a.test(d);
}

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> SubgroupLattice::containment_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < size(); ++j)
    for (auto i = below_[j].find_first(); i != SubgroupMask::npos; i = below_[j].find_next(i))
      if (i != j) pairs.emplace_back(i, j);
  return pairs;
}

std::size_t SubgroupLattice::normal_count() const {
  return static_cast<std::size_t>(
      std::count_if(classes_.begin(), classes_.end(), [](const auto& c) { return c.size() == 1; }));
}

std::size_t SubgroupLattice::join(std::size_t i, std::size_t j) const {
  SubgroupMask common = above_[i] & above_[j];
  return common.find_first();
}

std::size_t SubgroupLattice::meet(std::size_t i, std::size_t j) const {
  return index_.at(subgroups_[i].members & subgroups_[j].members);
}

std::size_t SubgroupLattice::conjugate_index(std::size_t i, Element x) const {
  return index_.at(conjugate_set(*group_, subgroups_[i].members, x));
}

std::vector<std::size_t> SubgroupLattice::maximal_below(std::size_t j) const {
  std::vector<std::size_t> out;
  for (auto i = below_[j].find_first(); i != SubgroupMask::npos; i = below_[j].find_next(i)) {
    if (i == j) continue;
    if ((above_[i] & below_[j]).count() == 2) out.push_back(i);
  }
  return out;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t root(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = root(a);
    b = root(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

SubgroupLattice all_subgroups(std::shared_ptr<const FiniteGroup> gp, const Limits& limits) {
  const FiniteGroup& g = *gp;
  const std::size_t n = g.order();
  if (n > limits.max_order) throw OrderCapExceeded("group order " + std::to_string(n) + " exceeds cap " +
                                                   std::to_string(limits.max_order));

  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t> index;
  auto insert = [&](ElementSet members, std::vector<Element> gens) {
    if (index.contains(members)) return;
    if (found.size() >= limits.lattice_budget)
      throw LatticeBudgetExceeded("more than " + std::to_string(limits.lattice_budget) + " subgroups");
    const std::size_t order = members.count();
    index.emplace(members, found.size());
    found.push_back(Subgroup{std::move(members), order, std::move(gens)});
  };

  {
    ElementSet trivial = g.empty_set();
    trivial.set(0);
    insert(std::move(trivial), {});
  }
  for (Element x = 1; x < n; ++x) {
    ElementSet cyc = g.empty_set();
    for (Element y = x; y != 0; y = g.mul(y, x)) cyc.set(y);
    cyc.set(0);
    insert(std::move(cyc), {x});
  }

  ElementSet done;
  for (std::size_t i = 0; i < found.size(); ++i) {
    const ElementSet base = found[i].members;
    if (base.count() == n) continue;
    const std::vector<Element> base_gens = found[i].generators;
    const auto base_elems = to_elements(base);
    done = base;
    for (Element x = 0; x < n; ++x) {
      if (done.test(x)) continue;
      for (auto h : base_elems) done.set(g.mul(h, x));  // <H, hx> = <H, x>
      ElementSet ext = extend_closure(g, base, base_gens, x);
      if (index.contains(ext)) continue;
      std::vector<Element> gens = base_gens;
      gens.push_back(x);
      insert(std::move(ext), std::move(gens));
    }
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return canonical_less(found[a].members, found[b].members); });

  SubgroupLattice lat;
  lat.group_ = std::move(gp);
  lat.subgroups_.reserve(found.size());
  for (auto k : perm) lat.subgroups_.push_back(std::move(found[k]));
  const std::size_t m = lat.subgroups_.size();
  for (std::size_t i = 0; i < m; ++i) lat.index_.emplace(lat.subgroups_[i].members, i);

  lat.below_.assign(m, SubgroupMask(m));
  lat.above_.assign(m, SubgroupMask(m));
  for (std::size_t j = 0; j < m; ++j) {
    const auto& sj = lat.subgroups_[j];
    for (std::size_t i = 0; i <= j; ++i) {
      const auto& si = lat.subgroups_[i];
      if (sj.order % si.order != 0) continue;
      if (si.members.is_subset_of(sj.members)) {
        lat.below_[j].set(i);
        lat.above_[i].set(j);
      }
    }
  }

  DisjointSets sets(m);
  const auto gens = generators(*lat.group_);
  for (std::size_t i = 0; i < m; ++i) {
    if (lat.subgroups_[i].order == 1 || lat.subgroups_[i].order == n) continue;
    for (auto x : gens) sets.unite(i, lat.conjugate_index(i, x));
  }
  std::vector<std::size_t> class_id(m, m);
  lat.class_of_.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = sets.root(i);
    if (class_id[r] == m) {
      class_id[r] = lat.classes_.size();
      lat.classes_.emplace_back();
    }
    lat.class_of_[i] = class_id[r];
    lat.classes_[class_id[r]].push_back(i);
  }
  return lat;
}

SubgroupLattice all_subgroups(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.max_order)
    throw OrderCapExceeded("group order " + std::to_string(g.order()) + " exceeds cap " +
                           std::to_string(limits.max_order));
  return all_subgroups(std::make_shared<const FiniteGroup>(g), limits);
}

ElementSet conjugate_subgroup(const FiniteGroup& g, const ElementSet& subgroup, Element x) {
  return conjugate_set(g, subgroup, x);
}

const std::vector<std::vector<std::size_t>>& conjugacy_classes(const SubgroupLattice& lattice) {
  return lattice.classes();
}

std::size_t nu(const SubgroupLattice& lattice) { return lattice.nu(); }

std::size_t normal_subgroup_count(const SubgroupLattice& lattice) { return lattice.normal_count(); }

ElementSet join(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  const auto elems = to_elements(a | b);
  return closure(g, elems);
}

ElementSet meet(const ElementSet& a, const ElementSet& b) { return a & b; }

ModularityResult is_lattice_modular(const SubgroupLattice& lattice, bool exhaustive) {
  const std::size_t m = lattice.size();
  if (!exhaustive && lattice.normal_count() == m) return ModularityResult{};
  std::vector<std::uint32_t> join_table(m * m), meet_table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const auto jn = static_cast<std::uint32_t>(lattice.join(i, j));
      const auto mt = static_cast<std::uint32_t>(lattice.meet(i, j));
      join_table[i * m + j] = join_table[j * m + i] = jn;
      meet_table[i * m + j] = meet_table[j * m + i] = mt;
    }
  for (std::size_t x = 0; x < m; ++x) {
    const auto& up = lattice.above(x);
    for (std::size_t y = 0; y < m; ++y) {
      if (lattice.contains(x, y)) continue;  // X <= Y: both sides equal Y ^ Z
      const std::uint32_t xy = join_table[x * m + y];
      for (auto z = up.find_first(); z != SubgroupMask::npos; z = up.find_next(z)) {
        if (lattice.contains(y, z)) continue;  // Y <= Z: both sides equal X v Y
        const std::uint32_t lhs = join_table[x * m + meet_table[y * m + z]];
        const std::uint32_t rhs = meet_table[xy * m + z];
        if (lhs != rhs) return ModularityResult{false, std::array<std::size_t, 3>{x, y, z}};
      }
    }
  }
  return ModularityResult{};
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const SubgroupLattice& lattice) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t j = 0; j < lattice.size(); ++j)
    for (auto i : lattice.maximal_below(j)) edges.emplace_back(i, j);
  std::sort(edges.begin(), edges.end());
  return edges;
}

ElementSet frattini_subgroup(const SubgroupLattice& lattice) {
  return frattini_subgroup(lattice, lattice.whole_index());
}

ElementSet frattini_subgroup(const SubgroupLattice& lattice, std::size_t i) {
  const auto maximal = lattice.maximal_below(i);
  if (maximal.empty()) return lattice[i].members;
  ElementSet phi = lattice[maximal.front()].members;
  for (auto k : maximal) phi &= lattice[k].members;
  return phi;
}

std::string to_dot(const SubgroupLattice& lattice, const std::string& title) {
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    os << "  s" << i << " [label=\"order=" << lattice[i].order << ", index " << i << "\"";
    if (lattice.is_normal(i)) os << ", shape=doublecircle";
    if (lattice.classes()[lattice.class_of(i)].front() == i) os << ", style=filled";
    os << "];\n";
  }
  for (const auto& [i, j] : hasse_edges(lattice)) os << "  s" << i << " -> s" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace dedekind
