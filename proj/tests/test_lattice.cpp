#include "dedekind/construct.hpp"
#include "dedekind/error.hpp"
#include "dedekind/families.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/oracle.hpp"
#include "dedekind/structure.hpp"

#include "naive.hpp"

#include <doctest.h>

#include <set>

using namespace dedekind;

namespace {

std::set<naive::Set> as_sets(const SubgroupLattice& lat) {
  std::set<naive::Set> out;
  for (const auto& s : lat.subgroups()) out.insert(to_elements(s.members));
  return out;
}

std::vector<FiniteGroup> small_groups() {
  return {cyclic(1),
          cyclic(7),
          cyclic(12),
          elementary_abelian(2, 3),
          dihedral(6),
          dihedral(8),
          dihedral(10),
          dihedral(12),
          generalized_quaternion(8),
          elementary_rtimes_cq(2, 3),
          metacyclic(3, 4, 2),
          direct_product(cyclic(2), cyclic(4))};
}

std::vector<FiniteGroup> medium_groups() {
  return {modular_group(2, 4), dihedral(16),   heisenberg(3),    modular_group(3, 3), klein_rtimes_c4(),
          k_pst(2, 3, 2),      h_pst(2, 2, 1), schmidt_gpqn(7, 3, 2), direct_product(cyclic(2), dihedral(8))};
}

}  // namespace

TEST_CASE("enumeration matches the subset oracle") {
  for (const auto& g : small_groups()) {
    CAPTURE(g.order());
    const auto lat = all_subgroups(g);
    CHECK(as_sets(lat) == naive::subgroups_by_subsets(g));
  }
}

TEST_CASE("enumeration matches the growth oracle and the cyclic-union oracle") {
  for (const auto& g : medium_groups()) {
    CAPTURE(g.order());
    const auto lat = all_subgroups(g);
    CHECK(as_sets(lat) == naive::subgroups_by_growth(g));
    if (g.order() <= 24) {
      std::set<naive::Set> brute;
      for (const auto& s : brute_force_subgroups(g)) brute.insert(to_elements(s));
      CHECK(brute == as_sets(lat));
    }
  }
}

TEST_CASE("lattice sizes") {
  CHECK(all_subgroups(cyclic(5)).size() == 2);
  CHECK(all_subgroups(cyclic(1)).size() == 1);
  CHECK(all_subgroups(modular_group(2, 4)).size() == 11);
  CHECK(all_subgroups(dihedral(16)).size() == 19);
  CHECK(all_subgroups(dihedral(8)).size() == 10);
}

TEST_CASE("canonical order: by order, then by member list") {
  const auto lat = all_subgroups(dihedral(12));
  CHECK(lat[0].order == 1);
  CHECK(lat[lat.whole_index()].order == 12);
  for (std::size_t i = 1; i < lat.size(); ++i) {
    const auto a = to_elements(lat[i - 1].members), b = to_elements(lat[i].members);
    CHECK((lat[i - 1].order < lat[i].order || (lat[i - 1].order == lat[i].order && a < b)));
    CHECK(canonical_less(lat[i - 1].members, lat[i].members));
  }
}

TEST_CASE("subgroups are closed and generated by their generators") {
  for (const auto& g : medium_groups()) {
    const auto lat = all_subgroups(g);
    for (const auto& s : lat.subgroups()) {
      CHECK(naive::is_closed(g, to_elements(s.members)));
      CHECK(s.order == s.members.count());
      CHECK(closure(g, s.generators) == s.members);
    }
  }
}

TEST_CASE("containment, join and meet against set operations") {
  const auto g = dihedral(12);
  const auto lat = all_subgroups(g);
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = 0; j < lat.size(); ++j) {
      const auto a = to_elements(lat[i].members), b = to_elements(lat[j].members);
      CHECK(lat.contains(i, j) == std::includes(b.begin(), b.end(), a.begin(), a.end()));
      CHECK(to_elements(lat[lat.join(i, j)].members) == naive::join(g, a, b));
      CHECK(to_elements(lat[lat.meet(i, j)].members) == naive::meet(a, b));
      CHECK(join(g, lat[i].members, lat[j].members) == lat[lat.join(i, j)].members);
    }
  CHECK(lat.containment_pairs().size() > 0);
}

TEST_CASE("conjugacy classes against brute-force orbits") {
  for (const auto& g : medium_groups()) {
    CAPTURE(g.order());
    const auto lat = all_subgroups(g);
    const auto subs = as_sets(lat);
    CHECK(lat.k_prime() == naive::class_count(g, subs));
    CHECK(lat.normal_count() == naive::normal_count(g, subs));
    CHECK(lat.k_prime() == lat.normal_count() + lat.nu());
    std::size_t total = 0;
    for (const auto& c : lat.classes()) total += c.size();
    CHECK(total == lat.size());
    // |class(H)| * |N_G(H)| = |G|
    for (std::size_t i = 0; i < lat.size(); ++i)
      CHECK(lat.class_size(i) * naive::normalizer(g, to_elements(lat[i].members)).size() == g.order());
  }
}

TEST_CASE("conjugation permutes the subgroup list") {
  const auto g = heisenberg(3);
  const auto lat = all_subgroups(g);
  for (Element x = 0; x < g.order(); ++x) {
    std::set<std::size_t> image;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const auto j = lat.conjugate_index(i, x);
      CHECK(lat[j].members == conjugate_subgroup(g, lat[i].members, x));
      image.insert(j);
    }
    CHECK(image.size() == lat.size());
  }
  for (std::size_t i = 0; i < lat.size(); ++i) CHECK(lat.conjugate_index(i, 0) == i);
}

TEST_CASE("reflections of D_10 form one class of size 5") {
  const auto g = dihedral(10);
  const auto lat = all_subgroups(g);
  std::size_t order2 = 0;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat[i].order == 2) {
      ++order2;
      CHECK(lat.class_size(i) == 5);
    }
  CHECK(order2 == 5);
  CHECK(nu(lat) == 1);
  CHECK(normal_subgroup_count(lat) == 3);
  CHECK(conjugacy_classes(lat).size() == 4);
}

TEST_CASE("modular law") {
  for (const auto& g : {elementary_abelian(2, 3), cyclic(12), direct_product(cyclic(2), cyclic(4)),
                        elementary_abelian(3, 2), generalized_quaternion(8)}) {
    const auto lat = all_subgroups(g);
    CHECK(naive::modular_law_holds(g, as_sets(lat)));
    CHECK(is_lattice_modular(lat, true).modular);
    CHECK(is_lattice_modular(lat).modular);
  }
  for (const auto& g : {modular_group(2, 4), modular_group(3, 3)}) {
    const auto lat = all_subgroups(g);
    CHECK(naive::modular_law_holds(g, as_sets(lat)));
    CHECK(is_lattice_modular(lat).modular);
  }
  for (const auto& g : {dihedral(8), heisenberg(3), elementary_rtimes_cq(2, 3)}) {
    const auto lat = all_subgroups(g);
    CHECK_FALSE(naive::modular_law_holds(g, as_sets(lat)));
    const auto r = is_lattice_modular(lat);
    REQUIRE_FALSE(r.modular);
    REQUIRE(r.violation.has_value());
    const auto [x, y, z] = *r.violation;
    CHECK(lat.contains(x, z));
    CHECK(lat.join(x, lat.meet(y, z)) != lat.meet(lat.join(x, y), z));
  }
}

TEST_CASE("Hasse diagram") {
  CHECK(hasse_edges(all_subgroups(cyclic(3))).size() == 1);
  CHECK(hasse_edges(all_subgroups(cyclic(9))).size() == 2);
  const auto g = dihedral(8);
  const auto lat = all_subgroups(g);
  const auto edges = hasse_edges(lat);
  // Covering pairs by brute force over the subgroup sets.
  const auto subs = as_sets(lat);
  std::size_t covers = 0;
  auto sub_of = [](const naive::Set& a, const naive::Set& b) {
    return a != b && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (const auto& a : subs)
    for (const auto& b : subs) {
      if (!sub_of(a, b)) continue;
      bool between = false;
      for (const auto& c : subs) between = between || (sub_of(a, c) && sub_of(c, b));
      covers += !between;
    }
  CHECK(edges.size() == covers);
  CHECK(edges.size() == 15);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  for (std::size_t j = 0; j < lat.size(); ++j)
    for (auto i : lat.maximal_below(j)) CHECK(std::binary_search(edges.begin(), edges.end(), std::pair{i, j}));
}

TEST_CASE("Frattini subgroup") {
  CHECK(frattini_subgroup(all_subgroups(dihedral(8))).count() == 2);
  CHECK(frattini_subgroup(all_subgroups(elementary_abelian(2, 3))).count() == 1);
  CHECK(frattini_subgroup(all_subgroups(cyclic(8))).count() == 4);
  CHECK(frattini_subgroup(all_subgroups(heisenberg(3))).count() == 3);
  const auto lat = all_subgroups(dihedral(16));
  // Phi of the cyclic subgroup of order 8 is its subgroup of order 4.
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat[i].order == 8 && lat.is_normal(i) && lat.maximal_below(i).size() == 1)
      CHECK(frattini_subgroup(lat, i).count() == 4);
}

TEST_CASE("DOT export") {
  const auto dot = to_dot(all_subgroups(cyclic(4)), "C(4)");
  CHECK(dot ==
        "digraph \"C(4)\" {\n"
        "  rankdir=BT;\n"
        "  node [shape=circle];\n"
        "  s0 [label=\"order=1, index 0\", shape=doublecircle, style=filled];\n"
        "  s1 [label=\"order=2, index 1\", shape=doublecircle, style=filled];\n"
        "  s2 [label=\"order=4, index 2\", shape=doublecircle, style=filled];\n"
        "  s0 -> s1;\n"
        "  s1 -> s2;\n"
        "}\n");
  const auto s3 = to_dot(all_subgroups(dihedral(6)));
  // three conjugate subgroups of order 2, only the first filled
  CHECK(s3.find("s1 [label=\"order=2, index 1\", style=filled];") != std::string::npos);
  CHECK(s3.find("s2 [label=\"order=2, index 2\"];") != std::string::npos);
}

TEST_CASE("caps") {
  Limits small;
  small.lattice_budget = 50;
  CHECK_THROWS_AS(all_subgroups(elementary_abelian(2, 4), small), LatticeBudgetExceeded);
  Limits tiny;
  tiny.max_order = 16;
  CHECK_THROWS_AS(all_subgroups(dihedral(20), tiny), OrderCapExceeded);
}
