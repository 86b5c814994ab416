#include "dedekind/construct.hpp"
#include "dedekind/error.hpp"
#include "dedekind/families.hpp"
#include "dedekind/isomorphism.hpp"
#include "dedekind/structure.hpp"

#include "naive.hpp"

#include <doctest.h>

using namespace dedekind;

namespace {
Rational frac(long a, long b) { return Rational(BigInt(a), BigInt(b)); }
}  // namespace

TEST_CASE("basic families") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(12).is_abelian());
  CHECK(elementary_abelian(3, 3).order() == 27);
  CHECK(naive::subgroups_by_growth(dihedral(8)).size() == 10);

  const auto q8 = generalized_quaternion(8);
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.is_abelian());
  CHECK(naive::d_prime(q8) == Rational(1));
  CHECK(generalized_quaternion(32).order() == 32);

  CHECK_THROWS_AS(dihedral(7), InvalidParameter);
  CHECK_THROWS_AS(dihedral(4), InvalidParameter);
  CHECK_THROWS_AS(generalized_quaternion(12), InvalidParameter);
  CHECK_THROWS_AS(elementary_abelian(4, 2), InvalidParameter);
  CHECK_THROWS_AS(cyclic(1024), OrderCapExceeded);
}

TEST_CASE("modular p-groups") {
  const auto m27 = modular_group(3, 3);
  CHECK(m27.order() == 27);
  CHECK(naive::d_prime(m27) == frac(4, 5));
  const auto m16 = modular_group(2, 4);
  const auto subs = naive::subgroups_by_growth(m16);
  CHECK(subs.size() - naive::normal_count(m16, subs) == 2);  // one non-normal class of size 2
  CHECK(naive::class_count(m16, subs) - naive::normal_count(m16, subs) == 1);
  CHECK(naive::d_prime(m16) == frac(10, 11));
  CHECK_THROWS_AS(modular_group(2, 3), InvalidParameter);
  CHECK_THROWS_AS(modular_group(3, 2), InvalidParameter);
}

TEST_CASE("Heisenberg groups") {
  const auto he3 = heisenberg(3);
  CHECK(he3.order() == 27);
  CHECK(naive::d_prime(he3) == frac(11, 19));
  const auto he5 = heisenberg(5);
  const auto subs = naive::subgroups_by_growth(he5);
  CHECK(subs.size() == 39);
  CHECK(naive::class_count(he5, subs) == 15);
  CHECK_THROWS_AS(heisenberg(2), InvalidParameter);
}

TEST_CASE("Schmidt groups G(p,q,n)") {
  CHECK(is_isomorphic(schmidt_gpqn(3, 2, 2), dihedral(6)));
  CHECK(naive::d_prime(schmidt_gpqn(3, 2, 2)) == frac(2, 3));
  CHECK(is_isomorphic(schmidt_gpqn(5, 2, 2), dihedral(10)));
  CHECK(naive::d_prime(schmidt_gpqn(5, 2, 2)) == frac(1, 2));
  const auto g = schmidt_gpqn(3, 2, 3);
  CHECK(g.order() == 12);
  CHECK(naive::d_prime(g) == frac(3, 4));
  CHECK_THROWS_AS(schmidt_gpqn(2, 5, 2), InvalidParameter);
  CHECK(is_isomorphic(schmidt_gpqn(2, 5, 2, {}, SchmidtParameterOrder::acting_first), dihedral(10)));
  CHECK_THROWS_AS(schmidt_gpqn(3, 2, 1), InvalidParameter);
}

TEST_CASE("H(p,s,t) and K(p,s,t)") {
  const auto h = h_pst(2, 2, 1);
  CHECK(h.order() == 16);
  const auto k = k_pst(2, 3, 1);
  CHECK(is_isomorphic(k, modular_group(2, 4)));
  CHECK(k_pst(3, 2, 1).order() == 27);
  CHECK(is_isomorphic(k_pst(3, 2, 1), modular_group(3, 3)));
  CHECK(is_isomorphic(h_pst(3, 1, 1), heisenberg(3)));
  CHECK_THROWS_AS(h_pst(2, 1, 2), InvalidParameter);
  CHECK_THROWS_AS(k_pst(2, 2, 1), InvalidParameter);
}

TEST_CASE("C_p^r : C_q") {
  const auto a4 = elementary_rtimes_cq(2, 3);
  CHECK(a4.order() == 12);
  CHECK(naive::d_prime(a4) == frac(1, 2));
  CHECK(is_isomorphic(elementary_rtimes_cq(3, 2), dihedral(6)));
  CHECK(elementary_rtimes_cq(2, 7).order() == 56);
  CHECK(SchmidtSectionParams::make(2, 7).r == 3);
  CHECK(SchmidtSectionParams::make(3, 13).r == 3);
  CHECK_THROWS_AS(SchmidtSectionParams::make(3, 3), InvalidParameter);
  // x^2 + x + 1 over F_2
  CHECK(cyclotomic_factor(2, 3) == std::vector<std::uint64_t>{1, 1});
  // The polynomial must divide x^q - 1, so the generator has order q.
  const auto g = elementary_rtimes_cq(2, 7);
  std::size_t order7 = 0;
  for (Element e = 0; e < g.order(); ++e) order7 += g.element_order(e) == 7;
  CHECK(order7 == 48);
}

TEST_CASE("named groups of order 16 and 216") {
  const auto v = klein_rtimes_c4();
  CHECK(v.order() == 16);
  CHECK(naive::d_prime(v) == frac(17, 23));
  const auto c = c27_rtimes_q8();
  CHECK(c.order() == 216);
  CHECK(center(c).count() == 2);
}

TEST_CASE("atoms") {
  CHECK(atom_order({"M", {2, 5}}) == 32);
  CHECK(atom_order({"G", {7, 3, 2}}) == 21);
  CHECK(atom_order({"C27Q8", {}}) == 216);
  CHECK(FamilyAtom{"EA", {2, 3}}.str() == "EA(2,3)");
  CHECK(FamilyAtom{"V4C4", {}}.str() == "V4C4");
  CHECK(expected_d_prime({"He", {5}}) == frac(5, 13));
  CHECK(expected_d_prime({"D", {16}}) == frac(11, 19));
  CHECK_FALSE(expected_d_prime({"D", {12}}).has_value());
  CHECK_THROWS_AS(build_atom({"Z", {3}}), InvalidParameter);
  CHECK_THROWS_AS(build_atom({"EA", {2}}), InvalidParameter);
  const auto inst = make_instance({"D", {8}});
  CHECK(inst.group.order() == 8);
  CHECK(inst.expected_d_prime == frac(4, 5));
}
