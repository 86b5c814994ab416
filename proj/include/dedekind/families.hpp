#pragma once

#include "dedekind/group.hpp"
#include "dedekind/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dedekind {

// Constructors for the named groups. Each builds its table from an explicit
// multiplication rule and then asserts the defining relations on its
// generators; a relation failure is a programming error (std::logic_error).

FiniteGroup cyclic(std::uint64_t n, const Limits& limits = {});
FiniteGroup elementary_abelian(std::uint64_t p, unsigned r, const Limits& limits = {});
// D_{2n} = <x, y | x^n = y^2 = 1, yx = x^{n-1}y>, two_n even and >= 6.
FiniteGroup dihedral(std::uint64_t two_n, const Limits& limits = {});
// Q_{2^n} for 2^n in {8, 16, 32}.
FiniteGroup generalized_quaternion(std::uint64_t two_to_n);

// C_a : C_b = <x, y | x^a = y^b = 1, yx = x^m y>; requires m^b = 1 (mod a).
// Element x^i y^j has index i + a*j.
FiniteGroup metacyclic(std::uint64_t a, std::uint64_t b, std::uint64_t m, const Limits& limits = {});

// M_{p^n}: n >= 4 for p = 2, n >= 3 for odd p.
FiniteGroup modular_group(std::uint64_t p, unsigned n, const Limits& limits = {});
// Upper unitriangular 3x3 matrices over Z/p, p odd.
FiniteGroup heisenberg(std::uint64_t p, const Limits& limits = {});

// How the three parameters of G_{p,q,n} are read.
enum class SchmidtParameterOrder {
  kernel_first,  // (p, q, n): N = C_p, P = C_{q^{n-1}}, q | p-1
  acting_first,  // (q, p, n) read with the roles of the first two primes swapped
};
// C_p : C_{q^{n-1}}, the generator acting by x -> x^m with m the smallest
// integer > 1 of multiplicative order q mod p.
FiniteGroup schmidt_gpqn(std::uint64_t p, std::uint64_t q, unsigned n, const Limits& limits = {},
                         SchmidtParameterOrder order = SchmidtParameterOrder::kernel_first);

// H_{p,s,t} = <x, y, z | x^{p^s} = y^{p^t} = z^p = 1, z central, [x,y] = z>.
FiniteGroup h_pst(std::uint64_t p, unsigned s, unsigned t, const Limits& limits = {});
// K_{p,s,t} = <x, y | x^{p^s} = y^{p^t} = 1, yx = x^{p^{s-1}+1} y>.
FiniteGroup k_pst(std::uint64_t p, unsigned s, unsigned t, const Limits& limits = {});

struct SchmidtSectionParams {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned r = 0;  // multiplicative order of p mod q

  // Validates p, q distinct primes and computes r.
  static SchmidtSectionParams make(std::uint64_t p, std::uint64_t q);
};

// C_p^r : C_q with a faithful irreducible action, r = ord_q(p). The generator of
// C_q acts by the companion matrix of the first monic degree-r divisor of
// (x^q - 1)/(x - 1) over F_p (coefficient vectors scanned as base-p counters).
FiniteGroup elementary_rtimes_cq(std::uint64_t p, std::uint64_t q, const Limits& limits = {});
// Coefficients c_0..c_{r-1} of the monic polynomial used above.
std::vector<std::uint64_t> cyclotomic_factor(std::uint64_t p, std::uint64_t q);

// C_27 : Q_8 where <i> acts trivially and the other elements invert; order 216.
FiniteGroup c27_rtimes_q8(const Limits& limits = {});
// C_2^2 : C_4 with the generator of C_4 swapping the two basis vectors; order 16.
FiniteGroup klein_rtimes_c4();

// One family atom of a group specification, e.g. {"M", {2, 5}}.
struct FamilyAtom {
  std::string tag;
  std::vector<std::int64_t> params;

  std::string str() const;
  bool operator==(const FamilyAtom&) const = default;
};

struct FamilyInstance {
  FamilyAtom spec;
  FiniteGroup group;
  std::optional<Rational> expected_d_prime;
};

// Validates parameters (InvalidParameter) and returns the group order.
BigInt atom_order(const FamilyAtom& atom);
FiniteGroup build_atom(const FamilyAtom& atom, const Limits& limits = {});
// Closed-form or reported d' for the atom, when one is known.
std::optional<Rational> expected_d_prime(const FamilyAtom& atom);
FamilyInstance make_instance(const FamilyAtom& atom, const Limits& limits = {});

// Tags accepted by build_atom, with their parameter counts.
const std::vector<std::pair<std::string, std::size_t>>& family_tags();

}  // namespace dedekind
