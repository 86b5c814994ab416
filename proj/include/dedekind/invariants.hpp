#pragma once

#include "dedekind/group.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/rational.hpp"
#include "dedekind/structure.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dedekind {

// k'(G) / |L(G)|
Rational d_prime(const SubgroupLattice& lattice);
Rational d_prime(const FiniteGroup& g, const Limits& limits = {});

// A section H/K: H is subgroup `h` of the parent lattice, K is subgroup `k`,
// normal in H.
struct Section {
  std::size_t h = 0;
  std::size_t k = 0;
  FiniteGroup quotient;
  GroupFingerprint fingerprint;
};

// Indices of the subgroups of S_h that are normal in S_h, in canonical order.
std::vector<std::size_t> normal_subgroups_of(const SubgroupLattice& lattice, std::size_t h);

// H/K is abelian iff every commutator of generators of H lies in K.
bool section_is_abelian(const SubgroupLattice& lattice, std::size_t h, std::size_t k);

FiniteGroup section_quotient(const SubgroupLattice& lattice, std::size_t h, std::size_t k);

// Visits every section, H in canonical order and K in canonical order within H.
// Returning false from the visitor stops the walk.
void for_each_section(const SubgroupLattice& lattice, const std::function<bool(const Section&)>& visit);
std::vector<Section> sections(const SubgroupLattice& lattice);

struct DStarOptions {
  bool skip_abelian = true;   // abelian quotients have d' = 1
  bool deduplicate = true;    // one evaluation per isomorphism type
  bool allow_slow = false;    // required above kSlowOrder
  unsigned threads = 1;
  static constexpr std::size_t kSlowOrder = 256;
};

struct DStarResult {
  Rational value{1};
  std::size_t h = 0;  // first section in canonical order attaining the minimum
  std::size_t k = 0;
  std::size_t sections_total = 0;
  std::size_t sections_evaluated = 0;  // lattices actually enumerated
};

// Minimum of d' over all sections. Throws OrderCapExceeded above kSlowOrder
// without allow_slow.
DStarResult d_star_detail(const SubgroupLattice& lattice, const Limits& limits = {}, const DStarOptions& options = {});
Rational d_star(const SubgroupLattice& lattice, const Limits& limits = {}, const DStarOptions& options = {});
Rational d_star(const FiniteGroup& g, const Limits& limits = {}, const DStarOptions& options = {});

bool is_dedekind(const SubgroupLattice& lattice);

// Prime -> index of one Sylow subgroup (the first of its order).
std::map<std::uint64_t, std::size_t> sylow_subgroups(const SubgroupLattice& lattice);
// Nilpotency of the subgroup S_i: each Sylow subgroup of S_i is unique.
bool is_nilpotent(const SubgroupLattice& lattice, std::size_t i);
bool is_nilpotent(const SubgroupLattice& lattice);
bool is_iwasawa(const SubgroupLattice& lattice);
// Not nilpotent, every maximal subgroup nilpotent.
bool is_schmidt(const SubgroupLattice& lattice);
// Every Sylow subgroup has a modular subgroup lattice.
bool sylow_lattices_modular(const SubgroupLattice& lattice, const Limits& limits = {});

struct SchmidtStructure {
  std::uint64_t p = 0;  // prime of the normal Sylow subgroup P
  std::uint64_t q = 0;  // prime of the cyclic Sylow subgroup Q
  unsigned r = 0;       // rank of P / Phi(P), equal to ord_q(p)
  std::size_t sylow_p = 0;
  std::size_t sylow_q = 0;
  std::size_t center_order = 0;
};
// Checks the structure of a Schmidt group: G = P:Q with P a normal Sylow
// subgroup and Q a cyclic Sylow subgroup; Z(G) = Phi(G) = Phi(P) x Phi(Q);
// P/Phi(P) elementary abelian of rank ord_q(p); each proper normal N omits Q
// and has P <= N or N <= Z(G). Throws StructureViolation naming the clause.
SchmidtStructure schmidt_structure_check(const SubgroupLattice& lattice);

// Every quotient G/N is isomorphic to a subgroup. Throws IsoCapExceeded.
bool is_q_self_dual(const SubgroupLattice& lattice, const Limits& limits = {});

struct InvariantFlags {
  bool abelian = false;
  bool dedekind = false;
  bool nilpotent = false;
  bool iwasawa = false;
  bool modular_lattice = false;
  bool schmidt = false;
  bool operator==(const InvariantFlags&) const = default;
};

struct InvariantReport {
  std::string spec;
  std::size_t order = 0;
  std::size_t lattice_size = 0;
  std::size_t k_prime = 0;
  std::size_t normal_count = 0;
  std::size_t nu = 0;
  Rational d_prime{1};
  std::optional<Rational> d_star;
  InvariantFlags flags;
  std::optional<double> ms;

  nlohmann::ordered_json to_json() const;
  static InvariantReport from_json(const nlohmann::json& j);
};

struct ReportOptions {
  bool with_d_star = true;
  DStarOptions d_star;
};

InvariantReport compute_report(const std::string& spec, const SubgroupLattice& lattice, const Limits& limits = {},
                               const ReportOptions& options = {});

nlohmann::ordered_json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace dedekind
