#include "dedekind/invariants.hpp"

#include "dedekind/construct.hpp"
#include "dedekind/error.hpp"
#include "dedekind/isomorphism.hpp"
#include "dedekind/numtheory.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace dedekind {

Rational d_prime(const SubgroupLattice& lattice) {
  return Rational(BigInt(lattice.k_prime()), BigInt(lattice.size()));
}

Rational d_prime(const FiniteGroup& g, const Limits& limits) { return d_prime(all_subgroups(g, limits)); }

std::vector<std::size_t> normal_subgroups_of(const SubgroupLattice& lattice, std::size_t h) {
  if (h == lattice.whole_index()) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lattice.size(); ++i)
      if (lattice.is_normal(i)) out.push_back(i);
    return out;
  }
  const auto& gens = lattice[h].generators;
  const auto& below = lattice.below(h);
  std::vector<std::size_t> out;
  for (auto k = below.find_first(); k != SubgroupMask::npos; k = below.find_next(k))
    if (is_normalized_by(lattice.group(), lattice[k].members, gens)) out.push_back(k);
  return out;
}

bool section_is_abelian(const SubgroupLattice& lattice, std::size_t h, std::size_t k) {
  const auto& g = lattice.group();
  const auto& gens = lattice[h].generators;
  const auto& kernel = lattice[k].members;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!kernel.test(g.commutator(gens[a], gens[b]))) return false;
  return true;
}

FiniteGroup section_quotient(const SubgroupLattice& lattice, std::size_t h, std::size_t k) {
  auto sub = induced_subgroup(lattice.group(), lattice[h].members);
  ElementSet kernel(sub.group.order());
  for (std::size_t i = 0; i < sub.embedding.size(); ++i)
    if (lattice[k].members.test(sub.embedding[i])) kernel.set(i);
  return quotient(sub.group, kernel).group;
}

void for_each_section(const SubgroupLattice& lattice, const std::function<bool(const Section&)>& visit) {
  for (std::size_t h = 0; h < lattice.size(); ++h) {
    for (auto k : normal_subgroups_of(lattice, h)) {
      Section s;
      s.h = h;
      s.k = k;
      s.quotient = section_quotient(lattice, h, k);
      s.fingerprint = fingerprint(s.quotient);
      if (!visit(s)) return;
    }
  }
}

std::vector<Section> sections(const SubgroupLattice& lattice) {
  std::vector<Section> out;
  for_each_section(lattice, [&](const Section& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

namespace {

// Memo of d' by isomorphism type, keyed by fingerprint.
class DPrimeMemo {
 public:
  DPrimeMemo(const Limits& limits, bool deduplicate) : limits_(limits), deduplicate_(deduplicate) {}

  Rational value(FiniteGroup q) {
    if (!deduplicate_) {
      ++evaluated_;
      return d_prime(all_subgroups(q, limits_));
    }
    auto fp = fingerprint(q);
    auto& bin = bins_[fp];
    if (q.order() <= limits_.iso_cap) {
      for (const auto& [rep, value] : bin)
        if (rep.order() <= limits_.iso_cap && is_isomorphic(rep, q, limits_)) return value;
    }
    ++evaluated_;
    Rational v = d_prime(all_subgroups(q, limits_));
    bin.emplace_back(std::move(q), v);
    return v;
  }

  std::size_t evaluated() const { return evaluated_; }

 private:
  Limits limits_;
  bool deduplicate_;
  std::size_t evaluated_ = 0;
  std::unordered_map<GroupFingerprint, std::vector<std::pair<FiniteGroup, Rational>>, GroupFingerprintHash> bins_;
};

struct SubgroupMinimum {
  Rational value{1};
  std::size_t k = 0;
  bool found = false;  // some section strictly below 1
  std::size_t total = 0;
};

SubgroupMinimum minimum_over_kernels(const SubgroupLattice& lattice, std::size_t h, const DStarOptions& options,
                                     DPrimeMemo& memo) {
  SubgroupMinimum best;
  for (auto k : normal_subgroups_of(lattice, h)) {
    ++best.total;
    if (options.skip_abelian) {
      if (lattice[h].order / lattice[k].order < 6) continue;  // groups of order < 6 are abelian
      if (section_is_abelian(lattice, h, k)) continue;
    }
    Rational v = memo.value(section_quotient(lattice, h, k));
    if (v < best.value) {
      best.value = v;
      best.k = k;
      best.found = true;
    }
  }
  return best;
}

}  // namespace

DStarResult d_star_detail(const SubgroupLattice& lattice, const Limits& limits, const DStarOptions& options) {
  const std::size_t n = lattice.group().order();
  if (n > DStarOptions::kSlowOrder && !options.allow_slow)
    throw OrderCapExceeded("d* for order " + std::to_string(n) + " > " + std::to_string(DStarOptions::kSlowOrder) +
                           " requires allow_slow");

  const std::size_t m = lattice.size();
  std::vector<SubgroupMinimum> per_h(m);
  std::size_t evaluated = 0;
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(m)));
  if (threads == 1) {
    DPrimeMemo memo(limits, options.deduplicate);
    for (std::size_t h = 0; h < m; ++h) per_h[h] = minimum_over_kernels(lattice, h, options, memo);
    evaluated = memo.evaluated();
  } else {
    std::vector<std::size_t> counts(threads, 0);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          DPrimeMemo memo(limits, options.deduplicate);
          for (std::size_t h = t; h < m; h += threads) per_h[h] = minimum_over_kernels(lattice, h, options, memo);
          counts[t] = memo.evaluated();
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto c : counts) evaluated += c;
  }

  DStarResult result;
  result.sections_evaluated = evaluated;
  for (std::size_t h = 0; h < m; ++h) {
    result.sections_total += per_h[h].total;
    if (per_h[h].found && per_h[h].value < result.value) {
      result.value = per_h[h].value;
      result.h = h;
      result.k = per_h[h].k;
    }
  }
  return result;
}

Rational d_star(const SubgroupLattice& lattice, const Limits& limits, const DStarOptions& options) {
  return d_star_detail(lattice, limits, options).value;
}

Rational d_star(const FiniteGroup& g, const Limits& limits, const DStarOptions& options) {
  return d_star(all_subgroups(g, limits), limits, options);
}

bool is_dedekind(const SubgroupLattice& lattice) { return lattice.nu() == 0; }

std::map<std::uint64_t, std::size_t> sylow_subgroups(const SubgroupLattice& lattice) {
  std::map<std::uint64_t, std::size_t> out;
  for (const auto& [p, e] : factorize(lattice.group().order())) {
    const std::size_t part = ipow(p, e);
    for (std::size_t i = 0; i < lattice.size(); ++i)
      if (lattice[i].order == part) {
        out[p] = i;
        break;
      }
  }
  return out;
}

bool is_nilpotent(const SubgroupLattice& lattice, std::size_t i) {
  const auto& below = lattice.below(i);
  for (const auto& [p, e] : factorize(lattice[i].order)) {
    const std::size_t part = ipow(p, e);
    std::size_t count = 0;
    for (auto j = below.find_first(); j != SubgroupMask::npos; j = below.find_next(j))
      if (lattice[j].order == part) ++count;
    if (count != 1) return false;
  }
  return true;
}

bool is_nilpotent(const SubgroupLattice& lattice) { return is_nilpotent(lattice, lattice.whole_index()); }

bool is_iwasawa(const SubgroupLattice& lattice) {
  return is_nilpotent(lattice) && is_lattice_modular(lattice).modular;
}

bool is_schmidt(const SubgroupLattice& lattice) {
  if (is_nilpotent(lattice)) return false;
  for (auto i : lattice.maximal_below(lattice.whole_index()))
    if (!is_nilpotent(lattice, i)) return false;
  return true;
}

bool sylow_lattices_modular(const SubgroupLattice& lattice, const Limits& limits) {
  for (const auto& [p, i] : sylow_subgroups(lattice)) {
    auto sub = induced_subgroup(lattice.group(), lattice[i].members);
    if (!is_lattice_modular(all_subgroups(sub.group, limits)).modular) return false;
  }
  return true;
}

SchmidtStructure schmidt_structure_check(const SubgroupLattice& lattice) {
  if (!is_schmidt(lattice)) throw StructureViolation("not a Schmidt group");
  const FiniteGroup& g = lattice.group();
  const auto primes = factorize(g.order());
  if (primes.size() != 2)
    throw StructureViolation("P:Q clause: order has " + std::to_string(primes.size()) + " prime divisors");

  SchmidtStructure s;
  const auto sylow = sylow_subgroups(lattice);
  std::vector<std::uint64_t> normal_primes;
  for (const auto& [p, i] : sylow)
    if (lattice.is_normal(i)) normal_primes.push_back(p);
  if (normal_primes.size() != 1) throw StructureViolation("P:Q clause: expected exactly one normal Sylow subgroup");
  s.p = normal_primes.front();
  s.q = s.p == primes.begin()->first ? std::next(primes.begin())->first : primes.begin()->first;
  s.sylow_p = sylow.at(s.p);
  s.sylow_q = sylow.at(s.q);
  const auto& P = lattice[s.sylow_p];
  const auto& Q = lattice[s.sylow_q];
  const auto q_elems = to_elements(Q.members);
  if (std::none_of(q_elems.begin(), q_elems.end(), [&](Element x) { return g.element_order(x) == Q.order; }))
    throw StructureViolation("P:Q clause: Sylow " + std::to_string(s.q) + "-subgroup is not cyclic");

  const ElementSet z = center(g);
  const ElementSet phi_g = frattini_subgroup(lattice);
  const ElementSet phi_p = frattini_subgroup(lattice, s.sylow_p);
  const ElementSet phi_q = frattini_subgroup(lattice, s.sylow_q);
  s.center_order = z.count();
  if (z != phi_g) throw StructureViolation("Frattini clause: Z(G) != Phi(G)");
  if (join(g, phi_p, phi_q) != phi_g || phi_p.count() * phi_q.count() != phi_g.count())
    throw StructureViolation("Frattini clause: Phi(G) != Phi(P) x Phi(Q)");

  const auto p_elems = to_elements(P.members);
  for (auto x : p_elems) {
    if (!phi_p.test(g.pow(x, static_cast<long long>(s.p))))
      throw StructureViolation("rank clause: P/Phi(P) has exponent > p");
    for (auto y : p_elems)
      if (!phi_p.test(g.commutator(x, y))) throw StructureViolation("rank clause: P/Phi(P) is not abelian");
  }
  const std::size_t top = P.order / phi_p.count();
  unsigned rank = 0;
  for (std::size_t v = top; v > 1; v /= s.p) ++rank;
  s.r = rank;
  if (rank != multiplicative_order(s.p, s.q))
    throw StructureViolation("rank clause: rank " + std::to_string(rank) + " != ord_q(p) = " +
                             std::to_string(multiplicative_order(s.p, s.q)));

  for (std::size_t i = 0; i + 1 < lattice.size(); ++i) {
    if (!lattice.is_normal(i)) continue;
    const auto& N = lattice[i].members;
    if (Q.members.is_subset_of(N)) throw StructureViolation("normal subgroup clause: proper normal subgroup contains Q");
    if (!P.members.is_subset_of(N) && !N.is_subset_of(z))
      throw StructureViolation("normal subgroup clause: normal subgroup neither contains P nor lies in Z(G)");
  }
  return s;
}

bool is_q_self_dual(const SubgroupLattice& lattice, const Limits& limits) {
  const FiniteGroup& g = lattice.group();
  if (g.order() > limits.iso_cap)
    throw IsoCapExceeded("q-self-duality needs isomorphism tests on order " + std::to_string(g.order()) + " > " +
                         std::to_string(limits.iso_cap));
  std::vector<std::pair<FiniteGroup, GroupFingerprint>> reps;  // class representatives, by index
  std::vector<std::size_t> rep_index;
  for (const auto& cls : lattice.classes()) {
    auto sub = induced_subgroup(g, lattice[cls.front()].members);
    auto fp = fingerprint(sub.group);
    reps.emplace_back(std::move(sub.group), std::move(fp));
  }
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (!lattice.is_normal(i)) continue;
    const FiniteGroup q = quotient(g, lattice[i].members).group;
    const auto fp = fingerprint(q);
    bool found = false;
    for (const auto& [sub, sub_fp] : reps) {
      if (sub_fp == fp && is_isomorphic(sub, q, limits)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

nlohmann::ordered_json rational_to_json(const Rational& r) {
  nlohmann::ordered_json j;
  j["num"] = r.num().convert_to<long long>();
  j["den"] = r.den().convert_to<long long>();
  return j;
}

Rational rational_from_json(const nlohmann::json& j) {
  return Rational(BigInt(j.at("num").get<long long>()), BigInt(j.at("den").get<long long>()));
}

nlohmann::ordered_json InvariantReport::to_json() const {
  nlohmann::ordered_json j;
  j["spec"] = spec;
  j["order"] = order;
  j["lattice_size"] = lattice_size;
  j["k_prime"] = k_prime;
  j["normal_count"] = normal_count;
  j["nu"] = nu;
  j["d_prime"] = rational_to_json(d_prime);
  j["d_star"] = d_star ? rational_to_json(*d_star) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json f;
  f["abelian"] = flags.abelian;
  f["dedekind"] = flags.dedekind;
  f["nilpotent"] = flags.nilpotent;
  f["iwasawa"] = flags.iwasawa;
  f["modular_lattice"] = flags.modular_lattice;
  f["schmidt"] = flags.schmidt;
  j["flags"] = f;
  j["ms"] = ms ? nlohmann::ordered_json(*ms) : nlohmann::ordered_json(nullptr);
  return j;
}

InvariantReport InvariantReport::from_json(const nlohmann::json& j) {
  InvariantReport r;
  r.spec = j.at("spec").get<std::string>();
  r.order = j.at("order").get<std::size_t>();
  r.lattice_size = j.at("lattice_size").get<std::size_t>();
  r.k_prime = j.at("k_prime").get<std::size_t>();
  r.normal_count = j.at("normal_count").get<std::size_t>();
  r.nu = j.at("nu").get<std::size_t>();
  r.d_prime = rational_from_json(j.at("d_prime"));
  if (!j.at("d_star").is_null()) r.d_star = rational_from_json(j.at("d_star"));
  const auto& f = j.at("flags");
  r.flags.abelian = f.at("abelian").get<bool>();
  r.flags.dedekind = f.at("dedekind").get<bool>();
  r.flags.nilpotent = f.at("nilpotent").get<bool>();
  r.flags.iwasawa = f.at("iwasawa").get<bool>();
  r.flags.modular_lattice = f.at("modular_lattice").get<bool>();
  r.flags.schmidt = f.at("schmidt").get<bool>();
  return r;
}

InvariantReport compute_report(const std::string& spec, const SubgroupLattice& lattice, const Limits& limits,
                               const ReportOptions& options) {
  InvariantReport r;
  r.spec = spec;
  r.order = lattice.group().order();
  r.lattice_size = lattice.size();
  r.k_prime = lattice.k_prime();
  r.normal_count = lattice.normal_count();
  r.nu = lattice.nu();
  r.d_prime = d_prime(lattice);
  if (options.with_d_star) r.d_star = d_star(lattice, limits, options.d_star);
  r.flags.abelian = lattice.group().is_abelian();
  r.flags.dedekind = is_dedekind(lattice);
  r.flags.nilpotent = is_nilpotent(lattice);
  r.flags.modular_lattice = is_lattice_modular(lattice).modular;
  r.flags.iwasawa = r.flags.nilpotent && r.flags.modular_lattice;
  r.flags.schmidt = is_schmidt(lattice);
  return r;
}

}  // namespace dedekind
