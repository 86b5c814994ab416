#pragma once

#include "dedekind/group.hpp"
#include "dedekind/invariants.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/rational.hpp"
#include "dedekind/spec.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dedekind {

struct CorpusConfig {
  Limits limits;
  std::size_t d_star_max_order = 256;   // d* is computed up to this order
  std::size_t product_max_order = 216;  // coprime direct products
  std::size_t schmidt_max_order = 200;  // G(p,q,n) sweep
  std::size_t pst_max_order = 128;      // H(p,s,t) and K(p,s,t) sweeps
};

struct CorpusEntry {
  GroupSpec spec;
  std::shared_ptr<const FiniteGroup> group;
  std::string provenance;  // "family", "named" or "product"
};

struct Corpus {
  CorpusConfig config;
  std::vector<CorpusEntry> entries;
  std::vector<std::string> skipped;  // specs over the cap, with the reason

  std::optional<std::size_t> find(const std::string& spec) const;
};

// Deterministic: family sweeps first, then named groups, then coprime products.
Corpus build_corpus(const CorpusConfig& config = {});

// Per-entry data shared by the suites, computed once.
struct EntryData {
  std::shared_ptr<const SubgroupLattice> lattice;
  Rational d_prime;
  std::optional<Rational> d_star;
  bool abelian = false;
  bool dedekind = false;
  bool nilpotent = false;
  bool modular = false;
  bool prime_power = false;
  std::uint64_t prime = 0;  // when prime_power
};

class CorpusAnalysis {
 public:
  // Enumerates every lattice and every d* within config.d_star_max_order,
  // spreading entries over `threads` workers.
  explicit CorpusAnalysis(Corpus corpus, unsigned threads = 1);

  const Corpus& corpus() const { return corpus_; }
  std::size_t size() const { return corpus_.entries.size(); }
  const CorpusEntry& entry(std::size_t i) const { return corpus_.entries[i]; }
  const EntryData& data(std::size_t i) const { return data_[i]; }
  const SubgroupLattice& lattice(std::size_t i) const { return *data_[i].lattice; }
  std::optional<std::size_t> find(const std::string& spec) const { return corpus_.find(spec); }

 private:
  Corpus corpus_;
  std::vector<EntryData> data_;
};

struct Check {
  std::string description;
  bool passed = true;
  std::string detail;    // offending values on failure, observed values otherwise
  std::string evidence;  // "exact", or "evidence" when the corpus cannot exhaust the claim
};

struct SuiteResult {
  std::string name;
  std::string summary;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::size_t>> antecedents;
  std::vector<std::string> notes;

  std::size_t passed_count() const;
  std::size_t failed_count() const;
  bool passed() const { return failed_count() == 0; }
  nlohmann::ordered_json to_json() const;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
};
const std::vector<SuiteInfo>& suite_catalog();

// Throws InvalidParameter for an unknown suite name.
SuiteResult run_suite(const std::string& name, const CorpusAnalysis& analysis);
std::vector<SuiteResult> run_all_suites(const CorpusAnalysis& analysis);

// First section H/K of the lattice's group isomorphic to `target`, as indices.
std::optional<std::pair<std::size_t, std::size_t>> find_section_isomorphic_to(const SubgroupLattice& lattice,
                                                                              const FiniteGroup& target,
                                                                              const Limits& limits = {});

}  // namespace dedekind
