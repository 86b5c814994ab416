// Command-line front end: group invariants, lattices, formulas and the
// verification suites.

#include "dedekind/cache.hpp"
#include "dedekind/error.hpp"
#include "dedekind/formulas.hpp"
#include "dedekind/invariants.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/spec.hpp"
#include "dedekind/verify.hpp"
#include "dedekind/version.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace dedekind;
using ojson = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kParse = 2,
  kParameter = 3,
  kCap = 4,
  kVerification = 5,
};

struct Options {
  bool json = false;
  bool dot = false;
  std::size_t max_order = Limits{}.max_order;
  bool allow_slow = false;
  bool no_cache = false;
  std::string cache_path;
  unsigned threads = 1;
  bool timing = false;

  Limits limits() const {
    if (max_order < 1 || max_order > Limits::kHardOrderCap)
      throw InvalidParameter("--max-order must be between 1 and " + std::to_string(Limits::kHardOrderCap));
    Limits l;
    l.max_order = max_order;
    return l;
  }

  DStarOptions d_star() const {
    DStarOptions o;
    o.allow_slow = allow_slow;
    o.threads = threads;
    return o;
  }

  std::optional<ReportCache> cache() const {
    if (no_cache) return std::nullopt;
    return ReportCache(cache_path.empty() ? ReportCache::default_path() : std::filesystem::path(cache_path),
                       kEngineVersion);
  }
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_json(const ojson& j) { std::cout << j.dump(2) << '\n'; }

// Computes or loads the report for a spec. Without allow_slow, d* is left out
// above the slow-order threshold instead of failing.
InvariantReport report_for(const GroupSpec& spec, const Options& opt, bool need_d_star) {
  const auto start = Clock::now();
  const std::string key = spec.str();
  const Limits limits = opt.limits();
  const BigInt order = spec.order();
  if (order > limits.max_order)
    throw OrderCapExceeded("group order " + order.str() + " exceeds cap " + std::to_string(limits.max_order));
  const bool want_d_star = need_d_star && (opt.allow_slow || order <= DStarOptions::kSlowOrder);

  auto cache = opt.cache();
  std::optional<InvariantReport> report;
  if (cache) report = cache->load(key, want_d_star);
  if (!report) {
    const SubgroupLattice lattice = all_subgroups(spec.build(limits), limits);
    ReportOptions ro;
    ro.with_d_star = want_d_star;
    ro.d_star = opt.d_star();
    report = compute_report(key, lattice, limits, ro);
    if (cache) cache->store(*report);
  }
  if (!want_d_star) report->d_star.reset();
  if (opt.timing) report->ms = elapsed_ms(start);
  return *report;
}

void print_report_table(const InvariantReport& r) {
  auto row = [](const std::string& k, const std::string& v) { std::cout << std::left << std::setw(16) << k << v << '\n'; };
  row("spec", r.spec);
  row("order", std::to_string(r.order));
  row("lattice_size", std::to_string(r.lattice_size));
  row("k_prime", std::to_string(r.k_prime));
  row("normal_count", std::to_string(r.normal_count));
  row("nu", std::to_string(r.nu));
  row("d_prime", r.d_prime.str());
  row("d_star", r.d_star ? r.d_star->str() : "not computed (order > 256 needs --allow-slow)");
  row("abelian", yes_no(r.flags.abelian));
  row("dedekind", yes_no(r.flags.dedekind));
  row("nilpotent", yes_no(r.flags.nilpotent));
  row("iwasawa", yes_no(r.flags.iwasawa));
  row("modular_lattice", yes_no(r.flags.modular_lattice));
  row("schmidt", yes_no(r.flags.schmidt));
  if (r.ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << *r.ms;
    row("ms", os.str());
  }
}

int cmd_info(const std::string& text, const Options& opt) {
  const auto r = report_for(GroupSpec::parse(text), opt, true);
  if (opt.json)
    print_json(r.to_json());
  else
    print_report_table(r);
  return kOk;
}

int cmd_dprime(const std::string& text, const Options& opt) {
  const auto spec = GroupSpec::parse(text);
  const auto r = report_for(spec, opt, false);
  if (opt.json) {
    ojson j;
    j["spec"] = r.spec;
    j["d_prime"] = rational_to_json(r.d_prime);
    print_json(j);
  } else {
    std::cout << r.d_prime.str() << '\n';
  }
  return kOk;
}

int cmd_dstar(const std::string& text, const Options& opt) {
  const auto spec = GroupSpec::parse(text);
  if (spec.order() > DStarOptions::kSlowOrder && !opt.allow_slow)
    throw OrderCapExceeded("d* above order " + std::to_string(DStarOptions::kSlowOrder) + " needs --allow-slow");
  const auto r = report_for(spec, opt, true);
  if (opt.json) {
    ojson j;
    j["spec"] = r.spec;
    j["d_prime"] = rational_to_json(r.d_prime);
    j["d_star"] = rational_to_json(*r.d_star);
    print_json(j);
  } else {
    std::cout << r.d_star->str() << '\n';
  }
  return kOk;
}

int cmd_lattice(const std::string& text, const Options& opt) {
  const auto spec = GroupSpec::parse(text);
  const Limits limits = opt.limits();
  const SubgroupLattice lat = all_subgroups(spec.build(limits), limits);
  if (opt.dot) {
    std::cout << to_dot(lat, spec.str());
    return kOk;
  }
  if (opt.json) {
    ojson j;
    j["spec"] = spec.str();
    j["order"] = lat.group().order();
    ojson subs = ojson::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      ojson s;
      s["index"] = i;
      s["order"] = lat[i].order;
      s["class"] = lat.class_of(i);
      s["normal"] = lat.is_normal(i);
      s["members"] = to_elements(lat[i].members);
      subs.push_back(s);
    }
    j["subgroups"] = subs;
    ojson edges = ojson::array();
    for (const auto& [a, b] : hasse_edges(lat)) edges.push_back({a, b});
    j["hasse_edges"] = edges;
    print_json(j);
    return kOk;
  }
  std::cout << "index  order  class  normal  generators\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::cout << std::left << std::setw(7) << i << std::setw(7) << lat[i].order << std::setw(7) << lat.class_of(i)
              << std::setw(8) << yes_no(lat.is_normal(i));
    std::string gens;
    for (auto g : lat[i].generators) gens += (gens.empty() ? "" : ", ") + lat.group().label(g);
    std::cout << (gens.empty() ? "-" : gens) << '\n';
  }
  return kOk;
}

int cmd_sections(const std::string& text, const Options& opt) {
  const auto spec = GroupSpec::parse(text);
  const Limits limits = opt.limits();
  const SubgroupLattice lat = all_subgroups(spec.build(limits), limits);
  ojson list = ojson::array();
  if (!opt.json) std::cout << "H      K      |H|    |K|    |H/K|  abelian\n";
  for (std::size_t h = 0; h < lat.size(); ++h)
    for (auto k : normal_subgroups_of(lat, h)) {
      const bool abelian = section_is_abelian(lat, h, k);
      const std::size_t q = lat[h].order / lat[k].order;
      if (opt.json) {
        ojson s;
        s["h"] = h;
        s["k"] = k;
        s["h_order"] = lat[h].order;
        s["k_order"] = lat[k].order;
        s["quotient_order"] = q;
        s["abelian"] = abelian;
        list.push_back(s);
      } else {
        std::cout << std::left << std::setw(7) << h << std::setw(7) << k << std::setw(7) << lat[h].order << std::setw(7)
                  << lat[k].order << std::setw(7) << q << yes_no(abelian) << '\n';
      }
    }
  if (opt.json) {
    ojson j;
    j["spec"] = spec.str();
    j["sections"] = list;
    print_json(j);
  }
  return kOk;
}

int cmd_verify(const std::string& suite, const Options& opt) {
  CorpusConfig config;
  config.limits = opt.limits();
  std::vector<std::string> names;
  if (suite == "all") {
    for (const auto& info : suite_catalog()) names.push_back(info.name);
  } else {
    bool known = false;
    for (const auto& info : suite_catalog()) known = known || info.name == suite;
    if (!known) throw InvalidParameter("unknown suite '" + suite + "'");
    names.push_back(suite);
  }
  const auto start = Clock::now();
  const CorpusAnalysis analysis(build_corpus(config), opt.threads);
  std::vector<SuiteResult> results;
  for (const auto& n : names) results.push_back(run_suite(n, analysis));
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();

  if (opt.json) {
    ojson j;
    j["corpus_size"] = analysis.size();
    j["skipped"] = analysis.corpus().skipped;
    ojson suites = ojson::array();
    for (const auto& r : results) suites.push_back(r.to_json());
    j["suites"] = suites;
    j["passed"] = ok;
    j["ms"] = opt.timing ? ojson(elapsed_ms(start)) : ojson(nullptr);
    print_json(j);
  } else {
    std::cout << "corpus: " << analysis.size() << " groups";
    if (!analysis.corpus().skipped.empty()) std::cout << ", " << analysis.corpus().skipped.size() << " skipped";
    std::cout << "\n\n";
    for (const auto& r : results) {
      std::cout << (r.passed() ? "PASS  " : "FAIL  ") << std::left << std::setw(20) << r.name << r.passed_count() << "/"
                << r.checks.size() << " checks  " << r.summary << '\n';
      for (const auto& [label, count] : r.antecedents) std::cout << "        " << label << ": " << count << '\n';
      for (const auto& c : r.checks)
        if (!c.passed) std::cout << "        failed: " << c.description << " (" << c.detail << ")\n";
      for (const auto& n : r.notes) std::cout << "        note: " << n << '\n';
    }
    std::cout << '\n' << (ok ? "all suites passed" : "some checks failed") << '\n';
  }
  return ok ? kOk : kVerification;
}

int cmd_density(std::int64_t a, std::int64_t b, const std::string& eps_text, std::size_t budget, const Options& opt) {
  const Rational eps = Rational::parse(eps_text);
  const auto steps = density_sequence(a, b, eps, budget);
  if (opt.json) {
    ojson j;
    j["target"] = rational_to_json(Rational(a, b));
    j["epsilon"] = rational_to_json(eps);
    ojson list = ojson::array();
    for (const auto& s : steps) {
      ojson sj;
      sj["index"] = s.index;
      sj["primes"] = s.primes;
      sj["value"] = s.value.str();
      sj["gap"] = s.gap.str();
      sj["gap_approx"] = s.gap.to_double();
      sj["spec"] = s.spec;
      list.push_back(sj);
    }
    j["steps"] = list;
    print_json(j);
    return kOk;
  }
  std::cout << "step  primes                    gap\n";
  for (const auto& s : steps) {
    std::string primes;
    for (auto p : s.primes) primes += (primes.empty() ? "" : ",") + std::to_string(p);
    std::cout << std::left << std::setw(6) << s.index << std::setw(26) << primes << std::scientific
              << std::setprecision(4) << s.gap.to_double() << std::defaultfloat << '\n';
  }
  std::cout << "final value " << steps.back().value.str() << '\n';
  return kOk;
}

std::int64_t param(const std::vector<std::int64_t>& v, std::size_t i, std::size_t count, const std::string& family) {
  if (v.size() != count)
    throw InvalidParameter("formula " + family + " takes " + std::to_string(count) + " parameter(s)");
  return v[i];
}

int cmd_formula(const std::string& family, const std::vector<std::int64_t>& v, const Options& opt) {
  auto p = [&](std::size_t i, std::size_t n) {
    const auto x = param(v, i, n, family);
    if (x < 0) throw InvalidParameter("parameters must be non-negative");
    return x;
  };
  auto up = [&](std::size_t i, std::size_t n) { return static_cast<std::uint64_t>(p(i, n)); };
  std::optional<Rational> value;
  std::optional<BigInt> integer;
  if (family == "modular")
    value = d_prime_modular_formula(up(0, 2), p(1, 2));
  else if (family == "schmidt")
    value = d_prime_schmidt_formula(up(0, 2), p(1, 2));
  else if (family == "dihedral")
    value = d_prime_dihedral_formula(p(0, 1));
  else if (family == "heisenberg")
    value = d_prime_heisenberg_formula(up(0, 1));
  else if (family == "section")
    value = d_prime_schmidt_section_formula(up(0, 3), up(1, 3), p(2, 3));
  else if (family == "ratio")
    value = ratio_witness(p(0, 1)).value;
  else if (family == "gaussian")
    integer = gaussian_binomial(p(0, 3), p(1, 3), up(2, 3));
  else if (family == "subgroups")
    integer = num_subgroups_elem_abelian(up(0, 2), p(1, 2));
  else
    throw InvalidParameter("unknown formula '" + family +
                           "' (modular, schmidt, dihedral, heisenberg, section, ratio, gaussian, subgroups)");
  if (opt.json) {
    ojson j;
    j["formula"] = family;
    j["parameters"] = v;
    if (value)
      j["value"] = rational_to_json(*value);
    else
      j["value"] = integer->str();
    print_json(j);
  } else {
    std::cout << (value ? value->str() : integer->str()) << '\n';
  }
  return kOk;
}

int cmd_sweep(const std::vector<std::string>& specs, bool corpus, const Options& opt) {
  std::vector<GroupSpec> list;
  for (const auto& s : specs) list.push_back(GroupSpec::parse(s));
  if (corpus) {
    CorpusConfig config;
    config.limits = opt.limits();
    for (const auto& e : build_corpus(config).entries) list.push_back(e.spec);
  }
  if (list.empty()) throw InvalidParameter("sweep needs at least one spec or --corpus");
  ojson out = ojson::array();
  if (!opt.json) std::cout << "spec                      order  |L|     k'     d'         d*\n";
  for (const auto& spec : list) {
    const auto r = report_for(spec, opt, true);
    if (opt.json) {
      out.push_back(r.to_json());
    } else {
      std::cout << std::left << std::setw(26) << r.spec << std::setw(7) << r.order << std::setw(8) << r.lattice_size
                << std::setw(7) << r.k_prime << std::setw(11) << r.d_prime.str() << (r.d_star ? r.d_star->str() : "-")
                << '\n';
    }
  }
  if (opt.json) print_json(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup lattices, conjugacy classes of subgroups and the ratios d' and d*"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion));
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_flag("--dot", opt.dot, "Graphviz output for the lattice command");
  app.add_option("--max-order", opt.max_order, "Largest group order to build")->capture_default_str();
  app.add_flag("--allow-slow", opt.allow_slow, "Allow d* above order 256");
  app.add_flag("--no-cache", opt.no_cache, "Neither read nor write the result cache");
  app.add_option("--cache-path", opt.cache_path, "Cache file (default: $DEDEKIND_CACHE or ~/.cache/dedekind/cache.json)");
  app.add_option("--threads", opt.threads, "Worker threads for d* and verify")->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", opt.timing, "Report wall time in milliseconds");
  app.fallthrough();

  std::string spec, suite = "all", family, eps = "1/100";
  std::int64_t a = 0, b = 0;
  std::size_t budget = 500;
  std::vector<std::int64_t> params;
  std::vector<std::string> specs;
  bool corpus = false;

  auto* info = app.add_subcommand("info", "All invariants of a group");
  info->add_option("spec", spec, "Group spec, e.g. \"C(3) x D(8)\"")->required();
  auto* dprime = app.add_subcommand("dprime", "d' = k'/|L|");
  dprime->add_option("spec", spec)->required();
  auto* dstar = app.add_subcommand("dstar", "d*, the minimum of d' over all sections");
  dstar->add_option("spec", spec)->required();
  auto* lattice = app.add_subcommand("lattice", "Subgroup lattice (table, JSON or --dot)");
  lattice->add_option("spec", spec)->required();
  auto* sections = app.add_subcommand("sections", "Every section H/K");
  sections->add_option("spec", spec)->required();
  auto* verify = app.add_subcommand("verify", "Run verification suites over the corpus");
  verify->add_option("suite", suite, "Suite name or \"all\"")->capture_default_str();
  auto* list = app.add_subcommand("suites", "List verification suites");
  auto* density = app.add_subcommand("density", "Products of modular-group values approaching a/b");
  density->add_option("a", a)->required();
  density->add_option("b", b)->required();
  density->add_option("epsilon", eps, "Exact tolerance, e.g. 1/100 or 0.01")->capture_default_str();
  density->add_option("--budget", budget, "Odd primes available")->capture_default_str();
  auto* formula = app.add_subcommand("formula", "Evaluate a closed form");
  formula->add_option("family", family, "modular|schmidt|dihedral|heisenberg|section|ratio|gaussian|subgroups")
      ->required();
  formula->add_option("params", params)->required();
  auto* sweep = app.add_subcommand("sweep", "Invariant table for several specs");
  sweep->add_option("specs", specs);
  sweep->add_flag("--corpus", corpus, "Include every group of the verification corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*info) return cmd_info(spec, opt);
    if (*dprime) return cmd_dprime(spec, opt);
    if (*dstar) return cmd_dstar(spec, opt);
    if (*lattice) return cmd_lattice(spec, opt);
    if (*sections) return cmd_sections(spec, opt);
    if (*verify) return cmd_verify(suite, opt);
    if (*list) {
      for (const auto& s : suite_catalog()) std::cout << std::left << std::setw(20) << s.name << s.summary << '\n';
      return kOk;
    }
    if (*density) return cmd_density(a, b, eps, budget, opt);
    if (*formula) return cmd_formula(family, params, opt);
    if (*sweep) return cmd_sweep(specs, corpus, opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidParameter& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return kParameter;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOther;
}
