// Python module dedekind._core. Rationals cross the boundary as "num/den"
// strings and reports as JSON text; the Python package wraps both.

#include "dedekind/error.hpp"
#include "dedekind/formulas.hpp"
#include "dedekind/invariants.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/spec.hpp"
#include "dedekind/verify.hpp"
#include "dedekind/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dedekind;

namespace {

Limits limits_for(std::size_t max_order) {
  if (max_order < 1 || max_order > Limits::kHardOrderCap)
    throw InvalidParameter("max_order must be between 1 and " + std::to_string(Limits::kHardOrderCap));
  Limits l;
  l.max_order = max_order;
  return l;
}

SubgroupLattice lattice_for(const std::string& spec, std::size_t max_order) {
  const Limits limits = limits_for(max_order);
  return all_subgroups(GroupSpec::parse(spec).build(limits), limits);
}

std::string report_json(const std::string& text, bool with_d_star, bool allow_slow, unsigned threads,
                        std::size_t max_order) {
  const auto spec = GroupSpec::parse(text);
  const Limits limits = limits_for(max_order);
  const auto lat = all_subgroups(spec.build(limits), limits);
  ReportOptions options;
  options.with_d_star = with_d_star && (allow_slow || lat.group().order() <= DStarOptions::kSlowOrder);
  options.d_star.allow_slow = allow_slow;
  options.d_star.threads = threads;
  return compute_report(spec.str(), lat, limits, options).to_json().dump();
}

std::string d_star_text(const std::string& spec, bool allow_slow, bool pruned, unsigned threads,
                        std::size_t max_order) {
  const auto lat = lattice_for(spec, max_order);
  DStarOptions o;
  o.allow_slow = allow_slow;
  o.skip_abelian = pruned;
  o.deduplicate = pruned;
  o.threads = threads;
  return d_star(lat, limits_for(max_order), o).str();
}

py::dict lattice_dict(const std::string& spec, std::size_t max_order) {
  const auto lat = lattice_for(spec, max_order);
  py::list subs;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    py::dict s;
    s["index"] = i;
    s["order"] = lat[i].order;
    s["class"] = lat.class_of(i);
    s["normal"] = lat.is_normal(i);
    s["members"] = to_elements(lat[i].members);
    subs.append(s);
  }
  py::dict out;
  out["spec"] = GroupSpec::parse(spec).str();
  out["order"] = lat.group().order();
  out["subgroups"] = subs;
  out["hasse_edges"] = hasse_edges(lat);
  return out;
}

py::list density_list(std::int64_t a, std::int64_t b, const std::string& epsilon, std::size_t budget) {
  py::list out;
  for (const auto& s : density_sequence(a, b, Rational::parse(epsilon), budget)) {
    py::dict d;
    d["index"] = s.index;
    d["primes"] = s.primes;
    d["value"] = s.value.str();
    d["gap"] = s.gap.str();
    d["spec"] = s.spec;
    out.append(d);
  }
  return out;
}

std::string verify_json(const std::string& suite, unsigned threads) {
  const CorpusAnalysis analysis(build_corpus(), threads);
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  if (suite == "all") {
    for (const auto& r : run_all_suites(analysis)) j.push_back(r.to_json());
  } else {
    j.push_back(run_suite(suite, analysis).to_json());
  }
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Subgroup lattices and the ratios d' and d* of finite groups";
  m.attr("__version__") = kEngineVersion;

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto parse = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  auto param = py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  auto cap = py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  (void)parse;
  (void)param;
  (void)cap;

  const std::size_t default_max = Limits{}.max_order;

  m.def("canonical_spec", [](const std::string& s) { return GroupSpec::parse(s).str(); }, py::arg("spec"));
  m.def("group_order", [](const std::string& s) { return GroupSpec::parse(s).order().str(); }, py::arg("spec"));
  m.def("report_json", &report_json, py::arg("spec"), py::arg("d_star") = true, py::arg("allow_slow") = false,
        py::arg("threads") = 1, py::arg("max_order") = default_max);
  m.def(
      "d_prime", [](const std::string& s, std::size_t mo) { return d_prime(lattice_for(s, mo)).str(); },
      py::arg("spec"), py::arg("max_order") = default_max);
  m.def("d_star", &d_star_text, py::arg("spec"), py::arg("allow_slow") = false, py::arg("pruned") = true,
        py::arg("threads") = 1, py::arg("max_order") = default_max);
  m.def("lattice", &lattice_dict, py::arg("spec"), py::arg("max_order") = default_max);
  m.def(
      "dot", [](const std::string& s, std::size_t mo) { return to_dot(lattice_for(s, mo), GroupSpec::parse(s).str()); },
      py::arg("spec"), py::arg("max_order") = default_max);
  m.def(
      "is_modular", [](const std::string& s, std::size_t mo) { return is_lattice_modular(lattice_for(s, mo)).modular; },
      py::arg("spec"), py::arg("max_order") = default_max);

  m.def("modular_formula", [](std::uint64_t p, std::int64_t n) { return d_prime_modular_formula(p, n).str(); });
  m.def("schmidt_formula", [](std::uint64_t p, std::int64_t n) { return d_prime_schmidt_formula(p, n).str(); });
  m.def("dihedral_formula", [](std::int64_t n) { return d_prime_dihedral_formula(n).str(); });
  m.def("heisenberg_formula", [](std::uint64_t p) { return d_prime_heisenberg_formula(p).str(); });
  m.def("section_formula",
        [](std::uint64_t p, std::uint64_t q, std::int64_t r) { return d_prime_schmidt_section_formula(p, q, r).str(); });
  m.def("gaussian_binomial",
        [](std::int64_t r, std::int64_t i, std::uint64_t p) { return gaussian_binomial(r, i, p).str(); });
  m.def("density", &density_list, py::arg("a"), py::arg("b"), py::arg("epsilon") = "1/100",
        py::arg("budget") = 500);

  m.def("suite_names", [] {
    std::vector<std::string> out;
    for (const auto& s : suite_catalog()) out.push_back(s.name);
    return out;
  });
  m.def("verify_json", &verify_json, py::arg("suite") = "all", py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
}
