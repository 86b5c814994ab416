#include "dedekind/structure.hpp"

#include "dedekind/construct.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace dedekind {

ElementSet center(const FiniteGroup& g) {
  ElementSet z = g.empty_set();
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.set(a);
  }
  return z;
}

ElementSet derived_subgroup(const FiniteGroup& g) {
  std::vector<Element> commutators;
  ElementSet seen = g.empty_set();
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      Element c = g.commutator(a, b);
      if (!seen.test(c)) {
        seen.set(c);
        commutators.push_back(c);
      }
    }
  return closure(g, commutators);
}

ElementSet centralizer(const FiniteGroup& g, Element x) {
  ElementSet c = g.empty_set();
  for (Element a = 0; a < g.order(); ++a)
    if (g.mul(a, x) == g.mul(x, a)) c.set(a);
  return c;
}

ElementSet normalizer(const FiniteGroup& g, const ElementSet& subgroup) {
  ElementSet n = g.empty_set();
  for (Element x = 0; x < g.order(); ++x)
    if (conjugate_set(g, subgroup, x) == subgroup) n.set(x);
  return n;
}

std::size_t GroupFingerprintHash::operator()(const GroupFingerprint& f) const {
  std::size_t seed = 0;
  boost::hash_combine(seed, f.order);
  for (const auto& [o, c] : f.order_histogram) {
    boost::hash_combine(seed, o);
    boost::hash_combine(seed, c);
  }
  boost::hash_combine(seed, f.abelian);
  boost::hash_combine(seed, f.center_order);
  boost::hash_combine(seed, f.derived_order);
  return seed;
}

GroupFingerprint fingerprint(const FiniteGroup& g) {
  GroupFingerprint f;
  f.order = g.order();
  std::map<std::size_t, std::size_t> hist;
  for (auto o : g.element_orders()) ++hist[o];
  f.order_histogram.assign(hist.begin(), hist.end());
  f.abelian = g.is_abelian();
  if (f.abelian) {
    f.center_order = g.order();
    f.derived_order = 1;
  } else {
    f.center_order = center(g).count();
    f.derived_order = derived_subgroup(g).count();
  }
  return f;
}

std::vector<Element> generators(const FiniteGroup& g) {
  std::vector<Element> order(g.order());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Element> gens;
  ElementSet current = g.empty_set();
  current.set(0);
  for (auto x : order) {
    if (current.count() == g.order()) break;
    if (current.test(x)) continue;
    current = extend_closure(g, current, gens, x);
    gens.push_back(x);
  }
  return gens;
}

std::vector<Element> small_generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  ElementSet current = g.empty_set();
  current.set(0);
  while (current.count() < g.order()) {
    Element best = 0;
    std::size_t best_size = 0;
    ElementSet best_set;
    for (Element x = 0; x < g.order(); ++x) {
      if (current.test(x)) continue;
      ElementSet next = extend_closure(g, current, gens, x);
      const std::size_t size = next.count();
      if (size > best_size) {
        best_size = size;
        best = x;
        best_set = next;
        if (size == g.order()) break;
      }
    }
    current = std::move(best_set);
    gens.push_back(best);
  }
  return gens;
}

}  // namespace dedekind
