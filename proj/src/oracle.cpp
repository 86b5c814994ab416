#include "dedekind/oracle.hpp"

#include "dedekind/error.hpp"

#include <algorithm>
#include <set>

namespace dedekind {

namespace {

bool closed(const FiniteGroup& g, const ElementSet& s) {
  const auto elems = to_elements(s);
  for (auto a : elems)
    for (auto b : elems)
      if (!s.test(g.mul(a, b))) return false;
  return true;
}

}  // namespace

std::vector<ElementSet> brute_force_subgroups(const FiniteGroup& g) {
  std::vector<ElementSet> cyclic;
  for (Element x = 0; x < g.order(); ++x) {
    ElementSet c = g.empty_set();
    Element y = 0;
    do {
      c.set(y);
      y = g.mul(y, x);
    } while (y != 0);
    if (std::find(cyclic.begin(), cyclic.end(), c) == cyclic.end()) cyclic.push_back(c);
  }
  std::set<std::vector<Element>> found;
  const std::size_t m = cyclic.size();
  if (m > 24) throw InvalidParameter("too many cyclic subgroups for the brute-force oracle");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    ElementSet u = g.empty_set();
    u.set(0);
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) u |= cyclic[i];
    if (closed(g, u)) found.insert(to_elements(u));
  }
  std::vector<ElementSet> out;
  for (const auto& e : found) out.push_back(to_set(g.order(), e));
  return out;
}

}  // namespace dedekind
