#pragma once

// Deliberately simple reference implementations used as oracles by the unit
// tests. Subgroups are sorted element vectors; nothing here shares code with
// the library beyond FiniteGroup::mul.

#include "dedekind/group.hpp"
#include "dedekind/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace naive {

using dedekind::Element;
using dedekind::FiniteGroup;
using Set = std::vector<Element>;

inline Set close(const FiniteGroup& g, Set s) {
  std::set<Element> out(s.begin(), s.end());
  out.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Element> cur(out.begin(), out.end());
    for (auto a : cur)
      for (auto b : cur)
        if (out.insert(g.mul(a, b)).second) grew = true;
  }
  return {out.begin(), out.end()};
}

inline bool is_closed(const FiniteGroup& g, const Set& s) {
  std::set<Element> in(s.begin(), s.end());
  if (!in.count(0)) return false;
  for (auto a : s)
    for (auto b : s)
      if (!in.count(g.mul(a, b))) return false;
  return true;
}

// Every subset containing the identity, tested for closure. Orders up to ~16.
inline std::set<Set> subgroups_by_subsets(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::set<Set> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    Set s{0};
    for (std::size_t i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1) s.push_back(static_cast<Element>(i));
    if (is_closed(g, s)) out.insert(s);
  }
  return out;
}

// Grow from the trivial subgroup by adjoining single elements until nothing new appears.
inline std::set<Set> subgroups_by_growth(const FiniteGroup& g) {
  std::set<Set> all{{0}};
  std::vector<Set> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const auto& h : frontier)
      for (Element x = 0; x < g.order(); ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        Set s = h;
        s.push_back(x);
        auto c = close(g, s);
        if (all.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return all;
}

inline Set conjugate(const FiniteGroup& g, const Set& h, Element x) {
  Set out;
  for (auto e : h) out.push_back(g.mul(g.mul(x, e), g.inverse(x)));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t class_count(const FiniteGroup& g, const std::set<Set>& subs) {
  std::set<Set> seen;
  std::size_t classes = 0;
  for (const auto& h : subs) {
    if (seen.count(h)) continue;
    ++classes;
    for (Element x = 0; x < g.order(); ++x) seen.insert(conjugate(g, h, x));
  }
  return classes;
}

inline std::size_t normal_count(const FiniteGroup& g, const std::set<Set>& subs) {
  std::size_t n = 0;
  for (const auto& h : subs) {
    bool normal = true;
    for (Element x = 0; x < g.order() && normal; ++x) normal = conjugate(g, h, x) == h;
    n += normal;
  }
  return n;
}

// { x : x H x^-1 = H }
inline Set normalizer(const FiniteGroup& g, const Set& h) {
  Set out;
  for (Element x = 0; x < g.order(); ++x)
    if (conjugate(g, h, x) == h) out.push_back(x);
  return out;
}

inline dedekind::Rational d_prime(const FiniteGroup& g) {
  const auto subs = subgroups_by_growth(g);
  return dedekind::Rational(dedekind::BigInt(class_count(g, subs)), dedekind::BigInt(subs.size()));
}

// H/K for K normal in H, as a table on left cosets numbered in order of their
// smallest element.
inline FiniteGroup quotient(const FiniteGroup& g, const Set& h, const Set& k) {
  std::map<Set, Element> index;
  std::vector<Set> cosets;
  std::map<Element, Element> of;
  for (auto x : h) {
    Set c;
    for (auto y : k) c.push_back(g.mul(x, y));
    std::sort(c.begin(), c.end());
    auto [it, fresh] = index.emplace(c, static_cast<Element>(cosets.size()));
    if (fresh) cosets.push_back(c);
    of[x] = it->second;
  }
  const std::size_t n = cosets.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = of.at(g.mul(cosets[a][0], cosets[b][0]));
  return FiniteGroup::from_table(n, table);
}

// Minimum d' over every H/K with K normal in H.
inline dedekind::Rational d_star(const FiniteGroup& g) {
  const auto subs = subgroups_by_growth(g);
  dedekind::Rational best(1);
  for (const auto& h : subs)
    for (const auto& k : subs) {
      if (!std::includes(h.begin(), h.end(), k.begin(), k.end())) continue;
      bool normal = true;
      for (auto x : h) normal = normal && conjugate(g, k, x) == k;
      if (!normal) continue;
      best = std::min(best, naive::d_prime(quotient(g, h, k)));
    }
  return best;
}

inline Set join(const FiniteGroup& g, const Set& a, const Set& b) {
  Set u = a;
  u.insert(u.end(), b.begin(), b.end());
  return close(g, u);
}

inline Set meet(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Direct check of X v (Y ^ Z) = (X v Y) ^ Z over all triples with X <= Z.
inline bool modular_law_holds(const FiniteGroup& g, const std::set<Set>& subs) {
  for (const auto& x : subs)
    for (const auto& z : subs) {
      if (!std::includes(z.begin(), z.end(), x.begin(), x.end())) continue;
      for (const auto& y : subs)
        if (join(g, x, meet(y, z)) != meet(join(g, x, y), z)) return false;
    }
  return true;
}

}  // namespace naive
