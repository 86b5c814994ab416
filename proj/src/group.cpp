#include "dedekind/group.hpp"

#include "dedekind/error.hpp"

#include <numeric>

namespace dedekind {

FiniteGroup::FiniteGroup() : order_(1), table_{0}, inverse_{0}, element_order_{1} {}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table,
                                    std::vector<std::string> labels) {
  if (order == 0) throw InvalidTable("group order must be positive");
  if (order > Limits::kHardOrderCap)
    throw OrderCapExceeded("order " + std::to_string(order) + " exceeds hard cap");
  if (table.size() != order * order) throw InvalidTable("table size does not match order");
  if (!labels.empty() && labels.size() != order) throw InvalidTable("label count does not match order");

  // Latin square.
  std::vector<std::uint32_t> seen(order, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < order; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < order; ++b) {
      Element v = table[a * order + b];
      if (v >= order || seen[v] == stamp) throw InvalidTable("row " + std::to_string(a) + " is not a permutation");
      seen[v] = stamp;
    }
  }
  for (std::size_t b = 0; b < order; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < order; ++a) {
      Element v = table[a * order + b];
      if (seen[v] == stamp) throw InvalidTable("column " + std::to_string(b) + " is not a permutation");
      seen[v] = stamp;
    }
  }

  // Locate a two-sided identity.
  std::size_t e = order;
  for (std::size_t a = 0; a < order && e == order; ++a) {
    if (table[a * order + a] != a) continue;
    bool two_sided = true;
    for (std::size_t b = 0; b < order && two_sided; ++b)
      two_sided = table[a * order + b] == b && table[b * order + a] == b;
    if (two_sided) e = a;
  }
  if (e == order) throw InvalidTable("no two-sided identity element");

  if (e != 0) {
    // Swap the labels of e and 0.
    auto relabel = [&](Element x) -> Element {
      if (x == e) return 0;
      if (x == 0) return static_cast<Element>(e);
      return x;
    };
    std::vector<Element> swapped(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        swapped[relabel(static_cast<Element>(a)) * order + relabel(static_cast<Element>(b))] =
            relabel(table[a * order + b]);
    table = std::move(swapped);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }

  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  g.inverse_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (g.table_[a * order + b] == 0) {
        if (g.table_[b * order + a] != 0) throw InvalidTable("inverse of " + std::to_string(a) + " is one-sided");
        g.inverse_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  g.element_order_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    std::uint32_t k = 1;
    Element x = static_cast<Element>(a);
    while (x != 0) {
      x = g.mul(x, static_cast<Element>(a));
      ++k;
      if (k > order) throw InvalidTable("element " + std::to_string(a) + " has no finite order");
    }
    g.element_order_[a] = k;
  }
  return g;
}

Element FiniteGroup::pow(Element a, long long k) const {
  auto ord = static_cast<long long>(element_order_[a]);
  k %= ord;
  if (k < 0) k += ord;
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Element FiniteGroup::commutator(Element a, Element b) const {
  return mul(mul(inverse_[a], inverse_[b]), mul(a, b));
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
  return true;
}

void FiniteGroup::check_associativity() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) {
      Element ab = table_[a * order_ + b];
      for (std::size_t c = 0; c < order_; ++c) {
        if (table_[ab * order_ + c] != table_[a * order_ + table_[b * order_ + c]])
          throw InvalidTable("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                             "," + std::to_string(c) + ")");
      }
    }
}

std::string FiniteGroup::label(Element a) const {
  if (labels_.empty()) return std::to_string(a);
  return labels_[a];
}

ElementSet FiniteGroup::full_set() const {
  ElementSet s(order_);
  s.set();
  return s;
}

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, std::span<const Element> map) {
  if (map.size() != source.order()) return false;
  for (auto v : map)
    if (v >= target.order()) return false;
  for (std::size_t a = 0; a < source.order(); ++a)
    for (std::size_t b = 0; b < source.order(); ++b)
      if (map[source.mul(static_cast<Element>(a), static_cast<Element>(b))] != target.mul(map[a], map[b]))
        return false;
  return true;
}

bool is_bijective(std::size_t target_order, std::span<const Element> map) {
  if (map.size() != target_order) return false;
  std::vector<bool> hit(target_order, false);
  for (auto v : map) {
    if (v >= target_order || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::vector<Element> to_elements(const ElementSet& set) {
  std::vector<Element> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) out.push_back(static_cast<Element>(i));
  return out;
}

ElementSet to_set(std::size_t order, std::span<const Element> elements) {
  ElementSet s(order);
  for (auto e : elements) s.set(e);
  return s;
}

}  // namespace dedekind
