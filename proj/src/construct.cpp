#include "dedekind/construct.hpp"

#include "dedekind/error.hpp"

#include <unordered_map>

namespace dedekind {

FiniteGroup closure_from_generators(std::span<const Perm> gens, std::size_t max_order) {
  if (gens.empty()) throw InvalidParameter("closure needs at least one generator");
  const std::size_t degree = gens.front().degree();
  for (const auto& s : gens)
    if (s.degree() != degree) throw InvalidParameter("generators have different degrees");
  if (max_order > Limits::kHardOrderCap) max_order = Limits::kHardOrderCap;

  std::vector<Perm> elements{Perm::identity(degree)};
  std::unordered_map<Perm, Element, PermHash> index{{elements.front(), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : gens) {
      Perm p = elements[i] * s;
      if (index.contains(p)) continue;
      if (elements.size() == max_order)
        throw OrderCapExceeded("permutation closure exceeds order cap " + std::to_string(max_order));
      index.emplace(p, static_cast<Element>(elements.size()));
      elements.push_back(std::move(p));
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(elements[a] * elements[b]);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elements) labels.push_back(p.str());
  return FiniteGroup::from_table(n, std::move(table), std::move(labels));
}

namespace {

void check_cap(std::size_t order, const Limits& limits) {
  if (order > limits.max_order || order > Limits::kHardOrderCap)
    throw OrderCapExceeded("group order " + std::to_string(order) + " exceeds cap " +
                           std::to_string(limits.max_order));
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  const std::size_t gn = g.order(), hn = h.order();
  check_cap(gn * hn, limits);
  const std::size_t n = gn * hn;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ag = static_cast<Element>(a / hn), ah = static_cast<Element>(a % hn);
    for (std::size_t b = 0; b < n; ++b) {
      const auto bg = static_cast<Element>(b / hn), bh = static_cast<Element>(b % hn);
      table[a * n + b] = static_cast<Element>(g.mul(ag, bg) * hn + h.mul(ah, bh));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a)
    labels.push_back("(" + g.label(static_cast<Element>(a / hn)) + "," + h.label(static_cast<Element>(a % hn)) + ")");
  return FiniteGroup::from_table(n, std::move(table), std::move(labels));
}

FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting, const Action& action,
                               const Limits& limits) {
  const std::size_t nn = normal.order(), hn = acting.order();
  check_cap(nn * hn, limits);
  if (action.size() != hn) throw NotAnAction("action must list one map per acting element");
  for (std::size_t h = 0; h < hn; ++h) {
    const auto& phi = action[h];
    if (phi.size() != nn || !is_bijective(nn, phi))
      throw NotAnAutomorphism("action of element " + std::to_string(h) + " is not a bijection");
    if (!is_homomorphism(normal, normal, phi))
      throw NotAnAutomorphism("action of element " + std::to_string(h) + " is not a homomorphism");
  }
  for (std::size_t x = 0; x < hn; ++x)
    for (std::size_t y = 0; y < hn; ++y) {
      const auto& composite = action[acting.mul(static_cast<Element>(x), static_cast<Element>(y))];
      for (std::size_t v = 0; v < nn; ++v)
        if (composite[v] != action[x][action[y][v]])
          throw NotAnAction("action is not a homomorphism at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }

  const std::size_t n = nn * hn;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto an = static_cast<Element>(a % nn), ah = static_cast<Element>(a / nn);
    for (std::size_t b = 0; b < n; ++b) {
      const auto bn = static_cast<Element>(b % nn), bh = static_cast<Element>(b / nn);
      const Element pn = normal.mul(an, action[ah][bn]);
      const Element ph = acting.mul(ah, bh);
      table[a * n + b] = static_cast<Element>(ph * nn + pn);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a)
    labels.push_back("(" + normal.label(static_cast<Element>(a % nn)) + "," +
                     acting.label(static_cast<Element>(a / nn)) + ")");
  return FiniteGroup::from_table(n, std::move(table), std::move(labels));
}

Quotient quotient(const FiniteGroup& g, const ElementSet& normal) {
  if (normal.size() != g.order() || !is_subgroup(g, normal)) throw InvalidParameter("kernel is not a subgroup");
  if (!is_normal(g, normal)) throw NotNormal("kernel is not a normal subgroup");
  const std::size_t n = g.order();
  const auto kernel = to_elements(normal);
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> coset(n, kUnset);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] != kUnset) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(static_cast<Element>(x));
    for (auto k : kernel) coset[g.mul(static_cast<Element>(x), k)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = coset[g.mul(reps[a], reps[b])];
  std::vector<std::string> labels;
  labels.reserve(m);
  for (auto r : reps) labels.push_back(g.label(r) + "N");
  return Quotient{FiniteGroup::from_table(m, std::move(table), std::move(labels)), Homomorphism{std::move(coset)}};
}

InducedSubgroup induced_subgroup(const FiniteGroup& g, const ElementSet& members) {
  auto embedding = to_elements(members);
  const std::size_t m = embedding.size();
  if (m == 0 || embedding.front() != 0) throw InvalidParameter("subgroup must contain the identity");
  std::vector<Element> local(g.order(), ~Element{0});
  for (std::size_t i = 0; i < m; ++i) local[embedding[i]] = static_cast<Element>(i);
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Element v = local[g.mul(embedding[a], embedding[b])];
      if (v == ~Element{0}) throw InvalidParameter("member set is not closed under multiplication");
      table[a * m + b] = v;
    }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.reserve(m);
    for (auto e : embedding) labels.push_back(g.label(e));
  }
  return InducedSubgroup{FiniteGroup::from_table(m, std::move(table), std::move(labels)), std::move(embedding)};
}

ElementSet closure(const FiniteGroup& g, std::span<const Element> gens) {
  ElementSet members = g.empty_set();
  members.set(0);
  std::vector<Element> current;
  for (auto x : gens) {
    if (members.test(x)) continue;
    members = extend_closure(g, members, current, x);
    current.push_back(x);
  }
  return members;
}

ElementSet extend_closure(const FiniteGroup& g, const ElementSet& base, std::span<const Element> base_gens,
                          Element extra) {
  if (base.test(extra)) return base;
  // Dimino: the result is a union of right cosets base * r; grow the list of
  // coset representatives until it is closed under right multiplication.
  const auto base_elems = to_elements(base);
  std::vector<Element> gens(base_gens.begin(), base_gens.end());
  gens.push_back(extra);
  ElementSet result = base;
  std::vector<Element> reps{0};
  auto add_coset = [&](Element r) {
    for (auto h : base_elems) result.set(g.mul(h, r));
    reps.push_back(r);
  };
  add_coset(extra);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (auto s : gens) {
      Element e = g.mul(reps[i], s);
      if (!result.test(e)) add_coset(e);
    }
  }
  return result;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& set) {
  if (set.size() != g.order() || !set.test(0)) return false;
  const auto elems = to_elements(set);
  for (auto a : elems)
    for (auto b : elems)
      if (!set.test(g.mul(a, b))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const ElementSet& subgroup) {
  const auto elems = to_elements(subgroup);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (auto h : elems)
      if (!subgroup.test(g.conjugate(static_cast<Element>(x), h))) return false;
  return true;
}

bool is_normalized_by(const FiniteGroup& g, const ElementSet& subgroup, std::span<const Element> gens) {
  for (auto x : gens)
    for (auto h = subgroup.find_first(); h != ElementSet::npos; h = subgroup.find_next(h))
      if (!subgroup.test(g.conjugate(x, static_cast<Element>(h)))) return false;
  return true;
}

ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& set, Element x) {
  ElementSet out = g.empty_set();
  for (auto h = set.find_first(); h != ElementSet::npos; h = set.find_next(h))
    out.set(g.conjugate(x, static_cast<Element>(h)));
  return out;
}

}  // namespace dedekind
