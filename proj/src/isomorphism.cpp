#include "dedekind/isomorphism.hpp"

#include "dedekind/error.hpp"
#include "dedekind/structure.hpp"

#include <utility>

namespace dedekind {

namespace {

constexpr Element kUnset = ~Element{0};

std::vector<std::pair<std::uint32_t, std::size_t>> signatures(const FiniteGroup& g) {
  std::vector<std::pair<std::uint32_t, std::size_t>> sig(g.order());
  for (Element x = 0; x < g.order(); ++x) sig[x] = {g.element_order(x), centralizer(g, x).count()};
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& g, const FiniteGroup& h) : g_(g), h_(h), gens_(small_generating_set(g)) {
    const auto gs = signatures(g), hs = signatures(h);
    candidates_.resize(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (Element y = 0; y < h.order(); ++y)
        if (hs[y] == gs[gens_[i]]) candidates_[i].push_back(y);
    images_.resize(gens_.size());
  }

  std::optional<Homomorphism> run() {
    if (search(0)) return Homomorphism{map_};
    return std::nullopt;
  }

 private:
  // Extends the assignment of the first `depth` generators over the subgroup
  // they generate; false on a conflict or a collision.
  bool propagate(std::size_t depth) {
    map_.assign(g_.order(), kUnset);
    std::vector<bool> used(h_.order(), false);
    map_[0] = 0;
    used[0] = true;
    std::vector<Element> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Element x = queue[q];
      for (std::size_t j = 0; j < depth; ++j) {
        const Element y = g_.mul(x, gens_[j]);
        const Element image = h_.mul(map_[x], images_[j]);
        if (map_[y] == kUnset) {
          if (used[image]) return false;
          used[image] = true;
          map_[y] = image;
          queue.push_back(y);
        } else if (map_[y] != image) {
          return false;
        }
      }
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == gens_.size()) return propagate(depth);
    for (auto y : candidates_[depth]) {
      images_[depth] = y;
      if (propagate(depth + 1) && search(depth + 1)) return true;
    }
    return false;
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  std::vector<Element> map_;
};

}  // namespace

std::optional<Homomorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  if (g.order() > limits.iso_cap || h.order() > limits.iso_cap)
    throw IsoCapExceeded("isomorphism test above order cap " + std::to_string(limits.iso_cap));
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() == 1) return Homomorphism{{0}};
  if (!(fingerprint(g) == fingerprint(h))) return std::nullopt;
  return IsoSearch(g, h).run();
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  return find_isomorphism(g, h, limits).has_value();
}

}  // namespace dedekind
