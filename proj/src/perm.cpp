#include "dedekind/perm.hpp"

#include "dedekind/error.hpp"

#include <boost/container_hash/hash.hpp>

#include <sstream>

namespace dedekind {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw InvalidParameter("permutation images are not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  return Perm(std::move(images));
}

Perm Perm::from_cycles(std::size_t degree,
                       std::initializer_list<std::initializer_list<std::uint32_t>> cycles) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  for (const auto& cycle : cycles) {
    std::vector<std::uint32_t> c(cycle);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= degree) throw InvalidParameter("cycle point out of range");
      images[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return Perm(std::move(images));
}

Perm Perm::operator*(const Perm& other) const {
  if (other.degree() != degree()) throw InvalidParameter("permutation degrees differ");
  std::vector<std::uint32_t> images(degree());
  for (std::size_t i = 0; i < degree(); ++i) images[i] = other.images_[images_[i]];
  Perm out;
  out.images_ = std::move(images);
  return out;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> images(degree());
  for (std::size_t i = 0; i < degree(); ++i) images[images_[i]] = static_cast<std::uint32_t>(i);
  Perm out;
  out.images_ = std::move(images);
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Perm::str() const {
  std::ostringstream os;
  std::vector<bool> done(degree(), false);
  bool any = false;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    std::uint32_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) os << ' ';
      os << j;
      first = false;
      j = images_[j];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::size_t PermHash::operator()(const Perm& p) const {
  return boost::hash_range(p.images().begin(), p.images().end());
}

}  // namespace dedekind
