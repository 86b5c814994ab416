#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dedekind {

// Permutation of {0, ..., degree-1}; images[i] is where i goes.
// Products compose left to right: (a * b)(i) = b(a(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::size_t degree);
  // Product of disjoint cycles, e.g. from_cycles(4, {{0, 1, 2, 3}}).
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<std::uint32_t>> cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm&) const = default;
  std::string str() const;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace dedekind
