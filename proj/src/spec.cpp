#include "dedekind/spec.hpp"

#include "dedekind/construct.hpp"
#include "dedekind/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace dedekind {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec spec() {
    GroupSpec out;
    out.atoms.push_back(atom());
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != 'x') fail("expected 'x' or end of input");
      ++pos_;
      out.atoms.push_back(atom());
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool tag_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) && c != 'x'; }

  FamilyAtom atom() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ == text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) fail("expected a family tag");
    while (pos_ < text_.size() && tag_char(text_[pos_])) ++pos_;
    FamilyAtom a;
    a.tag = std::string(text_.substr(start, pos_ - start));
    const auto& tags = family_tags();
    auto it = std::find_if(tags.begin(), tags.end(), [&](const auto& t) { return t.first == a.tag; });
    if (it == tags.end()) {
      pos_ = start;
      fail("unknown family tag '" + a.tag + "'");
    }
    skip_space();
    if (it->second == 0) {
      if (pos_ < text_.size() && text_[pos_] == '(') fail(a.tag + " takes no parameters");
      return a;
    }
    if (pos_ == text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
    a.params.push_back(integer());
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        a.params.push_back(integer());
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (a.params.size() != it->second) {
      pos_ = start;
      fail(a.tag + " takes " + std::to_string(it->second) + " parameter(s), got " + std::to_string(a.params.size()));
    }
    return a;
  }

  std::int64_t integer() {
    skip_space();
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int d = text_[pos_] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - d) / 10) fail("integer too large");
      value = value * 10 + d;
      ++pos_;
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) { return Parser(text).spec(); }

std::string GroupSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += " x ";
    out += atoms[i].str();
  }
  return out;
}

BigInt GroupSpec::order() const {
  BigInt n = 1;
  for (const auto& a : atoms) n *= atom_order(a);
  return n;
}

FiniteGroup GroupSpec::build(const Limits& limits) const {
  const BigInt n = order();
  if (n > limits.max_order)
    throw OrderCapExceeded("group order " + n.str() + " exceeds cap " + std::to_string(limits.max_order));
  FiniteGroup g = build_atom(atoms.front(), limits);
  for (std::size_t i = 1; i < atoms.size(); ++i) g = direct_product(g, build_atom(atoms[i], limits), limits);
  return g;
}

}  // namespace dedekind
