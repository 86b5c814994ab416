#include "dedekind/families.hpp"

#include "dedekind/construct.hpp"
#include "dedekind/error.hpp"
#include "dedekind/formulas.hpp"
#include "dedekind/numtheory.hpp"
#include "dedekind/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dedekind {

namespace {

void relation(bool holds, const std::string& what) {
  if (!holds) throw std::logic_error("constructor relation failed: " + what);
}

void check_order(const BigInt& order, const Limits& limits) {
  if (order > limits.max_order || order > Limits::kHardOrderCap)
    throw OrderCapExceeded("group order " + order.str() + " exceeds cap " + std::to_string(limits.max_order));
}

std::string power_label(const char* name, std::uint64_t k) {
  if (k == 0) return "";
  if (k == 1) return name;
  return std::string(name) + "^" + std::to_string(k);
}

std::string word_label(std::initializer_list<std::pair<const char*, std::uint64_t>> parts) {
  std::string out;
  for (const auto& [name, k] : parts) out += power_label(name, k);
  return out.empty() ? "1" : out;
}

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) throw InvalidParameter(std::string(what) + " must be prime, got " + std::to_string(p));
}

// Metacyclic table without relation checks.
FiniteGroup metacyclic_table(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::size_t n = a * b;
  std::vector<std::uint64_t> mpow(b);
  mpow[0] = 1 % a;
  for (std::uint64_t j = 1; j < b; ++j) mpow[j] = (mpow[j - 1] * m) % a;
  std::vector<Element> table(n * n);
  for (std::uint64_t j1 = 0; j1 < b; ++j1)
    for (std::uint64_t i1 = 0; i1 < a; ++i1)
      for (std::uint64_t j2 = 0; j2 < b; ++j2)
        for (std::uint64_t i2 = 0; i2 < a; ++i2) {
          const std::uint64_t i = (i1 + i2 * mpow[j1]) % a;
          const std::uint64_t j = (j1 + j2) % b;
          table[(i1 + a * j1) * n + (i2 + a * j2)] = static_cast<Element>(i + a * j);
        }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint64_t j = 0; j < b; ++j)
    for (std::uint64_t i = 0; i < a; ++i) labels.push_back(word_label({{"x", i}, {"y", j}}));
  return FiniteGroup::from_table(n, std::move(table), std::move(labels));
}

Element mc(std::uint64_t a, std::uint64_t i, std::uint64_t j) { return static_cast<Element>(i + a * j); }

// Index of a vector of F_p^r stored as base-p digits.
std::vector<std::uint64_t> digits(std::uint64_t index, std::uint64_t p, unsigned r) {
  std::vector<std::uint64_t> d(r);
  for (unsigned k = 0; k < r; ++k) {
    d[k] = index % p;
    index /= p;
  }
  return d;
}

std::uint64_t undigits(const std::vector<std::uint64_t>& d, std::uint64_t p) {
  std::uint64_t index = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) index = index * p + *it;
  return index;
}

}  // namespace

FiniteGroup cyclic(std::uint64_t n, const Limits& limits) {
  if (n < 1) throw InvalidParameter("C_n needs n >= 1");
  check_order(n, limits);
  return metacyclic_table(n, 1, 1);
}

FiniteGroup elementary_abelian(std::uint64_t p, unsigned r, const Limits& limits) {
  require_prime(p, "p");
  if (r < 1) throw InvalidParameter("rank must be >= 1");
  check_order(big_pow(p, r), limits);
  const std::size_t n = ipow(p, r);
  std::vector<Element> table(n * n);
  std::vector<std::vector<std::uint64_t>> vec(n);
  for (std::size_t a = 0; a < n; ++a) vec[a] = digits(a, p, r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::uint64_t> s(r);
      for (unsigned k = 0; k < r; ++k) s[k] = (vec[a][k] + vec[b][k]) % p;
      table[a * n + b] = static_cast<Element>(undigits(s, p));
    }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    std::string l = "(";
    for (unsigned k = 0; k < r; ++k) l += (k ? "," : "") + std::to_string(vec[a][k]);
    labels.push_back(l + ")");
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(labels));
}

FiniteGroup metacyclic(std::uint64_t a, std::uint64_t b, std::uint64_t m, const Limits& limits) {
  if (a < 1 || b < 1) throw InvalidParameter("metacyclic group needs a, b >= 1");
  check_order(BigInt(a) * b, limits);
  std::uint64_t mb = 1 % a;
  for (std::uint64_t j = 0; j < b; ++j) mb = (mb * (m % a)) % a;
  if (mb != 1 % a) throw InvalidParameter("m^b must be 1 mod a");
  if (a > 1 && std::gcd(m % a, a) != 1) throw InvalidParameter("m must be a unit mod a");
  FiniteGroup g = metacyclic_table(a, b, m);
  const Element x = mc(a, 1 % a, 0), y = mc(a, 0, 1 % b);
  relation(g.pow(x, static_cast<long long>(a)) == 0, "x^a = 1");
  relation(g.pow(y, static_cast<long long>(b)) == 0, "y^b = 1");
  relation(g.mul(y, x) == g.mul(g.pow(x, static_cast<long long>(m)), y), "yx = x^m y");
  return g;
}

FiniteGroup dihedral(std::uint64_t two_n, const Limits& limits) {
  if (two_n < 6 || two_n % 2 != 0) throw InvalidParameter("D_{2n} needs an even order >= 6");
  const std::uint64_t n = two_n / 2;
  FiniteGroup g = metacyclic(n, 2, n - 1, limits);
  const Element x = mc(n, 1, 0), y = mc(n, 0, 1);
  relation(g.element_order(x) == n && g.element_order(y) == 2, "x^n = y^2 = 1");
  relation(g.mul(y, x) == g.mul(g.pow(x, static_cast<long long>(n - 1)), y), "yx = x^{n-1} y");
  return g;
}

FiniteGroup generalized_quaternion(std::uint64_t two_to_n) {
  if (two_to_n != 8 && two_to_n != 16 && two_to_n != 32)
    throw InvalidParameter("generalized quaternion order must be 8, 16 or 32");
  const std::uint64_t m = two_to_n / 2;  // order of x
  const std::size_t n = two_to_n;
  std::vector<Element> table(n * n);
  for (std::uint64_t b1 = 0; b1 < 2; ++b1)
    for (std::uint64_t a1 = 0; a1 < m; ++a1)
      for (std::uint64_t b2 = 0; b2 < 2; ++b2)
        for (std::uint64_t a2 = 0; a2 < m; ++a2) {
          std::uint64_t a = b1 ? (a1 + m - a2) % m : (a1 + a2) % m;
          std::uint64_t b = (b1 + b2) % 2;
          if (b1 && b2) a = (a + m / 2) % m;  // y^2 = x^{m/2}
          table[(a1 + m * b1) * n + (a2 + m * b2)] = static_cast<Element>(a + m * b);
        }
  std::vector<std::string> labels;
  for (std::uint64_t b = 0; b < 2; ++b)
    for (std::uint64_t a = 0; a < m; ++a) labels.push_back(word_label({{"x", a}, {"y", b}}));
  FiniteGroup g = FiniteGroup::from_table(n, std::move(table), std::move(labels));
  const Element x = 1, y = static_cast<Element>(m);
  relation(g.element_order(x) == m, "x^{2^{n-1}} = 1");
  relation(g.mul(y, y) == g.pow(x, static_cast<long long>(m / 2)), "y^2 = x^{2^{n-2}}");
  relation(g.conjugate(y, x) == g.inverse(x), "y x y^-1 = x^-1");
  return g;
}

FiniteGroup modular_group(std::uint64_t p, unsigned n, const Limits& limits) {
  require_prime(p, "p");
  if ((p == 2 && n < 4) || n < 3) throw InvalidParameter("M_{p^n} needs n >= 4 for p = 2 and n >= 3 otherwise");
  check_order(big_pow(p, n), limits);
  const std::uint64_t a = ipow(p, n - 1);
  const std::uint64_t m = ipow(p, n - 2) + 1;
  FiniteGroup g = metacyclic(a, p, m, limits);
  const Element x = mc(a, 1, 0), y = mc(a, 0, 1);
  relation(g.element_order(x) == a && g.element_order(y) == p, "x^{p^{n-1}} = y^p = 1");
  relation(g.mul(y, x) == g.mul(g.pow(x, static_cast<long long>(m)), y), "yx = x^{p^{n-2}+1} y");
  return g;
}

FiniteGroup h_pst(std::uint64_t p, unsigned s, unsigned t, const Limits& limits) {
  require_prime(p, "p");
  if (t < 1 || s < t) throw InvalidParameter("H_{p,s,t} needs s >= t >= 1");
  if (p == 2 && s + t < 3) throw InvalidParameter("H_{2,s,t} needs s + t >= 3");
  check_order(big_pow(p, s + t + 1), limits);
  const std::uint64_t ps = ipow(p, s), pt = ipow(p, t);
  const std::size_t n = ps * pt * p;
  auto index = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return static_cast<Element>(a + ps * (b + pt * c));
  };
  std::vector<Element> table(n * n);
  for (std::uint64_t c1 = 0; c1 < p; ++c1)
    for (std::uint64_t b1 = 0; b1 < pt; ++b1)
      for (std::uint64_t a1 = 0; a1 < ps; ++a1)
        for (std::uint64_t c2 = 0; c2 < p; ++c2)
          for (std::uint64_t b2 = 0; b2 < pt; ++b2)
            for (std::uint64_t a2 = 0; a2 < ps; ++a2) {
              // (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2): x^a y^b z^c normal form.
              const std::uint64_t c = (c1 + c2 + (a1 % p) * (b2 % p)) % p;
              table[index(a1, b1, c1) * n + index(a2, b2, c2)] = index((a1 + a2) % ps, (b1 + b2) % pt, c);
            }
  std::vector<std::string> labels(n);
  for (std::uint64_t c = 0; c < p; ++c)
    for (std::uint64_t b = 0; b < pt; ++b)
      for (std::uint64_t a = 0; a < ps; ++a) labels[index(a, b, c)] = word_label({{"x", a}, {"y", b}, {"z", c}});
  FiniteGroup g = FiniteGroup::from_table(n, std::move(table), std::move(labels));
  const Element x = index(1, 0, 0), y = index(0, 1 % pt, 0), z = index(0, 0, 1);
  relation(g.element_order(x) == ps && g.element_order(y) == pt && g.element_order(z) == p,
           "x^{p^s} = y^{p^t} = z^p = 1");
  relation(g.commutator(x, z) == 0 && g.commutator(y, z) == 0, "[x,z] = [y,z] = 1");
  relation(g.commutator(x, y) == z, "[x,y] = z");
  const std::vector<Element> central{g.pow(x, static_cast<long long>(p)), g.pow(y, static_cast<long long>(p)), z};
  relation(closure(g, central) == center(g), "Z(H) = <x^p> x <y^p> x <z>");
  return g;
}

FiniteGroup heisenberg(std::uint64_t p, const Limits& limits) {
  require_prime(p, "p");
  if (p == 2) throw InvalidParameter("He_p needs an odd prime");
  FiniteGroup g = h_pst(p, 1, 1, limits);
  for (Element e = 0; e < g.order(); ++e) relation(g.pow(e, static_cast<long long>(p)) == 0, "exponent p");
  return g;
}

FiniteGroup k_pst(std::uint64_t p, unsigned s, unsigned t, const Limits& limits) {
  require_prime(p, "p");
  if (s < 2 || t < 1) throw InvalidParameter("K_{p,s,t} needs s >= 2 and t >= 1");
  if (p == 2 && s + t < 4) throw InvalidParameter("K_{2,s,t} needs s + t >= 4");
  check_order(big_pow(p, s + t), limits);
  const std::uint64_t a = ipow(p, s), b = ipow(p, t), m = ipow(p, s - 1) + 1;
  FiniteGroup g = metacyclic(a, b, m, limits);
  const Element x = mc(a, 1, 0), y = mc(a, 0, 1);
  relation(g.element_order(x) == a && g.element_order(y) == b, "x^{p^s} = y^{p^t} = 1");
  relation(g.mul(y, x) == g.mul(g.pow(x, static_cast<long long>(m)), y), "yx = x^{p^{s-1}+1} y");
  const std::vector<Element> central{g.pow(x, static_cast<long long>(p)), g.pow(y, static_cast<long long>(p))};
  relation(closure(g, central) == center(g), "Z(K) = <x^p> x <y^p>");
  return g;
}

FiniteGroup schmidt_gpqn(std::uint64_t p, std::uint64_t q, unsigned n, const Limits& limits,
                         SchmidtParameterOrder order) {
  if (order == SchmidtParameterOrder::acting_first) std::swap(p, q);
  require_prime(p, "p");
  require_prime(q, "q");
  if ((p - 1) % q != 0) throw InvalidParameter("G_{p,q,n} needs q | p - 1");
  if (n < 2) throw InvalidParameter("G_{p,q,n} needs n >= 2");
  check_order(BigInt(p) * big_pow(q, n - 1), limits);
  std::uint64_t m = 2;
  while (multiplicative_order(m, p) != q) ++m;
  const std::uint64_t b = ipow(q, n - 1);
  FiniteGroup g = metacyclic(p, b, m, limits);
  const Element x = mc(p, 1, 0), y = mc(p, 0, 1);
  relation(!g.is_abelian(), "non-abelian");
  relation(g.commutator(x, g.pow(y, static_cast<long long>(q))) == 0, "[N, Phi(P)] = 1");
  return g;
}

SchmidtSectionParams SchmidtSectionParams::make(std::uint64_t p, std::uint64_t q) {
  require_prime(p, "p");
  require_prime(q, "q");
  if (p == q) throw InvalidParameter("p and q must be distinct");
  return {p, q, static_cast<unsigned>(multiplicative_order(p, q))};
}

std::vector<std::uint64_t> cyclotomic_factor(std::uint64_t p, std::uint64_t q) {
  const auto params = SchmidtSectionParams::make(p, q);
  const unsigned r = params.r;
  // (x^q - 1)/(x - 1) = 1 + x + ... + x^{q-1}
  const std::vector<std::uint64_t> phi(q, 1);
  const std::uint64_t count = ipow(p, r);
  for (std::uint64_t k = 0; k < count; ++k) {
    auto coeffs = digits(k, p, r);  // c_0 .. c_{r-1}, monic x^r implied
    std::vector<std::uint64_t> rem(phi);
    for (std::size_t top = rem.size(); top-- > r;) {
      const std::uint64_t lead = rem[top] % p;
      if (lead == 0) continue;
      for (unsigned i = 0; i < r; ++i)
        rem[top - r + i] = (rem[top - r + i] + (p - lead) * coeffs[i]) % p;
      rem[top] = 0;
    }
    bool divides = true;
    for (unsigned i = 0; i < r && i < rem.size(); ++i)
      if (rem[i] % p != 0) divides = false;
    if (divides) return coeffs;
  }
  throw std::logic_error("no degree-r factor of the cyclotomic polynomial");
}

FiniteGroup elementary_rtimes_cq(std::uint64_t p, std::uint64_t q, const Limits& limits) {
  const auto params = SchmidtSectionParams::make(p, q);
  const unsigned r = params.r;
  check_order(big_pow(p, r) * q, limits);
  const auto coeffs = cyclotomic_factor(p, q);
  // Companion matrix: e_i -> e_{i+1}, e_{r-1} -> -sum c_i e_i.
  auto apply = [&](const std::vector<std::uint64_t>& v) {
    std::vector<std::uint64_t> w(r, 0);
    for (unsigned i = 0; i + 1 < r; ++i) w[i + 1] = (w[i + 1] + v[i]) % p;
    for (unsigned i = 0; i < r; ++i) w[i] = (w[i] + v[r - 1] * ((p - coeffs[i]) % p)) % p;
    return w;
  };
  const FiniteGroup kernel = elementary_abelian(p, r, limits);
  const FiniteGroup acting = cyclic(q, limits);
  const std::size_t kn = kernel.order();
  Action action(q, std::vector<Element>(kn));
  for (std::size_t v = 0; v < kn; ++v) action[0][v] = static_cast<Element>(v);
  for (std::uint64_t k = 1; k < q; ++k)
    for (std::size_t v = 0; v < kn; ++v)
      action[k][v] = static_cast<Element>(undigits(apply(digits(action[k - 1][v], p, r)), p));
  relation(action[1] != action[0], "faithful action");
  return semidirect_product(kernel, acting, action, limits);
}

FiniteGroup c27_rtimes_q8(const Limits& limits) {
  const FiniteGroup c27 = cyclic(27, limits);
  const FiniteGroup q8 = generalized_quaternion(8);
  Action action(8, std::vector<Element>(27));
  for (Element h = 0; h < 8; ++h)
    for (Element v = 0; v < 27; ++v) action[h][v] = h < 4 ? v : c27.inverse(v);  // x^a y^b, b = h / 4
  return semidirect_product(c27, q8, action, limits);
}

FiniteGroup klein_rtimes_c4() {
  const FiniteGroup v4 = elementary_abelian(2, 2);
  const FiniteGroup c4 = cyclic(4);
  // (v0, v1) -> (v1, v0) on indices v0 + 2 v1.
  const std::vector<Element> swap{0, 2, 1, 3};
  const std::vector<Element> id{0, 1, 2, 3};
  Action action{id, swap, id, swap};
  return semidirect_product(v4, c4, action);
}

std::string FamilyAtom::str() const {
  std::string out = tag;
  if (params.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
  return out + ")";
}

const std::vector<std::pair<std::string, std::size_t>>& family_tags() {
  static const std::vector<std::pair<std::string, std::size_t>> tags{
      {"C", 1}, {"EA", 2}, {"D", 1}, {"Q", 1}, {"M", 2},  {"He", 1},    {"G", 3},
      {"H", 3}, {"K", 3},  {"SD", 2}, {"MC", 3}, {"C27Q8", 0}, {"V4C4", 0}};
  return tags;
}

namespace {

std::uint64_t u(std::int64_t v, const char* what) {
  if (v < 0) throw InvalidParameter(std::string(what) + " must be non-negative");
  return static_cast<std::uint64_t>(v);
}

unsigned small(std::int64_t v, const char* what) {
  if (v < 0 || v > 64) throw InvalidParameter(std::string(what) + " out of range");
  return static_cast<unsigned>(v);
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned log2_exact(std::uint64_t n) {
  unsigned k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

BigInt atom_order(const FamilyAtom& atom) {
  const auto& tags = family_tags();
  auto it = std::find_if(tags.begin(), tags.end(), [&](const auto& t) { return t.first == atom.tag; });
  if (it == tags.end()) throw InvalidParameter("unknown family '" + atom.tag + "'");
  if (atom.params.size() != it->second)
    throw InvalidParameter(atom.tag + " takes " + std::to_string(it->second) + " parameters");
  const auto& v = atom.params;
  const std::string& t = atom.tag;
  if (t == "C") {
    if (v[0] < 1) throw InvalidParameter("C_n needs n >= 1");
    return u(v[0], "n");
  }
  if (t == "EA") {
    require_prime(u(v[0], "p"), "p");
    if (v[1] < 1) throw InvalidParameter("rank must be >= 1");
    return big_pow(u(v[0], "p"), small(v[1], "r"));
  }
  if (t == "D") {
    if (v[0] < 6 || v[0] % 2 != 0) throw InvalidParameter("D_{2n} needs an even order >= 6");
    return u(v[0], "2n");
  }
  if (t == "Q") {
    if (v[0] != 8 && v[0] != 16 && v[0] != 32) throw InvalidParameter("quaternion order must be 8, 16 or 32");
    return u(v[0], "order");
  }
  if (t == "M") {
    const auto p = u(v[0], "p");
    const auto n = small(v[1], "n");
    require_prime(p, "p");
    if ((p == 2 && n < 4) || n < 3) throw InvalidParameter("M_{p^n} needs n >= 4 for p = 2 and n >= 3 otherwise");
    return big_pow(p, n);
  }
  if (t == "He") {
    const auto p = u(v[0], "p");
    require_prime(p, "p");
    if (p == 2) throw InvalidParameter("He_p needs an odd prime");
    return big_pow(p, 3);
  }
  if (t == "G") {
    const auto p = u(v[0], "p"), q = u(v[1], "q");
    const auto n = small(v[2], "n");
    require_prime(p, "p");
    require_prime(q, "q");
    if ((p - 1) % q != 0) throw InvalidParameter("G_{p,q,n} needs q | p - 1");
    if (n < 2) throw InvalidParameter("G_{p,q,n} needs n >= 2");
    return BigInt(p) * big_pow(q, n - 1);
  }
  if (t == "H") {
    const auto p = u(v[0], "p");
    const auto s = small(v[1], "s"), tt = small(v[2], "t");
    require_prime(p, "p");
    if (tt < 1 || s < tt) throw InvalidParameter("H_{p,s,t} needs s >= t >= 1");
    if (p == 2 && s + tt < 3) throw InvalidParameter("H_{2,s,t} needs s + t >= 3");
    return big_pow(p, s + tt + 1);
  }
  if (t == "K") {
    const auto p = u(v[0], "p");
    const auto s = small(v[1], "s"), tt = small(v[2], "t");
    require_prime(p, "p");
    if (s < 2 || tt < 1) throw InvalidParameter("K_{p,s,t} needs s >= 2 and t >= 1");
    if (p == 2 && s + tt < 4) throw InvalidParameter("K_{2,s,t} needs s + t >= 4");
    return big_pow(p, s + tt);
  }
  if (t == "SD") {
    const auto params = SchmidtSectionParams::make(u(v[0], "p"), u(v[1], "q"));
    return big_pow(params.p, params.r) * params.q;
  }
  if (t == "MC") {
    if (v[0] < 1 || v[1] < 1 || v[2] < 0) throw InvalidParameter("MC(a,b,m) needs a, b >= 1, m >= 0");
    return BigInt(v[0]) * v[1];
  }
  if (t == "C27Q8") return 216;
  return 16;  // V4C4
}

FiniteGroup build_atom(const FamilyAtom& atom, const Limits& limits) {
  check_order(atom_order(atom), limits);
  const auto& v = atom.params;
  const std::string& t = atom.tag;
  if (t == "C") return cyclic(u(v[0], "n"), limits);
  if (t == "EA") return elementary_abelian(u(v[0], "p"), small(v[1], "r"), limits);
  if (t == "D") return dihedral(u(v[0], "2n"), limits);
  if (t == "Q") return generalized_quaternion(u(v[0], "order"));
  if (t == "M") return modular_group(u(v[0], "p"), small(v[1], "n"), limits);
  if (t == "He") return heisenberg(u(v[0], "p"), limits);
  if (t == "G") return schmidt_gpqn(u(v[0], "p"), u(v[1], "q"), small(v[2], "n"), limits);
  if (t == "H") return h_pst(u(v[0], "p"), small(v[1], "s"), small(v[2], "t"), limits);
  if (t == "K") return k_pst(u(v[0], "p"), small(v[1], "s"), small(v[2], "t"), limits);
  if (t == "SD") return elementary_rtimes_cq(u(v[0], "p"), u(v[1], "q"), limits);
  if (t == "MC") return metacyclic(u(v[0], "a"), u(v[1], "b"), u(v[2], "m"), limits);
  if (t == "C27Q8") return c27_rtimes_q8(limits);
  return klein_rtimes_c4();
}

std::optional<Rational> expected_d_prime(const FamilyAtom& atom) {
  atom_order(atom);
  const auto& v = atom.params;
  const std::string& t = atom.tag;
  if (t == "C" || t == "EA") return Rational(1);
  if (t == "Q" && v[0] == 8) return Rational(1);
  if (t == "D" && is_power_of_two(u(v[0], "2n"))) return d_prime_dihedral_formula(log2_exact(u(v[0], "2n")));
  if (t == "M") return d_prime_modular_formula(u(v[0], "p"), v[1]);
  if (t == "He") return d_prime_heisenberg_formula(u(v[0], "p"));
  if (t == "G") return d_prime_schmidt_formula(u(v[0], "p"), v[2]);
  if (t == "K" && v[2] == 1) return d_prime_modular_formula(u(v[0], "p"), v[1] + 1);
  if (t == "SD") {
    const auto params = SchmidtSectionParams::make(u(v[0], "p"), u(v[1], "q"));
    return d_prime_schmidt_section_formula(params.p, params.q, params.r);
  }
  if (t == "C27Q8") return Rational(2, 11);
  if (t == "V4C4") return Rational(17, 23);
  return std::nullopt;
}

FamilyInstance make_instance(const FamilyAtom& atom, const Limits& limits) {
  return FamilyInstance{atom, build_atom(atom, limits), expected_d_prime(atom)};
}

}  // namespace dedekind
