#include "dedekind/formulas.hpp"

#include "dedekind/error.hpp"
#include "dedekind/numtheory.hpp"

#include <cmath>

namespace dedekind {

Rational d_prime_modular_formula(std::uint64_t p, std::int64_t n) {
  if (!is_prime(p)) throw InvalidParameter("M_{p^n} needs p prime");
  if ((p == 2 && n < 4) || n < 3) throw InvalidParameter("M_{p^n} needs n >= 4 for p = 2 and n >= 3 otherwise");
  const BigInt p1 = BigInt(p) + 1;
  return Rational((n - 2) * p1 + 4, (n - 1) * p1 + 2);
}

Rational d_prime_schmidt_formula(std::uint64_t p, std::int64_t n) {
  if (!is_prime(p) || p < 3) throw InvalidParameter("G_{p,q,n} needs an odd prime p");
  if (n < 2) throw InvalidParameter("G_{p,q,n} needs n >= 2");
  return Rational(BigInt(2 * n), BigInt(2 * n) + BigInt(p) - 1);
}

Rational d_prime_dihedral_formula(std::int64_t n) {
  if (n < 3) throw InvalidParameter("D_{2^n} needs n >= 3");
  return Rational(BigInt(3 * n - 1), big_pow(2, static_cast<unsigned>(n)) + n - 1);
}

Rational d_prime_heisenberg_formula(std::uint64_t p) {
  if (!is_prime(p) || p < 3) throw InvalidParameter("He_p needs an odd prime p");
  const BigInt bp(p);
  return Rational(2 * bp + 5, bp * bp + 2 * bp + 4);
}

BigInt gaussian_binomial(std::int64_t r, std::int64_t i, std::uint64_t p) {
  if (r < 0 || i < 0 || i > r) throw InvalidParameter("gaussian binomial needs 0 <= i <= r");
  if (p < 2) throw InvalidParameter("gaussian binomial needs p >= 2");
  BigInt num = 1, den = 1;
  for (std::int64_t k = 0; k < i; ++k) {
    num *= big_pow(p, static_cast<unsigned>(r - k)) - 1;
    den *= big_pow(p, static_cast<unsigned>(k + 1)) - 1;
  }
  if (num % den != 0) throw std::logic_error("gaussian binomial division is not exact");
  return num / den;
}

BigInt num_subgroups_elem_abelian(std::uint64_t p, std::int64_t r) {
  if (r < 0) throw InvalidParameter("rank must be non-negative");
  BigInt total = 0;
  for (std::int64_t i = 0; i <= r; ++i) total += gaussian_binomial(r, i, p);
  return total;
}

SchmidtSectionCounts schmidt_section_counts(std::uint64_t p, std::uint64_t q, std::int64_t r) {
  if (!is_prime(p) || !is_prime(q) || p == q) throw InvalidParameter("p and q must be distinct primes");
  if (r < 1 || multiplicative_order(p, q) != static_cast<std::uint64_t>(r))
    throw InvalidParameter("r must be the multiplicative order of p modulo q");
  SchmidtSectionCounts c;
  c.subgroups_of_kernel = num_subgroups_elem_abelian(p, r);
  c.k_prime = Rational(c.subgroups_of_kernel + 4 * BigInt(q) - 2, BigInt(q));
  c.lattice_size = c.subgroups_of_kernel + big_pow(p, static_cast<unsigned>(r)) + 1;
  c.d_prime = Rational(c.subgroups_of_kernel + 4 * BigInt(q) - 2, BigInt(q) * c.lattice_size);
  return c;
}

Rational d_prime_schmidt_section_formula(std::uint64_t p, std::uint64_t q, std::int64_t r) {
  return schmidt_section_counts(p, q, r).d_prime;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::modular: return "modular";
    case Family::schmidt: return "schmidt";
    case Family::dihedral: return "dihedral";
    case Family::heisenberg: return "heisenberg";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  if (name == "modular") return Family::modular;
  if (name == "schmidt") return Family::schmidt;
  if (name == "dihedral") return Family::dihedral;
  if (name == "heisenberg") return Family::heisenberg;
  throw InvalidParameter("unknown family '" + name + "'");
}

Rational family_value(Family f, std::uint64_t prime, std::int64_t parameter) {
  switch (f) {
    case Family::modular: return d_prime_modular_formula(prime, parameter);
    case Family::schmidt: return d_prime_schmidt_formula(prime, parameter);
    case Family::dihedral: return d_prime_dihedral_formula(parameter);
    case Family::heisenberg: return d_prime_heisenberg_formula(static_cast<std::uint64_t>(parameter));
  }
  throw InvalidParameter("unknown family");
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::strictly_increasing: return "strictly increasing";
    case Direction::strictly_decreasing: return "strictly decreasing";
    case Direction::not_monotone: return "not monotone";
  }
  return "?";
}

MonotonicityVerdict sequence_monotonicity(Family f, std::uint64_t prime, const std::vector<std::int64_t>& parameters) {
  MonotonicityVerdict v{f, Direction::not_monotone, parameters, {}, std::nullopt};
  for (auto n : parameters) v.values.push_back(family_value(f, prime, n));
  if (v.values.size() < 2) return v;
  const bool up = v.values[1] > v.values[0];
  const bool down = v.values[1] < v.values[0];
  if (!up && !down) {
    v.first_violation = parameters[1];
    return v;
  }
  for (std::size_t i = 2; i < v.values.size(); ++i) {
    const bool ok = up ? v.values[i] > v.values[i - 1] : v.values[i] < v.values[i - 1];
    if (!ok) {
      v.first_violation = parameters[i];
      return v;
    }
  }
  v.direction = up ? Direction::strictly_increasing : Direction::strictly_decreasing;
  return v;
}

Rational family_limit(Family f) {
  return (f == Family::modular || f == Family::schmidt) ? Rational(1) : Rational(0);
}

LimitTrend limit_trend(Family f, std::uint64_t prime, const std::vector<std::int64_t>& parameters, double epsilon) {
  LimitTrend t{f, family_limit(f), parameters, {}};
  std::vector<Rational> exact;
  for (auto n : parameters) {
    exact.push_back((family_value(f, prime, n) - t.limit).abs());
    t.distances.push_back(exact.back().to_double());
  }
  if (exact.empty()) return t;
  t.eventually_decreasing = true;
  for (std::size_t i = exact.size() / 2 + 1; i < exact.size(); ++i)
    if (!(exact[i] < exact[i - 1])) t.eventually_decreasing = false;
  t.within_epsilon = t.distances.back() < epsilon;
  return t;
}

std::vector<DensityStep> density_sequence(std::int64_t a, std::int64_t b, const Rational& epsilon,
                                          std::size_t prime_budget) {
  if (a < 1 || b <= a) throw InvalidParameter("density target needs 1 <= a < b");
  if (epsilon <= Rational(0)) throw InvalidParameter("epsilon must be positive");
  const auto factors = static_cast<std::size_t>(b - a);
  const Rational target(a, b);
  const auto primes = first_odd_primes(prime_budget);
  std::vector<DensityStep> steps;
  for (std::size_t n = 0; (n + 1) * factors <= prime_budget; ++n) {
    DensityStep step;
    step.index = n;
    step.value = Rational(1);
    for (std::size_t i = 1; i <= factors; ++i) {
      const std::uint64_t p = primes[n * factors + i - 1];
      const auto exponent = a + static_cast<std::int64_t>(i) + 1;
      step.primes.push_back(p);
      step.value *= d_prime_modular_formula(p, exponent);
      if (i > 1) step.spec += " x ";
      step.spec += "M(" + std::to_string(p) + "," + std::to_string(exponent) + ")";
    }
    step.gap = (step.value - target).abs();
    const bool done = step.gap < epsilon;
    steps.push_back(std::move(step));
    if (done) return steps;
  }
  throw BudgetExhausted("density target " + target.str() + " not reached within " + std::to_string(prime_budget) +
                        " odd primes");
}

RatioWitness ratio_witness(std::int64_t a) {
  if (a < 1) throw InvalidParameter("ratio witness needs a >= 1");
  if (a == 1) return {"G(5,2,2)", Rational(1, 2)};
  return {"G(3,2," + std::to_string(a) + ")", Rational(a, a + 1)};
}

}  // namespace dedekind
