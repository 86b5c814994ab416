#pragma once

#include "dedekind/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dedekind {

// Closed forms for d' = k'/|L| on the families with known subgroup structure.
Rational d_prime_modular_formula(std::uint64_t p, std::int64_t n);    // M_{p^n}
Rational d_prime_schmidt_formula(std::uint64_t p, std::int64_t n);    // G_{p,q,n}; independent of q
Rational d_prime_dihedral_formula(std::int64_t n);                    // D_{2^n}, n >= 3
Rational d_prime_heisenberg_formula(std::uint64_t p);                 // He_p, p odd

// Number of i-dimensional subspaces of F_p^r.
BigInt gaussian_binomial(std::int64_t r, std::int64_t i, std::uint64_t p);
// |L(C_p^r)|
BigInt num_subgroups_elem_abelian(std::uint64_t p, std::int64_t r);

// Counts for S = C_p^r : C_q with faithful action (r = ord_q(p)).
struct SchmidtSectionCounts {
  BigInt subgroups_of_kernel;  // a_{p,r}
  Rational k_prime;            // (a + 4q - 2) / q, an integer for valid input
  BigInt lattice_size;         // a + p^r + 1
  Rational d_prime;
};
SchmidtSectionCounts schmidt_section_counts(std::uint64_t p, std::uint64_t q, std::int64_t r);
Rational d_prime_schmidt_section_formula(std::uint64_t p, std::uint64_t q, std::int64_t r);

enum class Family { modular, schmidt, dihedral, heisenberg };
std::string to_string(Family f);
Family family_from_string(const std::string& name);

// Evaluates a family's closed form. `prime` is the fixed prime for modular and
// schmidt sequences; for heisenberg the parameter itself is the prime.
Rational family_value(Family f, std::uint64_t prime, std::int64_t parameter);

enum class Direction { strictly_increasing, strictly_decreasing, not_monotone };
std::string to_string(Direction d);

struct MonotonicityVerdict {
  Family family;
  Direction direction;
  std::vector<std::int64_t> parameters;
  std::vector<Rational> values;
  // Parameter at which the direction set by the first pair stops holding.
  std::optional<std::int64_t> first_violation;
};

MonotonicityVerdict sequence_monotonicity(Family f, std::uint64_t prime, const std::vector<std::int64_t>& parameters);

// Numerical trend check toward a known limit; not a proof of convergence.
struct LimitTrend {
  Family family;
  Rational limit;
  std::vector<std::int64_t> parameters;
  std::vector<double> distances;
  bool eventually_decreasing = false;  // distances strictly decrease over the second half
  bool within_epsilon = false;         // final distance below epsilon
  static constexpr const char* kNote = "numerical trend check";
};

Rational family_limit(Family f);
LimitTrend limit_trend(Family f, std::uint64_t prime, const std::vector<std::int64_t>& parameters, double epsilon);

// One term of a product of modular-group values converging to a/b.
struct DensityStep {
  std::size_t index = 0;
  std::vector<std::uint64_t> primes;  // prime used for factor i = 1..b-a
  Rational value;
  Rational gap;                       // |value - a/b|
  std::string spec;                   // the direct product realizing `value`
};

// Factor i uses M_{p^{a+i+1}} with p the (n(b-a)+i)-th odd prime at step n.
// Stops at the first step with gap < epsilon; BudgetExhausted if that needs
// more than prime_budget odd primes.
std::vector<DensityStep> density_sequence(std::int64_t a, std::int64_t b, const Rational& epsilon,
                                          std::size_t prime_budget);

// A group spec realizing d' = a/(a+1).
struct RatioWitness {
  std::string spec;
  Rational value;
};
RatioWitness ratio_witness(std::int64_t a);

}  // namespace dedekind
