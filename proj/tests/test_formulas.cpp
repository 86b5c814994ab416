#include "dedekind/error.hpp"
#include "dedekind/families.hpp"
#include "dedekind/formulas.hpp"
#include "dedekind/invariants.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/numtheory.hpp"

#include "naive.hpp"

#include <doctest.h>

using namespace dedekind;

namespace {
Rational frac(long a, long b) { return Rational(BigInt(a), BigInt(b)); }
}  // namespace

TEST_CASE("modular-group closed form") {
  CHECK(d_prime_modular_formula(2, 5) == frac(13, 14));
  CHECK(d_prime_modular_formula(3, 3) == frac(4, 5));
  for (long p : {2, 3, 5, 7, 11}) CHECK(d_prime_modular_formula(p, 4) == frac(2 * p + 6, 3 * p + 5));
  for (auto [p, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4}, {5, 3}})
    CHECK(d_prime_modular_formula(p, n) == d_prime(all_subgroups(modular_group(p, n))));
  CHECK_THROWS_AS(d_prime_modular_formula(2, 3), InvalidParameter);
  CHECK_THROWS_AS(d_prime_modular_formula(4, 5), InvalidParameter);
}

TEST_CASE("dihedral, Heisenberg and Schmidt closed forms") {
  CHECK(d_prime_dihedral_formula(3) == frac(4, 5));
  CHECK(d_prime_heisenberg_formula(3) == frac(11, 19));
  CHECK(d_prime_schmidt_formula(3, 2) == frac(2, 3));
  for (unsigned n = 3; n <= 7; ++n) {
    const auto lat = all_subgroups(dihedral(ipow(2, n)));
    CHECK(lat.k_prime() == 3 * n - 1);
    CHECK(lat.size() == ipow(2, n) + n - 1);
    CHECK(d_prime_dihedral_formula(n) == d_prime(lat));
  }
  for (unsigned p : {3, 5}) CHECK(d_prime_heisenberg_formula(p) == naive::d_prime(heisenberg(p)));
  // G(p,q,n) is independent of q.
  CHECK(d_prime_schmidt_formula(7, 3) == d_prime(all_subgroups(schmidt_gpqn(7, 2, 3))));
  CHECK(d_prime_schmidt_formula(7, 3) == d_prime(all_subgroups(schmidt_gpqn(7, 3, 3))));
  CHECK(d_prime_schmidt_formula(13, 2) == naive::d_prime(schmidt_gpqn(13, 3, 2)));
  CHECK_THROWS_AS(d_prime_dihedral_formula(2), InvalidParameter);
  CHECK_THROWS_AS(d_prime_heisenberg_formula(2), InvalidParameter);
}

TEST_CASE("Gaussian binomials count subgroups of C_p^r") {
  CHECK(gaussian_binomial(5, 0, 3) == 1);
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(num_subgroups_elem_abelian(7, 1) == 2);
  CHECK(num_subgroups_elem_abelian(2, 2) == 5);
  CHECK(num_subgroups_elem_abelian(3, 2) == 6);
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
    const auto g = elementary_abelian(p, r);
    const auto subs = naive::subgroups_by_growth(g);
    CHECK(num_subgroups_elem_abelian(p, r) == subs.size());
    for (unsigned i = 0; i <= r; ++i) {
      std::size_t count = 0;
      for (const auto& s : subs) count += s.size() == ipow(p, i);
      CHECK(gaussian_binomial(r, i, p) == count);
    }
  }
  CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), InvalidParameter);
}

TEST_CASE("Schmidt-section formula components") {
  CHECK(d_prime_schmidt_section_formula(2, 3, 2) == frac(1, 2));
  CHECK(d_prime_schmidt_section_formula(3, 2, 1) == frac(2, 3));
  CHECK_THROWS_AS(d_prime_schmidt_section_formula(2, 3, 3), InvalidParameter);
  for (auto [p, q] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {2, 7}, {5, 2}, {7, 2}, {2, 5}}) {
    CAPTURE(p);
    CAPTURE(q);
    const auto params = SchmidtSectionParams::make(p, q);
    const auto counts = schmidt_section_counts(p, q, params.r);
    const auto lat = all_subgroups(elementary_rtimes_cq(p, q));
    CHECK(counts.k_prime == Rational(BigInt(lat.k_prime())));
    CHECK(counts.lattice_size == lat.size());
    CHECK(counts.d_prime == d_prime(lat));
  }
}

TEST_CASE("monotonicity verdicts") {
  auto range = [](std::int64_t a, std::int64_t b) {
    std::vector<std::int64_t> v;
    for (auto i = a; i <= b; ++i) v.push_back(i);
    return v;
  };
  CHECK(sequence_monotonicity(Family::modular, 3, range(3, 12)).direction == Direction::strictly_increasing);
  CHECK(sequence_monotonicity(Family::dihedral, 0, range(3, 20)).direction == Direction::strictly_decreasing);
  CHECK(sequence_monotonicity(Family::schmidt, 7, range(2, 30)).direction == Direction::strictly_increasing);
  std::vector<std::int64_t> primes;
  for (auto p : first_odd_primes(20)) primes.push_back(static_cast<std::int64_t>(p));
  const auto he = sequence_monotonicity(Family::heisenberg, 0, primes);
  CHECK(he.direction == Direction::strictly_decreasing);
  CHECK_FALSE(he.first_violation.has_value());
  CHECK(he.values.size() == 20);
}

TEST_CASE("limit trends") {
  CHECK(family_value(Family::modular, 3, 10000) > frac(999, 1000));
  CHECK(family_value(Family::dihedral, 0, 30) < frac(1, 10000000));
  std::vector<std::int64_t> ns;
  for (std::int64_t n = 4; n <= 60; ++n) ns.push_back(n);
  const auto t = limit_trend(Family::schmidt, 3, ns, 0.05);
  CHECK(t.limit == Rational(1));
  CHECK(t.eventually_decreasing);
  CHECK(t.within_epsilon);
  CHECK(std::string(LimitTrend::kNote) == "numerical trend check");
  CHECK(family_limit(Family::dihedral) == Rational(0));
}

TEST_CASE("density sequence") {
  const auto steps = density_sequence(2, 3, frac(1, 100), 500);
  REQUIRE_FALSE(steps.empty());
  CHECK(steps.back().gap < frac(1, 100));
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) CHECK_FALSE(steps[i].gap < frac(1, 100));
  // b - a = 1: each value is a single modular-group factor.
  for (const auto& s : steps) {
    REQUIRE(s.primes.size() == 1);
    CHECK(s.value == d_prime_modular_formula(s.primes[0], 4));
    CHECK(s.gap == (s.value - frac(2, 3)).abs());
  }

  const auto loose = density_sequence(1, 2, frac(1, 2), 500);
  CHECK(loose.size() == 1);

  const auto three = density_sequence(3, 7, frac(1, 100), 500);
  for (const auto& s : three) {
    REQUIRE(s.primes.size() == 4);
    Rational v(1);
    for (std::size_t i = 0; i < 4; ++i) v *= d_prime_modular_formula(s.primes[i], 3 + static_cast<std::int64_t>(i) + 2);
    CHECK(v == s.value);
  }
  // Round-robin primes: step n factor i uses the (n(b-a)+i)-th odd prime.
  const auto primes = first_odd_primes(8);
  CHECK(three[1].primes == std::vector<std::uint64_t>{primes[4], primes[5], primes[6], primes[7]});

  CHECK_THROWS_AS(density_sequence(2, 3, frac(1, 100000), 10), BudgetExhausted);
  CHECK_THROWS_AS(density_sequence(3, 3, frac(1, 100), 10), InvalidParameter);
  CHECK_THROWS_AS(density_sequence(1, 2, Rational(0), 10), InvalidParameter);
}

TEST_CASE("ratio witnesses") {
  const auto one = ratio_witness(1);
  CHECK(one.value == frac(1, 2));
  CHECK(d_prime(all_subgroups(schmidt_gpqn(5, 2, 2))) == frac(1, 2));
  CHECK(ratio_witness(3).value == frac(3, 4));
  const auto five = ratio_witness(5);
  CHECK(five.value == frac(5, 6));
  CHECK(d_prime(all_subgroups(schmidt_gpqn(3, 2, 5))) == frac(5, 6));
}
