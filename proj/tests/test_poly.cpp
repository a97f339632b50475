#include <doctest.h>

#include <cmath>

#include "rankloc/errors.hpp"
#include "rankloc/fixtures.hpp"
#include "oracles.hpp"

using namespace rankloc;

TEST_SUITE("poly") {

TEST_CASE("ring ops") {
  SmallField F3(3);
  UniPoly a = UniPoly::from_ints(F3, {2, 0, 1});  // T^2+2
  UniPoly b = UniPoly::from_ints(F3, {1, 0, 1});  // T^2+1
  CHECK(mul(F3, a, b) == UniPoly::from_ints(F3, {2, 0, 0, 0, 1}));  // T^4+2 (3T^2 = 0)
  CHECK(gcd(F3, a, UniPoly::zero()) == make_monic(F3, a));
  CHECK(gcd(F3, scale(F3, Fq{2}, a), UniPoly::zero()) == a);  // gcd output monic
  CHECK_THROWS_AS(divmod(F3, a, UniPoly::zero()), std::domain_error);
}

TEST_CASE("euclidean division and gcd properties") {
  std::mt19937_64 rng(21);
  SmallField F5(5);
  for (int it = 0; it < 300; ++it) {
    UniPoly a = oracle::random_poly(F5, 8, rng);
    UniPoly b = oracle::random_poly(F5, 5, rng);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(F5, a, b);
    CHECK(add(F5, mul(F5, q, b), r) == a);
    CHECK(r.degree() < b.degree());
    UniPoly g = gcd(F5, a, b);
    if (!g.is_zero()) {
      CHECK(is_monic(F5, g));
      CHECK(divides(F5, g, a));
      CHECK(divides(F5, g, b));
    }
    XgcdResult x = xgcd(F5, a, b);
    CHECK(x.g == g);
    CHECK(add(F5, mul(F5, x.s, a), mul(F5, x.t, b)) == x.g);
  }
}

TEST_CASE("irreducibility examples") {
  SmallField F3(3);
  CHECK(is_irreducible(F3, UniPoly::from_ints(F3, {1, 0, 1})));       // T^2+1
  CHECK_FALSE(is_irreducible(F3, UniPoly::from_ints(F3, {0, 0, 1})));  // T^2
  CHECK_THROWS_AS(is_irreducible(F3, UniPoly::one()), std::invalid_argument);
  SmallField F5(5);
  UniPoly P = UniPoly::from_ints(F5, {2, 4, 0, 4, 1, 0, 1, 4, 0, 4, 1});
  CHECK(is_irreducible(F5, P));
}

TEST_CASE("irreducibility agrees with trial division") {
  std::mt19937_64 rng(22);
  for (uint32_t q : {2u, 3u, 5u}) {
    SmallField F(q);
    for (int it = 0; it < 150; ++it) {
      UniPoly f = oracle::random_monic_poly(F, 1 + rng() % 6, rng);
      CHECK(is_irreducible(F, f) == oracle::irreducible_by_trial_division(F, f));
    }
  }
}

TEST_CASE("count_irreducibles") {
  CHECK(count_irreducibles(3, 1) == 3);
  CHECK(count_irreducibles(3, 2) == 3);
  CHECK(count_irreducibles(5, 3) == 40);
  for (uint32_t q : {2u, 3u}) {
    SmallField F(q);
    for (uint32_t m = 1; m <= 4; ++m)
      CHECK(count_irreducibles(q, m) == oracle::count_irreducibles_by_enumeration(F, m));
  }
  // |#S_m - q^m/m| <= 2 q^{m/2}/m across the small grid
  for (uint32_t q : {2u, 3u, 5u})
    for (uint32_t m = 1; m <= 12; ++m) {
      double count = double(count_irreducibles(q, m));
      double qm = std::pow(double(q), m);
      CHECK(std::abs(count - qm / m) <= 2.0 * std::pow(double(q), m / 2.0) / m + 1e-9);
    }
}

TEST_CASE("totient") {
  SmallField F3(3);
  CHECK(totient(F3, UniPoly::x()) == 2);
  CHECK(totient(F3, UniPoly::from_ints(F3, {1, 0, 1})) == 8);
  CHECK(totient(F3, UniPoly::from_ints(F3, {0, 0, 1})) == 6);
  CHECK_THROWS_AS(totient(F3, UniPoly::one()), std::invalid_argument);

  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 40) {
    UniPoly h1 = oracle::random_monic_poly(F3, 1 + rng() % 2, rng);
    UniPoly h2 = oracle::random_monic_poly(F3, 1 + rng() % 2, rng);
    if (!gcd(F3, h1, h2).is_one()) continue;
    UniPoly h = mul(F3, h1, h2);
    CHECK(totient(F3, h) == totient(F3, h1) * totient(F3, h2));
    CHECK(totient(F3, h) == oracle::totient_by_enumeration(F3, h));
    ++done;
  }
}

TEST_CASE("divisor_count") {
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(2) == 2);
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(17) == 2);
  CHECK(divisor_count(36) == 9);
}

TEST_CASE("valuation") {
  SmallField F3(3);
  UniPoly T = UniPoly::x();
  CHECK(valuation(F3, {UniPoly::zero(), UniPoly::one()}, T).is_infinite());
  RationalFunction inv_t = RationalFunction::make(F3, UniPoly::one(), T);
  CHECK(valuation(F3, inv_t, T) == -1);
  SmallField F7(7);
  RationalFunction t2_times_5 = RationalFunction::from_poly(UniPoly::from_ints(F7, {0, 0, 5}));
  CHECK(valuation(F7, t2_times_5, UniPoly::x()) == 2);
  // reducible P rejected
  CHECK_THROWS_AS(valuation(F3, inv_t, UniPoly::from_ints(F3, {0, 0, 1})), std::invalid_argument);

  // additivity on random inputs
  std::mt19937_64 rng(24);
  for (int it = 0; it < 100; ++it) {
    UniPoly n1 = oracle::random_poly(F3, 4, rng), d1 = oracle::random_monic_poly(F3, 2, rng);
    UniPoly n2 = oracle::random_poly(F3, 4, rng), d2 = oracle::random_monic_poly(F3, 2, rng);
    if (n1.is_zero() || n2.is_zero()) continue;
    RationalFunction g1 = RationalFunction::make(F3, n1, d1);
    RationalFunction g2 = RationalFunction::make(F3, n2, d2);
    RationalFunction prod = RationalFunction::make(F3, mul(F3, g1.num, g2.num), mul(F3, g1.den, g2.den));
    Valuation v1 = valuation(F3, g1, T), v2 = valuation(F3, g2, T), vp = valuation(F3, prod, T);
    CHECK(vp == v1.value() + v2.value());
  }
}

TEST_CASE("h does not vanish at z when gcd(h, P) = 1") {
  CodeInstance code = fixtures::build_example41_code();
  const SmallField& F = code.field();
  CHECK(gcd(F, code.h(), code.P()).is_one());
  CHECK_FALSE(code.tower().eval_poly(code.h(), code.tower().z()).is_zero());
}

TEST_CASE("rational function canonicalization") {
  SmallField F3(3);
  // (2T^2+2T) / (2T) -> (T+1) / 1
  RationalFunction g = RationalFunction::make(F3, UniPoly::from_ints(F3, {0, 2, 2}),
                                              UniPoly::from_ints(F3, {0, 2}));
  CHECK(g.num == UniPoly::from_ints(F3, {1, 1}));
  CHECK(g.den == UniPoly::one());
  CHECK_THROWS_AS(RationalFunction::make(F3, UniPoly::one(), UniPoly::zero()), std::domain_error);
}

}  // TEST_SUITE
