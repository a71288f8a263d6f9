#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pentaflag/symbolic.hpp"

using namespace pentaflag::symbolic;

namespace {

const Poly k = Poly::indeterminate();

Poly den_poly() { return 5 * pow(k, 7) - 35 * pow(k, 6) + 75 * pow(k, 5) - 48 * pow(k, 4); }

Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 4), c(-9, 9);
  std::vector<Rational> cs;
  for (int i = 0, d = deg(rng); i <= d; ++i) cs.emplace_back(c(rng), 1 + (rng() % 3));
  return Poly(cs);
}

}  // namespace

TEST_CASE("polynomial ring operations") {
  CHECK((k - 1) * (k + 1) == pow(k, 2) - 1);
  CHECK(den_poly()(4) == 3072);  // 4^4 * (320 - 560 + 300 - 48)
  CHECK(den_poly().to_string() == "5*k^7 - 35*k^6 + 75*k^5 - 48*k^4");
  CHECK(Poly().degree() == -1);
  CHECK((k * k).compose(k + 1) == pow(k, 2) + 2 * k + 1);
  const auto dm = divmod(pow(k, 3) + 1, k + 1);
  CHECK(dm.quotient == pow(k, 2) - k + 1);
  CHECK(dm.remainder.is_zero());
  CHECK_THROWS_AS(divmod(k, Poly()), std::domain_error);
  CHECK(gcd(pow(k, 2) - 1, 2 * k - 2) == k - 1);
}

TEST_CASE("distributivity on random polynomials") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("rational function normalisation") {
  const RationalFunction r(2 * pow(k, 2) - 2, 2 * k - 2);
  CHECK(r == RationalFunction(k + 1));
  CHECK(r.is_polynomial());
  CHECK(RationalFunction(k, -2 * k - 4) == RationalFunction(Rational(-1, 2) * k, k + 2));
  CHECK_THROWS_AS(RationalFunction(k, Poly()), std::domain_error);
  CHECK_THROWS_AS(RationalFunction(1, k - 3)(3), std::domain_error);
}

TEST_CASE("rational function equality agrees with evaluation") {
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) {
    const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    if (b.is_zero() || c.is_zero()) continue;
    const RationalFunction lhs = RationalFunction(a, b) + RationalFunction(a, c);
    const RationalFunction rhs = RationalFunction(a * (b + c), b * c);
    CHECK(lhs == rhs);
    for (int t = 0; t < 20; ++t) {
      Rational x(static_cast<long>(rng() % 101) - 50, 1 + static_cast<long>(rng() % 7));
      x.canonicalize();
      if (b(x) == 0 || c(x) == 0) continue;
      CHECK(lhs(x) == a(x) / b(x) + a(x) / c(x));
    }
  }
}

TEST_CASE("parser") {
  CHECK(parse_rational_function("5*k^7 - 35*k^6 + 75*k^5 - 48*k^4") == RationalFunction(den_poly()));
  CHECK(parse_rational_function("(k^2-1)/(k-1)") == RationalFunction(k + 1));
  CHECK(parse_rational_function("-(3/4)*k") == RationalFunction(Rational(-3, 4) * k));
  CHECK(parse_rational_function("2^3") == RationalFunction(8));
  CHECK(parse_rational_function("k^-1") == RationalFunction(1, k));
  CHECK_THROWS_AS(parse_rational_function("k +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational_function("(k"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational_function("x"), std::invalid_argument);
}

TEST_CASE("cauchy bound") {
  CHECK(cauchy_bound(Poly(7)) == 0);
  CHECK(cauchy_bound(den_poly()) == 16);
}

TEST_CASE("nonnegativity prover") {
  const auto den = RationalFunction(den_poly());
  CHECK(prove_nonneg_int(den, 4).verdict == NonnegVerdict::holds);
  CHECK(prove_nonneg_int(-den, 4).verdict == NonnegVerdict::fails_at);
  CHECK(*prove_nonneg_int(-den, 4).witness_k == 4);
  CHECK(prove_nonneg_int(RationalFunction(pow(k - 1, 2)), 0).verdict == NonnegVerdict::holds);
  const auto z = parse_rational_function("6*(5*k^3 - 20*k^2 + 30*k - 16)/(5*k^3 - 35*k^2 + 75*k - 48)");
  CHECK(prove_nonneg_int(z, 4).verdict == NonnegVerdict::holds);
  // Negative only far out: k^2 - 2000 k + 1 dips below zero at k = 1.
  CHECK(prove_nonneg_int(RationalFunction(pow(k, 2) - 2000 * k + 1), 1).verdict == NonnegVerdict::fails_at);
  // Positive on the sweep but negative beyond it.
  const auto late = prove_nonneg_int(RationalFunction(-(k - 5000) * (k - 5001) * (-1)), 4000, 100);
  CHECK(late.verdict != NonnegVerdict::holds);
  const auto tail = prove_nonneg_int(RationalFunction(pow(k, 2) - 3000 * k + 10), 5000, 5001);
  CHECK(tail.verdict == NonnegVerdict::holds);
  const auto needs_more = prove_nonneg_int(RationalFunction(k - 1500), 1500, 1000);
  CHECK(needs_more.verdict == NonnegVerdict::inconclusive);
  CHECK(prove_nonneg_int(RationalFunction(1, k - 10), 4).verdict == NonnegVerdict::pole_in_range);
  CHECK(prove_nonneg_int(RationalFunction(0), 4).verdict == NonnegVerdict::holds);
}

TEST_CASE("eps polynomials") {
  const EpsPoly e = EpsPoly::eps();
  const auto sq = pow(EpsPoly(1) + e, 2).collect();
  REQUIRE(sq.size() == 3);
  CHECK(sq[0] == RationalFunction(1));
  CHECK(sq[1] == RationalFunction(2));
  CHECK(sq[2] == RationalFunction(1));
  CHECK((e - e).degree() == -1);
}
