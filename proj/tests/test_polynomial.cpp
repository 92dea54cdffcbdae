#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chromafun/polynomial.hpp"
#include "support/oracles.hpp"

using namespace chromafun;

namespace {

IntPolynomial t_times_t_minus_1_pow(int exponent) {
  IntPolynomial p = IntPolynomial::from_coefficients({0, 1});  // t
  IntPolynomial factor = IntPolynomial::from_coefficients({-1, 1});
  for (int i = 0; i < exponent; ++i) p = p * factor;
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic and normalization") {
  IntPolynomial zero = IntPolynomial::zero();
  REQUIRE(zero.is_zero());
  IntPolynomial p = IntPolynomial::from_coefficients({1, 2, 0, 0});
  REQUIRE(p.degree() == 1);
  IntPolynomial q = IntPolynomial::from_coefficients({-1, -2});
  REQUIRE((p + q).is_zero());
  REQUIRE(p * zero == zero);
  REQUIRE(p.coefficient(5) == 0);
}

TEST_CASE("Horner evaluation is exact") {
  IntPolynomial path4 = t_times_t_minus_1_pow(3);  // chi(P_4, t)
  REQUIRE(path4.evaluate(2) == 2);
  IntPolynomial k3 = IntPolynomial::falling_factorial(3);
  REQUIRE(k3.evaluate(3) == 6);
  REQUIRE(IntPolynomial::monomial(3).evaluate(5) == 125);
  REQUIRE(k3.evaluate(-2) == -24);  // (-2)(-3)(-4)
  // Far beyond 64 bits.
  IntPolynomial big = IntPolynomial::monomial(40);
  REQUIRE(big.evaluate(10) == BigInt("1" + std::string(40, '0')));
}

TEST_CASE("falling factorial polynomials") {
  REQUIRE(IntPolynomial::falling_factorial(0) == IntPolynomial::constant(1));
  REQUIRE(IntPolynomial::falling_factorial(1) == IntPolynomial::from_coefficients({0, 1}));
  REQUIRE(IntPolynomial::falling_factorial(3) ==
          IntPolynomial::from_coefficients({0, 2, -3, 1}));
}

TEST_CASE("falling-factorial expansion of known chromatic polynomials") {
  SECTION("K_3: a single stable partition") {
    StVector st = to_falling_factorial(IntPolynomial::falling_factorial(3));
    REQUIRE(st.at(3) == 1);
    REQUIRE(st.counts.size() == 1);
  }
  SECTION("t^3: Stirling numbers of the second kind") {
    StVector st = to_falling_factorial(IntPolynomial::monomial(3));
    REQUIRE(st.at(1) == oracle::stirling_second(3, 1));
    REQUIRE(st.at(2) == oracle::stirling_second(3, 2));
    REQUIRE(st.at(3) == oracle::stirling_second(3, 3));
    REQUIRE(st.at(1) == 1);
    REQUIRE(st.at(2) == 3);
    REQUIRE(st.at(3) == 1);
  }
  SECTION("chi(P_3) = t(t-1)^2 decomposes as {2:1, 3:1}") {
    StVector st = to_falling_factorial(t_times_t_minus_1_pow(2));
    REQUIRE(st.at(2) == 1);
    REQUIRE(st.at(3) == 1);
    REQUIRE(st.counts.size() == 2);
  }
}

TEST_CASE("non-chromatic polynomials are rejected") {
  // t^2 - t = t(t-1) is fine; t^2 - 2t has a negative expansion coefficient.
  REQUIRE_NOTHROW(to_falling_factorial(IntPolynomial::from_coefficients({0, -1, 1})));
  REQUIRE_THROWS_AS(to_falling_factorial(IntPolynomial::from_coefficients({0, -2, 1})),
                    precondition_error);
  // Nonzero constant term.
  REQUIRE_THROWS_AS(to_falling_factorial(IntPolynomial::from_coefficients({1, 0, 1})),
                    precondition_error);
  REQUIRE_THROWS_AS(to_falling_factorial(IntPolynomial::zero()), precondition_error);
}

TEST_CASE("falling-factorial round trip on random StVectors") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> count_dist(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    StVector st;
    for (int k = 1; k <= 7; ++k) {
      int c = count_dist(rng);
      if (c > 0) st.set(k, c);
    }
    if (st.counts.empty()) continue;
    REQUIRE(to_falling_factorial(from_falling_factorial(st)) == st);
  }
}
