#include "doctest.h"

#include "qlink/laurent.hpp"

#include <random>

using namespace qlink;

namespace {

Laurent x_pow(int e) { return Laurent::monomial(GaussInt(1), e); }

Laurent random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-8, 8), coeff(-5, 5);
  Laurent p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    p += Laurent::monomial(GaussInt(BigInt(coeff(rng)), BigInt(coeff(rng))), expo(rng));
  return p;
}

}  // namespace

TEST_CASE("add cancels and respects identity") {
  Laurent p = x_pow(2) + Laurent::one();
  CHECK(p + Laurent::monomial(GaussInt(-1), 0) == x_pow(2));
  CHECK(p + Laurent::zero() == p);
  CHECK(x_pow(1) + x_pow(1) == Laurent::monomial(GaussInt(2), 1));
  CHECK((p - p).is_zero());
}

TEST_CASE("mul convolution and i^2 = -1") {
  Laurent a = x_pow(1) - x_pow(-1);
  Laurent b = x_pow(1) + x_pow(-1);
  CHECK(a * b == x_pow(2) - x_pow(-2));

  Laurent ix_inv = Laurent::monomial(GaussInt(BigInt(0), BigInt(1)), -1);
  CHECK(ix_inv * ix_inv == Laurent::monomial(GaussInt(-1), -2));

  Laurent p = random_poly(*new std::mt19937(7));
  CHECK(p * Laurent::one() == p);
}

TEST_CASE("exact_div examples") {
  // (x^4 - x^-4) / (x^2 - x^-2) = x^2 + x^-2
  CHECK(exact_div(x_pow(4) - x_pow(-4), x_pow(2) - x_pow(-2)) == x_pow(2) + x_pow(-2));
  Laurent p = x_pow(3) + Laurent::monomial(GaussInt(5), 0);
  CHECK(exact_div(p, Laurent::one()) == p);
  // (x^2 + 1) / (x - 1) leaves remainder 2
  CHECK_THROWS_AS(exact_div(x_pow(2) + Laurent::one(), x_pow(1) - Laurent::one()),
                  DivisionNotExact);
  CHECK_THROWS_AS(exact_div(p, Laurent::zero()), DivideByZero);
}

TEST_CASE("eval_numeric") {
  Laurent p = x_pow(2) + Laurent::one() + x_pow(-2);
  CHECK(p.eval({1.0, 0.0}).real() == doctest::Approx(3.0));
  CHECK(x_pow(1).eval({2.0, 0.0}).real() == doctest::Approx(2.0));
  CHECK(std::abs((x_pow(1) - x_pow(-1)).eval({1.0, 0.0})) == doctest::Approx(0.0));
  CHECK_THROWS_AS(p.eval({0.0, 0.0}), DivideByZero);
}

TEST_CASE("render and parse round trips") {
  CHECK((x_pow(2) - x_pow(-2)).render() == "q^{1/2} - q^{-1/2}");
  CHECK(Laurent::parse("1") == Laurent::one());
  CHECK(Laurent::parse("i*q^{-1/4}") ==
        Laurent::monomial(GaussInt(BigInt(0), BigInt(1)), -1));
  CHECK(Laurent::parse("q") == x_pow(4));
  CHECK(Laurent::parse("-2*q^{3/4} + (1+2i)*q^{-1}") ==
        Laurent::monomial(GaussInt(-2), 3) +
            Laurent::monomial(GaussInt(BigInt(1), BigInt(2)), -4));
  CHECK(Laurent::parse("0").is_zero());
  CHECK_THROWS_AS(Laurent::parse("q^{1/3}"), ParseError);
  CHECK_THROWS_AS(Laurent::parse("3 +"), ParseError);

  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    Laurent p = random_poly(rng);
    CHECK(Laurent::parse(p.render()) == p);
    CHECK(Laurent::from_json(p.to_json()) == p);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(42);
  for (int i = 0; i < 1000; ++i) {
    Laurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a + (-a)).terms().empty());
  }
}

TEST_CASE("exact_div inverts mul") {
  std::mt19937 rng(99);
  for (int i = 0; i < 300; ++i) {
    Laurent a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("unit monomial inverses") {
  Laurent alpha = Laurent::monomial(GaussInt(-1), 5);
  CHECK(alpha * alpha.inverse() == Laurent::one());
  CHECK(alpha.pow(-2) * alpha.pow(2) == Laurent::one());
  CHECK_THROWS_AS((x_pow(1) + Laurent::one()).inverse(), DivisionNotExact);
}
