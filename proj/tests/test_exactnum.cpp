#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ncpath/fibonacci.hpp"
#include "ncpath/rational.hpp"
#include "ncpath/weights.hpp"

using namespace ncpath;

TEST_CASE("rationals are stored canonical") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(10, 5).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational string round trip") {
  CHECK(Rational::from_string("5/2") == Rational(5, 2));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK(Rational::from_string("123456789012345678901234567890").is_integer());
  CHECK_THROWS(Rational::from_string("x"));
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 50);
  for (int i = 0; i < 500; ++i) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("fibonacci base cases and recurrence") {
  CHECK(fib(-1) == 1);
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(10) == 55);
  for (long m = 1; m <= 300; ++m) CHECK(fib(m) == fib(m - 1) + fib(m - 2));
  CHECK_THROWS_AS(fib(-2), std::domain_error);
}

TEST_CASE("named weight sequences") {
  CHECK(weight_b(0) == Rational(1));
  CHECK(weight_b(1) == Rational(2));
  CHECK(weight_b(2) == Rational(5, 2));
  CHECK(weight_lambda(0) == Rational(1));
  CHECK(weight_lambda(1) == Rational(2));
  CHECK(weight_lambda(2) == Rational(5, 4));

  const Rational expected[] = {Rational(1),     Rational(1),     Rational(1),
                               Rational(2),     Rational(1, 2),  Rational(5, 2),
                               Rational(2, 5),  Rational(13, 5), Rational(5, 13),
                               Rational(34, 13)};
  for (std::size_t m = 0; m < 10; ++m) CHECK(weight_d(m) == expected[m]);
  CHECK(weight_d(17) == Rational(1597, 610));
}

TEST_CASE("d-sequence identities hold exactly to depth 50") {
  DyckWeights d = d_weights();
  for (std::size_t n = 0; n <= 50; ++n) {
    long ln = static_cast<long>(n);
    CHECK(weight_b(n) == d.at(2 * ln - 1) + d.at(2 * ln));
    CHECK(weight_lambda(n) == weight_d(2 * n) * weight_d(2 * n + 1));
    if (n >= 1)
      CHECK(weight_d(2 * n - 1).reciprocal() + weight_d(2 * n + 1) == Rational(3));
  }
}

TEST_CASE("Fibonacci Catalan identity") {
  CHECK(catalan_fib_identity(5, 2));
  CHECK(catalan_fib_identity(3, 0));
  CHECK(catalan_fib_identity(2, 3));  // m - i = -1
  for (long m = 0; m <= 40; ++m)
    for (long i = 0; i <= m + 1; ++i) CHECK(catalan_fib_identity(m, i));
  CHECK_THROWS_AS(catalan_fib_identity(0, 5), std::domain_error);   // m - i < -1
  CHECK_THROWS_AS(catalan_fib_identity(3, -1), std::domain_error);  // i < 0
}

TEST_CASE("alpha-beta equals the d-composition") {
  MotzkinWeights ab = alpha_beta_weights();
  for (std::size_t n = 0; n <= 30; ++n) {
    CHECK(ab.level(n) == weight_d(2 * n) + weight_d(2 * n + 1));
    CHECK(ab.down(n) == weight_d(2 * n + 1) * weight_d(2 * n + 2));
  }
}

TEST_CASE("list-backed sequences") {
  RationalSeq tail = list_seq({Rational(1), Rational(2), Rational(3)}, true);
  CHECK(tail(0) == Rational(1));
  CHECK(tail(9) == Rational(3));
  RationalSeq strict = list_seq({Rational(1)}, false);
  CHECK(strict(0) == Rational(1));
  CHECK_THROWS_AS(strict(1), std::out_of_range);
  CHECK_THROWS_AS(list_seq({}, true), std::invalid_argument);
}
