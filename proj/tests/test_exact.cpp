#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "f4verma/linform.hpp"

#include <random>

using namespace f4verma;

namespace {

std::mt19937 rng(20240814);

Rational random_rational() {
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 12);
  return Rational(num(rng), den(rng));
}

LinForm random_form() {
  std::array<Rational, 4> c;
  for (auto& x : c)
    x = random_rational();
  return LinForm(c, random_rational());
}

} // namespace

TEST_CASE("rational normal form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational(6, -4).numerator() == -3);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational never overflows") {
  Rational big(1);
  for (int i = 1; i <= 64; ++i)
    big *= Rational(1000000007);
  Rational inv = Rational(1) / big;
  CHECK(big * inv == Rational(1));
  CHECK(big.numerator() > BigInt(0));
  CHECK((big * inv).is_integer());
}

TEST_CASE("rational field axioms, spot-checked") {
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a = random_rational(), b = random_rational(), c = random_rational();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero())
      CHECK(a * (Rational(1) / a) == Rational(1));
  }
}

TEST_CASE("rational text round-trip") {
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = random_rational();
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("linform arithmetic") {
  const LinForm m1 = LinForm::basis(1), m2 = LinForm::basis(2), m3 = LinForm::basis(3),
                m4 = LinForm::basis(4);
  CHECK((m1 + m2) + (m3 + m4 * Rational(1, 2)) ==
        LinForm({1, 1, 1, Rational(1, 2)}, Rational(0)));
  const LinForm f = m1 * Rational(2) + m2 * Rational(2) + m3 * Rational(2) + m4;
  CHECK(f.eval({1, 1, 1, 1}) == Rational(7));
  CHECK(-(-f) == f);
  CHECK(f - f == LinForm());
  CHECK(LinForm().is_zero());
}

TEST_CASE("sign classes") {
  const LinForm m1 = LinForm::basis(1), m2 = LinForm::basis(2), m3 = LinForm::basis(3),
                m4 = LinForm::basis(4);
  CHECK((m2 + m3).sign_class() == SignClass::GenericPositive);
  CHECK((-(m1 + m2 + m3 + m4 * Rational(1, 2))).sign_class() == SignClass::GenericNegative);
  CHECK((m1 - m2).sign_class() == SignClass::Mixed);
  CHECK(LinForm().sign_class() == SignClass::Zero);
  CHECK_THROWS_AS(LinForm(Rational(3)).sign_class(), std::invalid_argument);
}

TEST_CASE("basis index") {
  CHECK(LinForm::basis(3).basis_index() == 3);
  CHECK(!(LinForm::basis(3) * Rational(2)).basis_index());
  CHECK(!(LinForm::basis(1) + LinForm::basis(2)).basis_index());
  CHECK(!LinForm(Rational(1)).basis_index());
}

TEST_CASE("linform rendering") {
  const LinForm m1 = LinForm::basis(1), m2 = LinForm::basis(2), m4 = LinForm::basis(4);
  CHECK((m1 + m2 + m4 * Rational(1, 2)).str() == "m1+m2+1/2*m4");
  CHECK((-(m1 + m2)).str() == "-m1-m2");
  CHECK((m2 * Rational(2) + LinForm(Rational(-7, 2))).str() == "2*m2-7/2");
  CHECK(LinForm().str() == "0");
  CHECK(LinForm(Rational(7, 2)).str() == "7/2");
}

TEST_CASE("linform parse round-trip") {
  CHECK(LinForm::parse("m1+m2+1/2*m4") ==
        LinForm::basis(1) + LinForm::basis(2) + LinForm::basis(4) * Rational(1, 2));
  CHECK(LinForm::parse("0") == LinForm());
  CHECK(LinForm::parse("-m3+2") == LinForm(Rational(2)) - LinForm::basis(3));
  CHECK_THROWS_AS(LinForm::parse("m5"), std::invalid_argument);
  CHECK_THROWS_AS(LinForm::parse("m1+"), std::invalid_argument);
  CHECK_THROWS_AS(LinForm::parse("+m1"), std::invalid_argument);
  CHECK_THROWS_AS(LinForm::parse("1,2"), std::invalid_argument);
  for (int trial = 0; trial < 300; ++trial) {
    const LinForm f = random_form();
    CHECK(LinForm::parse(f.str()) == f);
  }
}

TEST_CASE("linform ordering is coefficient-wise") {
  CHECK(LinForm::basis(1) != LinForm::basis(2));
  CHECK((LinForm::basis(1) <=> LinForm::basis(1)) == std::strong_ordering::equal);
  const LinForm a = LinForm::basis(1), b = LinForm::basis(1) + LinForm(Rational(1));
  CHECK(((a < b) != (b < a)));
}
