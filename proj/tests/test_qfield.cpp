#include <doctest.h>

#include <random>

#include "qflag/qfield.hpp"

using namespace qflag;

namespace {

QScalar random_scalar(std::mt19937_64& rng, int root) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-4, 4), len(1, 3);
  LaurentPoly num, den(mpq_class(1));
  for (int k = len(rng); k > 0; --k) num = num + LaurentPoly::monomial(coef(rng), expo(rng));
  if (rng() % 3 == 0) den = den + LaurentPoly::monomial(1 + rng() % 2, 1 + static_cast<int>(rng() % 3));
  return QScalar(num, den, root);
}

}  // namespace

TEST_CASE("q-power constructors and printing") {
  CHECK(QScalar::q(2).to_string() == "q");
  CHECK(QScalar::nu(3).to_string() == "q - q^-1");
  CHECK(QScalar::q_power(1, 2, 2).to_string() == "q^(1/2)");
  CHECK(QScalar::q_power(2, 4, 2).to_string() == "q^(1/2)");
  CHECK(QScalar::q_power(-2, 3, 3).to_string() == "q^(-2/3)");
  CHECK((QScalar(2L) * QScalar::q(2)).to_string() == "2*q");
  CHECK(QScalar(0L).to_string() == "0");
  CHECK((QScalar::q(2) + QScalar(1L)).inverse().to_string() == "(1)/(q + 1)");
}

TEST_CASE("exponents add and invert") {
  for (int root : {2, 3, 4}) {
    QScalar a = QScalar::q_power(1, root, root), b = QScalar::q_power(-3, root, root);
    CHECK(a * b == QScalar::q_power(-2, root, root));
    CHECK(a.pow(root) == QScalar::q(root));
    CHECK((a * a.inverse()).is_one());
    CHECK(b.pow(-2) == QScalar::q_power(6, root, root));
  }
}

TEST_CASE("rationals adapt to any root, roots do not mix") {
  QScalar half(mpq_class(1, 2));
  CHECK((half + QScalar::q(3)).root() == 3);
  CHECK(half == QScalar(mpq_class(1, 2)).with_root(2));
  CHECK_THROWS_AS(QScalar::q(2) + QScalar::q(3), IncompatibleRoot);
  CHECK_THROWS_AS(QScalar::q_power(1, 3, 2), Error);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(QScalar(0L).inverse(), DivisionByZero);
  CHECK_THROWS_AS(QScalar::q(2) / (QScalar::q(2) - QScalar::q(2)), DivisionByZero);
}

TEST_CASE("canonical form: equal values compare equal") {
  QScalar q = QScalar::q(2);
  QScalar lhs = (q * q - QScalar(1L)) / (q - QScalar(1L));
  CHECK(lhs == q + QScalar(1L));
  CHECK(lhs.is_laurent());
  CHECK((QScalar::nu(2) * q).to_string() == "q^2 - 1");
}

TEST_CASE("field axioms on random elements, checked by evaluation") {
  std::mt19937_64 rng(11);
  const mpq_class s1(3, 2), s2(-5, 7);
  for (int it = 0; it < 200; ++it) {
    int root = 2 + it % 3;
    QScalar a = random_scalar(rng, root), b = random_scalar(rng, root), c = random_scalar(rng, root);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a - a == QScalar(0L));
    for (const mpq_class& s : {s1, s2}) {
      CHECK((a * b).eval_at(s) == a.eval_at(s) * b.eval_at(s));
      CHECK((a + c).eval_at(s) == a.eval_at(s) + c.eval_at(s));
    }
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("Laurent division and gcd") {
  LaurentPoly x = LaurentPoly::monomial(1, 1), one(mpq_class(1));
  LaurentPoly a = (x + one) * (x - one), b = (x + one) * (x + one);
  LaurentPoly g = LaurentPoly::gcd(a, b);
  CHECK(g == x + one);
  LaurentPoly quo, rem;
  LaurentPoly::divmod(a, x + one, quo, rem);
  CHECK(quo == x - one);
  CHECK(rem.is_zero());
}
