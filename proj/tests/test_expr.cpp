#include <doctest.h>

#include <random>

#include "qflag/expr.hpp"

using namespace qflag;

namespace {

NCPoly eval(const std::string& text, const Session& s, const Algebra& a) {
  return evaluate_poly(parse_expr(text, a.spec()), s, a);
}

void expect_parse_error(const std::string& text, const AlgebraSpec& spec, const std::string& kind, int col) {
  try {
    parse_expr(text, spec);
    FAIL("no error for " << text);
  } catch (const ParseError& e) {
    CHECK(e.kind() == kind);
    CHECK(e.col == col);
  }
}

}  // namespace

TEST_CASE("determinant expression") {
  Session s(2);
  NCPoly det = eval("u[1,1]*u[2,2] - q^(1/1)*u[1,2]*u[2,1]", s, s.mat());
  CHECK(det == s.mat().quantum_determinant());
  CHECK(eval("u[1,1]*u[2,2] - q*u[1,2]*u[2,1]", s, s.su()) == s.su().one());
}

TEST_CASE("antipode and shorthands") {
  Session s(3);
  const Algebra& su = s.su();
  Expr e = parse_expr("S(u[1,2])", su.spec());
  CHECK(e.kind == Expr::Kind::Antipode);
  CHECK(eval("zz[1,2]", s, su) == su.multiply(su.gen(1, 1), su.antipode(su.gen(1, 2))));
  CHECK(eval("z[2]", s, su) == su.gen(2, 1));
  CHECK(eval("zs[3]", s, su) == su.antipode(su.gen(1, 3)));
}

TEST_CASE("juxtaposition, powers and division by scalars") {
  Session s(2);
  const Algebra& m = s.mat();
  CHECK(eval("2 u[1,2] u[2,1]", s, m) == QScalar(2L) * m.multiply(m.gen(1, 2), m.gen(2, 1)));
  CHECK(eval("(u[1,1] + 1)^2", s, m) == m.multiply(m.gen(1, 1) + m.one(), m.gen(1, 1) + m.one()));
  CHECK(eval("u[1,2]/(q - q^-1)", s, m) == QScalar::nu(2).inverse() * m.gen(1, 2));
  CHECK(eval("q^(2 - 2/2) u[1,1]", s, m) == QScalar::q(2) * m.gen(1, 1));
  CHECK(eval("-1/3", s, m) == m.scalar(QScalar(mpq_class(-1, 3))));
  CHECK(eval("a*d", s, m) == m.multiply(m.gen(1, 1), m.gen(2, 2)));
}

TEST_CASE("parse errors carry kind and position") {
  Session s(2);
  expect_parse_error("u[1,3]", s.su().spec(), "index-out-of-range", 5);
  expect_parse_error("u[1,1] + foo", s.su().spec(), "unknown-identifier", 10);
  expect_parse_error("u[1,1] +", s.su().spec(), "syntax", 9);
  expect_parse_error("detinv", s.su().spec(), "unknown-identifier", 1);
  expect_parse_error("z[1]", s.mat().spec(), "unknown-identifier", 1);
  try {
    parse_expr("u[1,1]\n  * )", s.su().spec());
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 5);
  }
}

TEST_CASE("forms and algebra elements are separate sorts") {
  Session s(2);
  Omega1 w = evaluate_form(parse_expr("u[1,1] e0 + q ep[1]", s.su().spec()), s);
  FormIndex ix = s.calculus().index();
  CHECK(w.coeff(ix.e0()) == s.su().gen(1, 1));
  CHECK(w.coeff(ix.ep(1)) == s.su().scalar(QScalar::q(2)));
  CHECK_THROWS_AS(evaluate(parse_expr("e0 u[1,1]", s.su().spec()), s, s.su()), Error);
  CHECK_THROWS_AS(evaluate(parse_expr("e0 * ep[1]", s.su().spec()), s, s.su()), Error);
  CHECK_THROWS_AS(evaluate_poly(parse_expr("e0", s.su().spec()), s, s.su()), Error);
  CHECK_THROWS_AS(evaluate(parse_expr("u[1,1] / u[1,2]", s.su().spec()), s, s.su()), Error);
}

TEST_CASE("letters print for N = 2 only when asked") {
  Session s(2);
  const Algebra& su = s.su();
  NCPoly x = su.multiply(su.gen(1, 2), su.gen(2, 1));
  CHECK(format_poly(x) == "u[1,2]*u[2,1]");
  CHECK(format_poly(x, {true}) == "b*c");
}

TEST_CASE("print then parse is the identity on normal forms") {
  std::mt19937_64 rng(41);
  for (int n : {2, 3}) {
    Session s(n);
    for (const Algebra* a : {&s.mat(), &s.su()}) {
      std::uniform_int_distribution<int> g(1, n), deg(0, 3), c(-3, 3), e(-2 * n, 2 * n);
      for (int it = 0; it < 60; ++it) {
        NCPoly f = a->zero();
        for (int t = 0; t < 3; ++t) {
          NCPoly m = a->one();
          for (int k = deg(rng); k > 0; --k) m = a->multiply(m, a->gen(g(rng), g(rng)));
          QScalar coef = QScalar(static_cast<long>(c(rng))) * QScalar::q_power(e(rng), n, n);
          if (t == 2) coef = coef / (QScalar::q(n) + QScalar(static_cast<long>(1 + rng() % 2)));
          f += coef * m;
        }
        f = a->normal_form(f);
        std::string text = format_poly(f);
        CHECK_MESSAGE(eval(text, s, *a) == f, text);
      }
    }
  }
}

TEST_CASE("form round trip") {
  Session s(3);
  const Calculus& c = s.calculus();
  Omega1 w = c.ext_d(s.zz(2, 3)) + c.ext_d(s.su().gen(1, 3));
  CHECK(evaluate_form(parse_expr(format_form(w), s.su().spec()), s) == w);
}
