#include <doctest.h>

#include <random>

#include "qflag/expr.hpp"
#include "qflag/session.hpp"

using namespace qflag;

namespace {

NCPoly random_poly(const Algebra& a, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> g(1, a.size()), deg(0, max_deg), c(1, 3);
  NCPoly out = a.zero();
  for (int t = 0; t < 2; ++t) {
    NCPoly m = a.one();
    for (int k = deg(rng); k > 0; --k) m = a.multiply(m, a.gen(g(rng), g(rng)));
    out += QScalar(static_cast<long>(c(rng))) * m;
  }
  return out;
}

}  // namespace

TEST_CASE("basis has 2N - 1 elements") {
  for (int n : {2, 3}) {
    Session s(n);
    CHECK(s.calculus().dim() == 2 * n - 1);
    CHECK(s.calculus().d_span_rank() == static_cast<std::size_t>((n - 1) * (n - 1)));
    CHECK(s.calculus().total_rank() == static_cast<std::size_t>(n * n));
  }
}

TEST_CASE("labels follow the em, e0, ep ordering") {
  FormIndex ix{3};
  CHECK(ix.label(0) == "em[1]");
  CHECK(ix.label(2) == "e0");
  CHECK(ix.label(4) == "ep[2]");
  CHECK(ix.block(3) == FormBlock::Plus);
}

TEST_CASE("SU_2 d-formulas") {
  Session s(2);
  const Algebra& su = s.su();
  const Calculus& c = s.calculus();
  FormIndex ix = c.index();
  Omega1 ep = c.basis(ix.ep(1)), e0 = c.basis(ix.e0()), em = c.basis(ix.em(1));
  QScalar qi = su.q_pow(-1);
  NCPoly a = su.gen(1, 1), b = su.gen(1, 2), cc = su.gen(2, 1), d = su.gen(2, 2);
  CHECK(c.ext_d(a) == c.left_mul(a, e0) + c.left_mul(b, ep));
  CHECK(c.ext_d(b) == c.left_mul(a, em) - qi * c.left_mul(b, e0));
  CHECK(c.ext_d(cc) == c.left_mul(cc, e0) + c.left_mul(d, ep));
  CHECK(c.ext_d(d) == c.left_mul(cc, em) - qi * c.left_mul(d, e0));
  CHECK(format_form(c.ext_d(a)) == "u[1,1] e0 + u[1,2] ep[1]");
}

TEST_CASE("d of constants vanishes") {
  Session s(3);
  CHECK(s.calculus().ext_d(s.su().one()).is_zero());
  CHECK(s.calculus().ext_d(s.su().scalar(QScalar::q(3))).is_zero());
}

TEST_CASE("Leibniz rule and right action properties") {
  std::mt19937_64 rng(31);
  for (int n : {2, 3}) {
    Session s(n);
    const Algebra& su = s.su();
    const Calculus& c = s.calculus();
    for (int it = 0; it < 12; ++it) {
      NCPoly f = random_poly(su, rng, 2), g = random_poly(su, rng, 2), h = random_poly(su, rng, 1);
      CHECK(c.ext_d(su.multiply(f, g)) == c.right_act(c.ext_d(f), g) + c.left_mul(f, c.ext_d(g)));
      Omega1 w = c.ext_d(h);
      CHECK(c.right_act(c.right_act(w, f), g) == c.right_act(w, su.multiply(f, g)));
      CHECK(c.left_mul(f, c.right_act(w, g)) == c.right_act(c.left_mul(f, w), g));
    }
  }
}

TEST_CASE("ideal window elements have zero class") {
  Session s(2);
  const Calculus& c = s.calculus();
  auto window = c.ideal_window(2);
  CHECK(window.size() > 0);
  for (const auto& x : window) CHECK(c.in_ideal(x));
}

TEST_CASE("coset requires augmentation ideal elements") {
  Session s(2);
  CHECK_THROWS_AS(s.calculus().coset(s.su().gen(1, 1)), PreconditionError);
  CHECK_FALSE(s.calculus().in_ideal(s.su().gen(1, 2)));
}

TEST_CASE("projection keeps one block") {
  Session s(3);
  const Calculus& c = s.calculus();
  Omega1 w = c.ext_d(s.su().gen(2, 2));
  Omega1 sum = c.project(w, FormBlock::Minus) + c.project(w, FormBlock::Zero) + c.project(w, FormBlock::Plus);
  CHECK(sum == w);
}
