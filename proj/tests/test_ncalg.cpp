#include <doctest.h>

#include <random>

#include "qflag/expr.hpp"
#include "qflag/session.hpp"

using namespace qflag;

namespace {

NCPoly random_word_poly(const Algebra& a, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> g(1, a.size()), deg(0, max_deg), c(-2, 2);
  NCPoly out = a.zero();
  for (int t = 0; t < 3; ++t) {
    Word w;
    for (int k = deg(rng); k > 0; --k) w.push_back(a.code(g(rng), g(rng)));
    out += QScalar(static_cast<long>(c(rng))) * a.word(w);
  }
  return out;
}

// Σ R^{ac}_{wx} u^w_b u^x_d - Σ u^a_y u^c_z R^{yz}_{bd}, multiplied in the algebra.
NCPoly frt(const Algebra& a, int i, int j, int k, int l) {
  const int n = a.size();
  NCPoly out = a.zero();
  for (int w = 1; w <= n; ++w)
    for (int x = 1; x <= n; ++x) {
      out += r_matrix(i, k, w, x, n) * a.multiply(a.gen(w, j), a.gen(x, l));
      out -= r_matrix(w, x, j, l, n) * a.multiply(a.gen(i, w), a.gen(k, x));
    }
  return out;
}

}  // namespace

TEST_CASE("R-matrix entries") {
  const int n = 2;
  QScalar q = QScalar::q(n), nu = QScalar::nu(n);
  CHECK(r_matrix(1, 1, 1, 1, n) == q);
  CHECK(r_matrix(1, 2, 2, 1, n) == QScalar(1L));
  CHECK(r_matrix(1, 2, 1, 2, n) == nu);
  CHECK(r_matrix(2, 1, 2, 1, n).is_zero());
  CHECK(r_matrix(2, 1, 1, 2, n) == QScalar(1L));
  CHECK(r_bar_matrix(1, 2, 1, 2, n) == -nu);
  CHECK(r_bar_matrix(2, 2, 2, 2, n) == q.inverse());
}

TEST_CASE("normal form of d*a in the matrix bialgebra") {
  Session s(2);
  const Algebra& m = s.mat();
  NCPoly da = m.multiply(m.gen(2, 2), m.gen(1, 1));
  CHECK(format_poly(da) == "u[1,1]*u[2,2] - (q - q^-1)*u[1,2]*u[2,1]");
  CHECK(m.equals(da, m.multiply(m.gen(1, 1), m.gen(2, 2)) - QScalar::nu(2) * m.multiply(m.gen(1, 2), m.gen(2, 1))));
}

TEST_CASE("every FRT relation vanishes in all contexts") {
  for (int n : {2, 3}) {
    Session s(n);
    for (const Algebra* a : {&s.mat(), &s.su()})
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) CHECK(frt(*a, i, j, k, l).is_zero());
  }
}

TEST_CASE("SU_2 determinant relation") {
  Session s(2);
  const Algebra& su = s.su();
  QScalar q = su.q_pow(1);
  NCPoly a = su.gen(1, 1), b = su.gen(1, 2), c = su.gen(2, 1), d = su.gen(2, 2);
  CHECK(su.multiply(a, d) == su.one() + q * su.multiply(b, c));
  CHECK(su.multiply(d, a) == su.one() + q.inverse() * su.multiply(b, c));
  CHECK(format_poly(su.multiply(d, a)) == "1 + q^-1*u[1,2]*u[2,1]");
}

TEST_CASE("antipode and counit on SU_2 generators") {
  Session s(2);
  const Algebra& su = s.su();
  QScalar q = su.q_pow(1);
  CHECK(su.antipode(su.gen(1, 1)) == su.gen(2, 2));
  CHECK(su.antipode(su.gen(2, 2)) == su.gen(1, 1));
  CHECK(su.antipode(su.gen(1, 2)) == -q.inverse() * su.gen(1, 2));
  CHECK(su.antipode(su.gen(2, 1)) == -q * su.gen(2, 1));
  CHECK(su.counit(su.gen(1, 1)) == QScalar(1L));
  CHECK(su.counit(su.gen(1, 2)).is_zero());
}

TEST_CASE("coproduct of a generator") {
  Session s(3);
  const Algebra& su = s.su();
  TensorPoly want(su.spec(), su.spec());
  for (int k = 1; k <= 3; ++k) want += TensorPoly::simple(su.gen(2, k), su.gen(k, 3));
  CHECK(su.coproduct(su.gen(2, 3)) == want);
}

TEST_CASE("coproduct is multiplicative") {
  std::mt19937_64 rng(5);
  Session s(2);
  const Algebra& su = s.su();
  for (int it = 0; it < 20; ++it) {
    NCPoly f = su.normal_form(random_word_poly(su, rng, 2)), g = su.normal_form(random_word_poly(su, rng, 2));
    TensorPoly prod(su.spec(), su.spec());
    const TensorPoly df = su.coproduct(f), dg = su.coproduct(g);
    for (const auto& [lf, cf] : df.terms())
      for (const auto& [lg, cg] : dg.terms()) {
        NCPoly l = su.multiply(su.word(lf.first), su.word(lg.first));
        NCPoly r = su.multiply(su.word(lf.second), su.word(lg.second));
        for (const auto& [wl, xl] : l.terms())
          for (const auto& [wr, xr] : r.terms()) prod.add(wl, wr, cf * cg * xl * xr);
      }
    CHECK(su.coproduct(su.multiply(f, g)) == prod);
  }
}

TEST_CASE("confluence: leftmost and rightmost reduction agree") {
  std::mt19937_64 rng(17);
  for (int n : {2, 3}) {
    Session s(n);
    for (const Algebra* a : {&s.mat(), &s.su()})
      for (int it = 0; it < 40; ++it) {
        NCPoly f = random_word_poly(*a, rng, n + 2);
        CHECK(a->normal_form(f, Strategy::Leftmost) == a->normal_form(f, Strategy::Rightmost));
      }
  }
}

TEST_CASE("normal form is idempotent and multiplication associative") {
  std::mt19937_64 rng(23);
  Session s(3);
  const Algebra& su = s.su();
  for (int it = 0; it < 30; ++it) {
    NCPoly f = random_word_poly(su, rng, 2), g = random_word_poly(su, rng, 2), h = random_word_poly(su, rng, 1);
    NCPoly nf = su.normal_form(f);
    CHECK(su.normal_form(nf) == nf);
    CHECK(su.multiply(su.multiply(f, g), h) == su.multiply(f, su.multiply(g, h)));
  }
}

TEST_CASE("determinant is central and grouplike") {
  Session s(3);
  const Algebra& m = s.mat();
  NCPoly det = m.quantum_determinant();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(m.multiply(det, m.gen(i, j)) == m.multiply(m.gen(i, j), det));
  CHECK(m.coproduct(det) == TensorPoly::simple(det, det));
  CHECK(s.su().normal_form(NCPoly(s.su().spec()) + s.su().quantum_determinant()) == s.su().one());
}

TEST_CASE("ideal oracle agrees with normal forms") {
  Session s(2);
  const Algebra& m = s.mat();
  NCPoly detm1 = m.quantum_determinant() - m.one();
  CHECK(oracle_ideal_membership(m, detm1, 2));
  CHECK(oracle_ideal_membership(m, m.multiply(m.gen(1, 2), detm1), 3));
  CHECK_FALSE(oracle_ideal_membership(m, m.gen(1, 1) - m.one(), 2));
  CHECK_THROWS_AS(oracle_ideal_membership(m, m.multiply(m.gen(1, 2), detm1), 2), PreconditionError);
}

TEST_CASE("unitary context: detinv inverts the determinant") {
  Algebra u(AlgebraSpec{AlgebraKind::UnitaryGroup, 2, 2});
  NCPoly det = u.quantum_determinant();
  CHECK(localized_equals(u, u.multiply(u.detinv(), det), u.one()));
  CHECK(u.equals(u.multiply(det, u.detinv()), u.one()));
  CHECK(u.counit(u.detinv()) == QScalar(1L));
  CHECK(u.coproduct(u.detinv()) == TensorPoly::simple(u.detinv(), u.detinv()));
}

TEST_CASE("context mismatch is reported") {
  Session s(2);
  CHECK_THROWS_AS(s.su().gen(1, 1) + s.mat().gen(1, 1), ContextMismatch);
  CHECK_THROWS_AS(s.su().multiply(s.su().gen(1, 1), s.mat().gen(1, 1)), ContextMismatch);
  CHECK_THROWS_AS(Session(1), PreconditionError);
}
