#include <doctest.h>

#include <random>

#include "qflag/session.hpp"

using namespace qflag;

namespace {

QScalar r_gen(int i, int j, int k, int l, int n) { return QScalar::q_power(-1, n, n) * r_matrix(k, i, j, l, n); }

// Q_kl(u^i_j) = Σ_ab r(u^k_a ⊗ u^i_b) r(u^b_j ⊗ u^a_l), read off the definition.
QScalar q_oracle(int k, int l, int i, int j, int n) {
  QScalar acc;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) acc += r_gen(k, a, i, b, n) * r_gen(b, j, a, l, n);
  return acc;
}

}  // namespace

TEST_CASE("r on generators") {
  for (int n : {2, 3}) {
    Session s(n);
    const Algebra& su = s.su();
    const Killing& K = s.killing();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) CHECK(K.r(su.gen(i, j), su.gen(k, l)) == r_gen(i, j, k, l, n));
  }
}

TEST_CASE("r on unit and determinant") {
  Session s(2);
  const Algebra& su = s.su();
  const Killing& K = s.killing();
  CHECK(K.r(su.one(), su.gen(1, 2)).is_zero());
  CHECK(K.r(su.one(), su.gen(2, 2)) == QScalar(1L));
  CHECK(K.r(su.gen(1, 1), su.one()) == QScalar(1L));
}

TEST_CASE("Q on generators matches the definition") {
  for (int n : {2, 3}) {
    Session s(n);
    const Algebra& su = s.su();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        QMatrix m = s.killing().Q(su.gen(i, j));
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) CHECK(m[k - 1][l - 1] == q_oracle(k, l, i, j, n));
      }
  }
}

TEST_CASE("Q(u[1,1]) at N = 2") {
  Session s(2);
  QMatrix m = s.killing().Q(s.su().gen(1, 1));
  CHECK(m[0][0].to_string() == "q");
  CHECK(m[1][1].to_string() == "q - q^-1 + q^-3");
  CHECK(m[0][1].is_zero());
  CHECK(m[1][0].is_zero());
}

TEST_CASE("Q transfer law and right ideal property") {
  std::mt19937_64 rng(9);
  Session s(2);
  const Algebra& su = s.su();
  const Killing& K = s.killing();
  std::uniform_int_distribution<int> g(1, 2);
  for (int it = 0; it < 30; ++it) {
    NCPoly h = su.multiply(su.gen(g(rng), g(rng)), su.gen(g(rng), g(rng)));
    int i = g(rng), j = g(rng);
    CHECK(K.Q(su.multiply(h, su.gen(i, j))) == K.Q_extend(K.Q(h), i, j));
  }
  // kernel elements of the coset map stay in the kernel under right multiplication
  const Calculus& c = s.calculus();
  for (const NCPoly& x : c.ideal_window(2))
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) CHECK(c.in_ideal(su.multiply(x, su.gen(i, j))));
}

TEST_CASE("closed forms agree with the convolution") {
  Session s(2);
  const Algebra& su = s.su();
  const Killing& K = s.killing();
  std::vector<int> t{1, 2, 2, 1};
  QMatrix m = K.Q(su.gen(2, 1));
  CHECK(K.closed_Q(QShape::Gen, t) == m[0][1]);
  std::vector<int> t2{2, 2, 1, 2, 2, 1};
  CHECK(K.closed_Q(QShape::GenSGen, t2) == K.Q(su.multiply(su.gen(1, 2), su.antipode(su.gen(2, 1))))[1][1]);
}

TEST_CASE("Q(1) is the identity and Q agrees with the two-coproduct form") {
  Session s(3);
  const Algebra& su = s.su();
  const Killing& K = s.killing();
  CHECK(K.Q(su.one()) == identity_matrix(3, 3));
  NCPoly h = su.multiply(su.gen(1, 2), su.gen(3, 1));
  QMatrix m = K.Q(h);
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) CHECK(K.killing_form(h, su.gen(k, l)) == m[k - 1][l - 1]);
}
