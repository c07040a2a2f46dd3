#include <doctest.h>

#include <random>

#include "qflag/linalg.hpp"

using namespace qflag;

TEST_CASE("rank of small exact matrices") {
  QScalar q = QScalar::q(2), one(1L);
  DenseMatrix m{{one, q}, {q, q * q}};
  CHECK(rank(m) == 1);
  m[1][1] = q * q + one;
  CHECK(rank(m) == 2);
  CHECK(rank(zero_matrix(3, 4, 2)) == 0);
  CHECK(rank(identity_matrix(4, 2)) == 4);
}

TEST_CASE("inverse times matrix is the identity") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-2, 2), e(-2, 2);
  int found = 0;
  for (int it = 0; it < 20; ++it) {
    DenseMatrix m = zero_matrix(3, 3, 3);
    for (auto& row : m)
      for (auto& x : row) x = QScalar(static_cast<long>(c(rng))) * QScalar::q_power(e(rng), 3, 3);
    auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == 3));
    if (!inv) continue;
    ++found;
    CHECK(matmul(m, *inv) == identity_matrix(3, 3));
    CHECK(matmul(*inv, m) == identity_matrix(3, 3));
  }
  CHECK(found > 5);
}

TEST_CASE("echelon tracks kernel combinations") {
  QScalar q = QScalar::q(2);
  Echelon ech(true);
  CHECK(ech.insert({{0, QScalar(1L)}, {1, q}}));
  CHECK(ech.insert({{1, QScalar(1L)}}));
  CHECK_FALSE(ech.insert({{0, QScalar(2L)}, {1, QScalar(5L)}}));
  CHECK(ech.rank() == 2);
  REQUIRE(ech.kernel().size() == 1);
  const SparseVec& k = ech.kernel()[0];
  // the combination of inserted vectors must vanish
  SparseVec sum;
  const SparseVec ins[] = {{{0, QScalar(1L)}, {1, q}}, {{1, QScalar(1L)}}, {{0, QScalar(2L)}, {1, QScalar(5L)}}};
  for (const auto& [i, c] : k) axpy(sum, c, ins[i]);
  CHECK(sum.empty());
  CHECK(ech.contains({{0, QScalar(7L)}}));
}
