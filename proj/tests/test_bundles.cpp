#include <doctest.h>

#include <algorithm>
#include <random>

#include "qflag/bundles.hpp"
#include "qflag/expr.hpp"

using namespace qflag;

TEST_CASE("alpha sends u11 to detinv and shifts the lower block") {
  Session s(3);
  Bundles b(s);
  const Algebra& su = s.su();
  const Algebra& u = s.u_fiber();
  CHECK(b.hopf_map(HopfTag::Alpha, su.gen(1, 1)) == u.detinv());
  CHECK(b.hopf_map(HopfTag::Alpha, su.gen(3, 2)) == u.gen(2, 1));
  CHECK(b.hopf_map(HopfTag::Alpha, su.gen(1, 3)).is_zero());
  CHECK(b.hopf_map(HopfTag::Beta, su.gen(1, 1)) == s.su_fiber().one());
  CHECK(b.hopf_map(HopfTag::Gamma, su.gen(3, 3)) == s.u1().gen(1, 1));
  CHECK(b.hopf_map(HopfTag::Gamma, su.gen(2, 2)) == s.u1().one());
}

TEST_CASE("sections are right inverses of the Hopf maps") {
  std::mt19937_64 rng(2);
  Session s(3);
  Bundles b(s);
  for (HopfTag tag : {HopfTag::Alpha, HopfTag::Beta, HopfTag::Gamma}) {
    const Algebra& t = b.target(tag);
    auto words = t.normal_words_of_degree(2);
    std::shuffle(words.begin(), words.end(), rng);
    words.resize(std::min<std::size_t>(words.size(), 8));
    for (const Word& w : words) {
      NCPoly h = t.word(w);
      CHECK(t.equals(b.hopf_map(tag, b.section(tag, h)), h));
    }
  }
}

TEST_CASE("coinvariants and degrees") {
  Session s(3);
  Bundles b(s);
  for (int i = 1; i <= 3; ++i) {
    CHECK(b.is_coinvariant(HopfTag::Beta, s.z(i)));
    CHECK(b.line_bundle_degree(s.z(i)) == -1);
    CHECK(b.line_bundle_degree(s.zs(i)) == 1);
    for (int j = 1; j <= 3; ++j) CHECK(b.is_coinvariant(HopfTag::Alpha, s.zz(i, j)));
  }
  CHECK_FALSE(b.is_coinvariant(HopfTag::Alpha, s.z(1)));
  CHECK(b.line_bundle_degree(s.su().multiply(s.zs(1), s.zs(3))) == 2);
  CHECK_THROWS_AS(b.line_bundle_degree(s.z(1) + s.zs(2)), NotHomogeneous);
}

TEST_CASE("soldering form on the sphere") {
  Session s(3);
  Bundles b(s);
  const Calculus& c = s.calculus();
  FormIndex ix = c.index();
  CHECK(b.theta(s.z(2)) == c.basis(ix.ep(1)));
  CHECK(b.theta(s.z(3)) == c.basis(ix.ep(2)));
  CHECK(b.theta(s.z(1) - s.su().one()) == c.basis(ix.e0()));
  CHECK_THROWS_AS(b.theta(s.z(1)), PreconditionError);
  CHECK_THROWS_AS(b.theta(s.su().gen(1, 2)), Error);
}

TEST_CASE("Dolbeault operators need coinvariant input") {
  Session s(2);
  Bundles b(s);
  CHECK_THROWS_AS(b.dolbeault(s.z(1), DolbeaultPart::Hol), PreconditionError);
  Omega1 d = b.dolbeault(s.zz(1, 2), DolbeaultPart::Hol);
  CHECK(format_form(d, {true}) == "-q^-1*b*b ep[1]");
  Omega1 db = b.dolbeault(s.zz(2, 1), DolbeaultPart::AntiHol);
  CHECK(format_form(db, {true}) == "q*c*c em[1]");
}

TEST_CASE("ver inverts ver^-1") {
  std::mt19937_64 rng(4);
  Session s(2);
  Bundles b(s);
  const Algebra& su = s.su();
  for (HopfTag tag : {HopfTag::Alpha, HopfTag::Beta, HopfTag::Gamma}) {
    const Algebra& t = b.target(tag);
    for (int deg = 0; deg <= 2; ++deg)
      for (const Word& w : t.normal_words_of_degree(deg)) {
        NCPoly f = su.gen(1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2));
        CHECK(b.galois_ver(b.galois_ver_inv(f, t.word(w), tag), tag) == TensorPoly::simple(f, t.word(w)));
      }
  }
}

TEST_CASE("connection and covariant derivative") {
  Session s(2);
  Bundles b(s);
  const Calculus& c = s.calculus();
  FormIndex ix = c.index();
  CHECK(b.connection_project(c.basis(ix.e0())) == c.basis(ix.e0()));
  CHECK(b.connection_project(c.basis(ix.ep(1))).is_zero());
  CHECK(b.covariant_derivative(s.zs(2)) == (-s.su().q_pow(-1)) * c.left_mul(s.su().antipode(s.su().gen(2, 2)), c.basis(ix.em(1))));
  CHECK_THROWS_AS(b.covariant_derivative(s.z(1) + s.zs(1)), NotHomogeneous);
}

TEST_CASE("subalgebra membership is checked on construction") {
  Session s(2);
  Bundles b(s);
  CHECK_NOTHROW(SubalgebraElement(b, s.zz(1, 2), Space::ProjectiveSpace));
  CHECK_NOTHROW(SubalgebraElement(b, s.z(2), Space::Sphere));
  CHECK_NOTHROW(SubalgebraElement(b, s.zs(2), Space::LineBundle, 1));
  CHECK_THROWS_AS(SubalgebraElement(b, s.z(1), Space::ProjectiveSpace), PreconditionError);
  CHECK_THROWS_AS(SubalgebraElement(b, s.z(1), Space::LineBundle, 1), PreconditionError);
  CHECK_THROWS_AS(parse_hopf_tag("delta"), PreconditionError);
}

TEST_CASE("fiber classes") {
  Session s(3);
  Bundles b(s);
  const Algebra& u = s.u_fiber();
  NCPoly dm1 = u.quantum_determinant() - u.one();
  QScalar base = b.fiber_class(dm1);
  CHECK_FALSE(base.is_zero());
  CHECK(b.fiber_class(u.multiply(dm1, u.gen(1, 1))) == s.su().q_pow(-2, 3) * base);
  CHECK(b.fiber_class(u.multiply(dm1, u.gen(1, 2))).is_zero());
}
