#include "qflag/session.hpp"

namespace qflag {

namespace {

int checked(int n) {
  if (n < 2) throw PreconditionError("N must be at least 2");
  return n;
}

}  // namespace

Session::Session(int n)
    : n_(checked(n)),
      su_({AlgebraKind::SpecialUnitaryGroup, n, n}),
      mat_({AlgebraKind::MatrixBialgebra, n, n}),
      u_small_({AlgebraKind::UnitaryGroup, n - 1, n}),
      su_small_({AlgebraKind::SpecialUnitaryGroup, n - 1, n}),
      u1_({AlgebraKind::UnitaryGroup, 1, n}) {}

const Algebra& Session::context(const AlgebraSpec& spec) const {
  for (const Algebra* a : {&su_, &mat_, &u_small_, &su_small_, &u1_})
    if (a->spec() == spec) return *a;
  throw ContextMismatch("no algebra " + spec.name() + " in this session");
}

const Killing& Session::killing() const {
  if (!killing_) killing_ = std::make_unique<Killing>(su_);
  return *killing_;
}

const Calculus& Session::calculus() const {
  if (!calculus_) calculus_ = std::make_unique<Calculus>(killing());
  return *calculus_;
}

IdealOracle& Session::oracle() const {
  if (!oracle_) oracle_ = std::make_unique<IdealOracle>(mat_);
  return *oracle_;
}

NCPoly Session::z(int i) const { return su_.gen(i, 1); }
NCPoly Session::zs(int i) const { return su_.antipode(su_.gen(1, i)); }
NCPoly Session::zz(int i, int j) const { return su_.multiply(z(i), zs(j)); }

}  // namespace qflag
