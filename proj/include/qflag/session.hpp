#pragma once

#include <memory>

#include "qflag/calculus.hpp"

namespace qflag {

// All algebra contexts of one computation, sharing the root q^{1/N}.
class Session {
 public:
  explicit Session(int n);
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  int n() const { return n_; }
  const Algebra& su() const { return su_; }
  const Algebra& mat() const { return mat_; }
  const Algebra& u_fiber() const { return u_small_; }   // C_q[U_{N-1}]
  const Algebra& su_fiber() const { return su_small_; } // C_q[SU_{N-1}]
  const Algebra& u1() const { return u1_; }             // C[U_1], t = u[1,1], t^-1 = detinv
  const Algebra& context(const AlgebraSpec& spec) const;

  const Killing& killing() const;
  const Calculus& calculus() const;
  IdealOracle& oracle() const;

  NCPoly z(int i) const;
  NCPoly zs(int i) const;
  NCPoly zz(int i, int j) const;

 private:
  int n_;
  Algebra su_, mat_, u_small_, su_small_, u1_;
  mutable std::unique_ptr<Killing> killing_;
  mutable std::unique_ptr<Calculus> calculus_;
  mutable std::unique_ptr<IdealOracle> oracle_;
};

}  // namespace qflag
