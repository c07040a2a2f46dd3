#pragma once

#include <unordered_map>

#include "qflag/linalg.hpp"
#include "qflag/ncalg.hpp"

namespace qflag {

using QMatrix = DenseMatrix;

enum class QShape { Gen, SGen, GenGen, GenSGen, GenSGenGen };

// Pairings r, rbar on C_q[SU_N], the Killing representation Q and Ad_R.
class Killing {
 public:
  explicit Killing(const Algebra& su);

  const Algebra& algebra() const { return su_; }

  // r via the left-peeling recursion (first coq1 law on the left argument).
  QScalar r(const NCPoly& f, const NCPoly& g) const;
  // r via the right-peeling recursion (second coq1 law on the right argument).
  QScalar r_right(const NCPoly& f, const NCPoly& g) const;
  QScalar r_bar(const NCPoly& f, const NCPoly& g) const;
  QScalar r_word(const Word& f, const Word& g) const;
  QScalar r_right_word(const Word& f, const Word& g) const;
  QScalar r_bar_word(const Word& f, const Word& g) const;

  // Q(h) entrywise as Q(h ⊗ u^k_l), summed over the coproduct of h.
  QMatrix Q(const NCPoly& h) const;
  const QMatrix& Q_word(const Word& w) const;
  // Q(h·u^i_j) from Q(h): Σ_a T(u^i_a) Q(h) M(u^a_j). Linear in Q(h), so ker Q is a right ideal.
  QMatrix Q_extend(const QMatrix& qh, int i, int j) const;
  // Killing form on arbitrary pairs, straight from r and coproducts.
  QScalar killing_form(const NCPoly& h, const NCPoly& g) const;

  // indices: Gen (k,l,i,j); SGen (k,l,g,h); GenGen (k,l,i,j,r,s);
  // GenSGen (k,l,i,j,g,h); GenSGenGen (k,l,i,j,g,h,r,s)
  QScalar closed_Q(QShape shape, const std::vector<int>& idx) const;

  TensorPoly ad_r(const NCPoly& f) const;

 private:
  void check(const NCPoly& f) const;
  QScalar R(int i, int k, int j, int l) const;
  QScalar Rb(int i, int k, int j, int l) const;

  const Algebra& su_;
  int n_;
  QScalar qn_;     // q^{-1/N}
  QScalar qn_inv_; // q^{1/N}
  std::vector<QScalar> rtab_, rbtab_;
  mutable std::unordered_map<Word, QScalar> memo_left_, memo_right_, memo_bar_;
  mutable std::unordered_map<Word, QMatrix> memo_q_;
};

QMatrix qmatrix_add(const QMatrix& a, const QMatrix& b, const QScalar& cb = QScalar(1L));
bool qmatrix_is_zero(const QMatrix& a);

}  // namespace qflag
