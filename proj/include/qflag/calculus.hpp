#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qflag/killing.hpp"

namespace qflag {

// Coordinates over (e-_1..e-_{N-1}, e0, e+_1..e+_{N-1}).
using OneFormCoords = std::vector<QScalar>;

enum class FormBlock { Minus, Zero, Plus };

// Index of a basis one-form in the fixed ordering.
struct FormIndex {
  int n;
  int em(int i) const { return i - 1; }
  int e0() const { return n - 1; }
  int ep(int i) const { return n - 1 + i; }
  int dim() const { return 2 * n - 1; }
  FormBlock block(int b) const { return b < n - 1 ? FormBlock::Minus : (b == n - 1 ? FormBlock::Zero : FormBlock::Plus); }
  // 1-based position inside its block (0 for e0)
  int offset(int b) const { return b < n - 1 ? b + 1 : (b == n - 1 ? 0 : b - n + 1); }
  std::string label(int b) const;
};

// Element of Ω¹_q(SU_N) as a left-module combination of the basis one-forms.
class Omega1 {
 public:
  Omega1() = default;
  explicit Omega1(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<NCPoly>& coeffs() const { return coeffs_; }
  const NCPoly& coeff(int b) const { return coeffs_.at(static_cast<std::size_t>(b)); }
  NCPoly& coeff(int b) { return coeffs_.at(static_cast<std::size_t>(b)); }
  bool is_zero() const;

  Omega1& operator+=(const Omega1& o);
  Omega1& operator-=(const Omega1& o);
  Omega1& operator*=(const QScalar& c);
  friend Omega1 operator+(Omega1 a, const Omega1& b) { return a += b; }
  friend Omega1 operator-(Omega1 a, const Omega1& b) { return a -= b; }
  friend Omega1 operator*(const QScalar& c, Omega1 a) { return a *= c; }
  friend bool operator==(const Omega1& a, const Omega1& b) {
    return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
  }

 private:
  AlgebraSpec spec_;
  std::vector<NCPoly> coeffs_;
};

// The quotient calculus Ω¹_q(SU_N) = Ω¹_bc / (C_q[SU_N] ⊗ V_D).
class Calculus {
 public:
  explicit Calculus(const Killing& killing);
  Calculus(const Calculus&) = delete;
  Calculus& operator=(const Calculus&) = delete;

  const Algebra& algebra() const { return su_; }
  const Killing& killing() const { return killing_; }
  FormIndex index() const { return {su_.size()}; }
  int dim() const { return 2 * su_.size() - 1; }

  // D_1 ∪ D_2 followed by the basis representatives, as used for the column matrix.
  const std::vector<NCPoly>& d_span() const { return d_span_; }
  const std::vector<NCPoly>& representatives() const { return reps_; }
  std::size_t d_span_rank() const { return d_rank_; }
  std::size_t total_rank() const { return total_rank_; }

  QMatrix bc_coset(const NCPoly& x) const;
  OneFormCoords coset(const NCPoly& x) const;
  OneFormCoords coset_of_matrix(const QMatrix& m) const;
  // Full coordinates (D-span part first) of a Q-image in the column basis.
  OneFormCoords solve(const QMatrix& m) const;
  bool in_ideal(const NCPoly& x) const;

  Omega1 zero() const { return Omega1(su_.spec()); }
  Omega1 basis(int b) const;
  Omega1 from_coords(const NCPoly& f, const OneFormCoords& c) const;
  Omega1 ext_d(const NCPoly& f) const;
  Omega1 left_mul(const NCPoly& f, const Omega1& w) const;
  Omega1 right_act(const Omega1& w, const NCPoly& g) const;
  // Σ f ⊗ coset(v - ε(v)) over the terms f ⊗ v of t.
  Omega1 from_tensor(const TensorPoly& t) const;
  // Keep one block, zero the others.
  Omega1 project(const Omega1& w, FormBlock keep) const;

  // Spanning set of I_{SU_N} ∩ span{w - ε(w) : deg w ≤ bound}.
  std::vector<NCPoly> ideal_window(int degree_bound) const;

 private:
  const OneFormCoords& coset_word(const Word& w) const;
  const OneFormCoords& act_word(int b, const Word& w) const;

  const Algebra& su_;
  const Killing& killing_;
  std::vector<NCPoly> d_span_, reps_;
  std::size_t d_rank_ = 0, total_rank_ = 0;
  DenseMatrix binv_;
  mutable std::map<Word, OneFormCoords, WordLess> coset_memo_;
  mutable std::map<std::pair<int, Word>, OneFormCoords> act_memo_;
};

}  // namespace qflag
