#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qflag/qfield.hpp"

namespace qflag {

enum class AlgebraKind { MatrixBialgebra, UnitaryGroup, SpecialUnitaryGroup };

struct AlgebraSpec {
  AlgebraKind kind = AlgebraKind::SpecialUnitaryGroup;
  int size = 2;
  int root = 2;
  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
  std::string name() const;
};

struct ContextMismatch : Error {
  explicit ContextMismatch(const std::string& w) : Error("context-mismatch", w) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w) : Error("precondition", w) {}
};
struct InternalError : Error {
  explicit InternalError(const std::string& w) : Error("internal", w) {}
};

// A generator is stored as one char: (i-1)*size + (j-1) for u^i_j, size*size for det^-1.
struct Gen {
  bool detinv = false;
  int row = 0;
  int col = 0;
  static Gen u(int i, int j) { return {false, i, j}; }
  static Gen inv() { return {true, 0, 0}; }
  char code(int size) const {
    return static_cast<char>(detinv ? size * size : (row - 1) * size + (col - 1));
  }
  static Gen decode(char c, int size);
};

using Word = std::string;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NCPoly {
 public:
  using Terms = std::map<Word, QScalar, WordLess>;

  NCPoly() = default;
  explicit NCPoly(AlgebraSpec spec) : spec_(spec) {}
  static NCPoly constant(AlgebraSpec spec, const QScalar& c);
  static NCPoly monomial(AlgebraSpec spec, Word w, const QScalar& c);

  const AlgebraSpec& spec() const { return spec_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  QScalar coeff(const Word& w) const;
  QScalar constant_term() const { return coeff(Word()); }

  void add(const Word& w, const QScalar& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const QScalar& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const QScalar& c, NCPoly a) { return a *= c; }
  NCPoly operator-() const { return QScalar(-1L) * *this; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.spec_ == b.spec_ && a.terms_ == b.terms_;
  }

 private:
  void check(const NCPoly& o) const;

  AlgebraSpec spec_;
  Terms terms_;
};

struct WordPairLess {
  bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
    WordLess l;
    if (a.first != b.first) return l(a.first, b.first);
    return l(a.second, b.second);
  }
};

class TensorPoly {
 public:
  using Terms = std::map<std::pair<Word, Word>, QScalar, WordPairLess>;

  TensorPoly() = default;
  TensorPoly(AlgebraSpec left, AlgebraSpec right) : left_(left), right_(right) {}
  static TensorPoly simple(const NCPoly& a, const NCPoly& b);

  const AlgebraSpec& left_spec() const { return left_; }
  const AlgebraSpec& right_spec() const { return right_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word& l, const Word& r, const QScalar& c);
  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.terms_ == b.terms_;
  }
  // Collect by right leg: right word -> left polynomial.
  std::map<Word, NCPoly, WordLess> by_right() const;
  std::map<Word, NCPoly, WordLess> by_left() const;

 private:
  AlgebraSpec left_, right_;
  Terms terms_;
};

struct RuleTable {
  AlgebraSpec context;
  // (larger, smaller) generator codes -> replacement in sorted quadratic words
  std::map<std::pair<int, int>, NCPoly> swap_rules;
  // leading word of det - 1 and its replacement (unit leading coefficient)
  std::optional<std::pair<Word, NCPoly>> det_rule;
};

enum class Strategy { Leftmost, Rightmost };

// R-matrix entries R^{ik}_{jl} and Rbar^{ik}_{jl} of the standard sl_N solution.
QScalar r_matrix(int i, int k, int j, int l, int root);
QScalar r_bar_matrix(int i, int k, int j, int l, int root);

// Permutations of 0..m-1 paired with their inversion counts.
std::vector<std::pair<std::vector<int>, int>> permutations_with_length(int m);

class Algebra {
 public:
  explicit Algebra(AlgebraSpec spec);
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const AlgebraSpec& spec() const { return spec_; }
  int size() const { return spec_.size; }
  int root() const { return spec_.root; }
  AlgebraKind kind() const { return spec_.kind; }
  const RuleTable& rules() const { return rules_; }

  char code(int i, int j) const { return Gen::u(i, j).code(spec_.size); }
  char detinv_code() const { return static_cast<char>(spec_.size * spec_.size); }
  Gen decode(char c) const { return Gen::decode(c, spec_.size); }

  NCPoly zero() const { return NCPoly(spec_); }
  NCPoly one() const { return scalar(QScalar(1L)); }
  NCPoly scalar(const QScalar& c) const { return NCPoly::constant(spec_, c.with_root(spec_.root)); }
  NCPoly gen(int i, int j) const;
  NCPoly detinv() const;
  NCPoly word(const Word& w) const { return NCPoly::monomial(spec_, w, QScalar(1L)); }
  QScalar q_pow(int num, int den = 1) const { return QScalar::q_power(num, den, spec_.root); }
  QScalar nu() const { return QScalar::nu(spec_.root); }

  NCPoly normal_form(const NCPoly& f) const;
  NCPoly normal_form(const NCPoly& f, Strategy s) const;
  NCPoly multiply(const NCPoly& f, const NCPoly& g) const;
  NCPoly multiply(std::initializer_list<NCPoly> fs) const;
  NCPoly power(const NCPoly& f, int k) const;
  bool equals(const NCPoly& f, const NCPoly& g) const;

  NCPoly quantum_determinant() const;
  // q-minor over ordered rows/cols (1-based), normal-formed.
  NCPoly quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols) const;
  QScalar counit(const NCPoly& f) const;
  TensorPoly coproduct(const NCPoly& f) const;
  // Δ of a single word, memoized.
  const TensorPoly& coproduct_word(const Word& w) const;
  NCPoly antipode(const NCPoly& f) const;

  // M-level canonical form: DetInv prefix, sorted U-letters, no det reduction.
  NCPoly sorted_form(const NCPoly& f) const;
  bool is_sorted_word(const Word& w) const;
  // Final reduction of a sorted word by the det rule (identity for MatrixBialgebra).
  const NCPoly& reduce_sorted(const Word& w) const;

  std::vector<Word> normal_words_of_degree(int d) const;

 private:
  using TermList = std::vector<std::pair<Word, QScalar>>;

  void derive_rules();
  const TermList& insert(const Word& v, char x) const;
  void accumulate_sorted(const Word& w, const QScalar& c, std::map<Word, QScalar, WordLess>& out) const;
  bool dominates_det(const Word& sorted_u) const;
  Word strip_det(const Word& sorted_u) const;
  NCPoly finish(const NCPoly& sorted) const;
  const NCPoly& antipode_gen(char c) const;
  NCPoly star(int i, int j) const;

  AlgebraSpec spec_;
  RuleTable rules_;
  std::vector<std::pair<Word, QScalar>> det_terms_;  // words of det as unsorted row-ordered products
  mutable std::unordered_map<Word, TermList> insert_memo_;
  mutable std::unordered_map<Word, NCPoly> reduce_memo_;
  mutable std::unordered_map<char, NCPoly> antipode_memo_;
  mutable std::unordered_map<Word, TensorPoly> coproduct_memo_;
};

// Equality through clearing det powers into the matrix bialgebra (UnitaryGroup contexts).
bool localized_equals(const Algebra& u, const NCPoly& f, const NCPoly& g);

// Bounded ideal-membership referee for <det - 1> inside C_q[M_N].
class IdealOracle {
 public:
  explicit IdealOracle(const Algebra& mat);
  bool contains(const NCPoly& f, int degree_bound);

 private:
  const Algebra& mat_;
  struct Cache;
  std::map<int, std::shared_ptr<Cache>> caches_;
};

bool oracle_ideal_membership(const Algebra& mat, const NCPoly& f, int degree_bound);

}  // namespace qflag
