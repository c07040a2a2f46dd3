#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qflag {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct IncompatibleRoot : Error {
  explicit IncompatibleRoot(const std::string& w) : Error("incompatible-root", w) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& w) : Error("division-by-zero", w) {}
};

// Laurent polynomial in s with rational coefficients.
// coeffs()[k] is the coefficient of s^(low() + k); both ends are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const mpq_class& c, int exponent = 0);

  static LaurentPoly monomial(const mpq_class& c, int exponent) { return LaurentPoly(c, exponent); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return low_ == 0 && c_.size() == 1 && c_[0] == 1; }
  bool is_monomial() const { return c_.size() == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int exponent) const;
  const mpq_class& leading() const { return c_.back(); }

  LaurentPoly shifted(int k) const;
  LaurentPoly scaled(const mpq_class& c) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const { return scaled(-1); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }

  // Ordinary polynomial division; both operands must have low() == 0.
  static void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quo, LaurentPoly& rem);
  // Monic gcd of two polynomials with low() == 0.
  static LaurentPoly gcd(LaurentPoly a, LaurentPoly b);

  std::size_t hash() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<mpq_class> c_;
};

// Element of Q(s), s = q^(1/root). Canonical: den has low()==0 and is monic,
// gcd(num, den) == 1. root 0 marks a plain rational that adapts to any root.
class QScalar {
 public:
  QScalar() = default;
  QScalar(long v) : num_(mpq_class(v)) {}  // NOLINT implicit rational constants
  explicit QScalar(const mpq_class& v) : num_(v) {}
  QScalar(LaurentPoly num, LaurentPoly den, int root);

  static QScalar rational(const mpq_class& v, int root = 0);
  static QScalar s_power(int k, int root, const mpq_class& c = 1);
  // q^(num/den); den must divide root.
  static QScalar q_power(int num, int den, int root);
  static QScalar q(int root) { return s_power(root, root); }
  static QScalar nu(int root);

  int root() const { return root_; }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }

  QScalar inverse() const;
  QScalar with_root(int root) const;

  friend QScalar operator+(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a, const QScalar& b);
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inverse(); }
  QScalar operator-() const;
  QScalar& operator+=(const QScalar& b) { return *this = *this + b; }
  QScalar& operator-=(const QScalar& b) { return *this = *this - b; }
  QScalar& operator*=(const QScalar& b) { return *this = *this * b; }
  QScalar pow(int k) const;

  // Structural equality; plain rationals compare equal across roots.
  friend bool operator==(const QScalar& a, const QScalar& b);
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

  std::size_t hash() const { return num_.hash() * 31u + den_.hash(); }

  // Text in q with exponents reduced against the root, e.g. "q - q^-1", "2*q^(1/2)".
  std::string to_string() const;
  // Debug hook: value at a rational s.
  mpq_class eval_at(const mpq_class& s) const;

 private:
  void canonicalize();
  static int common_root(const QScalar& a, const QScalar& b);

  LaurentPoly num_;
  LaurentPoly den_{mpq_class(1)};
  int root_ = 0;
};

std::string laurent_to_string(const LaurentPoly& p, int root);

}  // namespace qflag
