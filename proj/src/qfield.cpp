#include "qflag/qfield.hpp"

#include <numeric>
#include <sstream>

namespace qflag {

LaurentPoly::LaurentPoly(const mpq_class& c, int exponent) : low_(exponent) {
  if (c != 0) c_.push_back(c);
  else low_ = 0;
}

void LaurentPoly::trim() {
  std::size_t b = 0;
  while (b < c_.size() && c_[b] == 0) ++b;
  if (b == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  std::size_t e = c_.size();
  while (c_[e - 1] == 0) --e;
  if (b > 0 || e < c_.size()) {
    c_ = std::vector<mpq_class>(c_.begin() + static_cast<long>(b), c_.begin() + static_cast<long>(e));
    low_ += static_cast<int>(b);
  }
}

mpq_class LaurentPoly::coeff(int exponent) const {
  int k = exponent - low_;
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.c_.empty()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LaurentPoly r;
  r.low_ = std::min(a.low_, b.low_);
  int hi = std::max(a.high(), b.high());
  r.c_.assign(static_cast<std::size_t>(hi - r.low_ + 1), mpq_class(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[static_cast<std::size_t>(a.low_ - r.low_) + k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[static_cast<std::size_t>(b.low_ - r.low_) + k] += b.c_[k];
  r.trim();
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.low_ = a.low_ + b.low_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

void LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quo, LaurentPoly& rem) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  quo = {};
  rem = a;
  const int db = b.high();
  while (!rem.is_zero() && rem.high() >= db) {
    int shift = rem.high() - db;
    mpq_class f = rem.leading() / b.leading();
    LaurentPoly t(f, shift);
    quo = quo + t;
    rem = rem - t * b;
  }
}

LaurentPoly LaurentPoly::gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.leading());
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = static_cast<std::size_t>(low_) * 1000003u;
  for (const auto& x : c_) {
    h = h * 31u + static_cast<std::size_t>(mpz_get_si(x.get_num_mpz_t()));
    h = h * 31u + static_cast<std::size_t>(mpz_get_si(x.get_den_mpz_t()));
  }
  return h;
}

QScalar::QScalar(LaurentPoly num, LaurentPoly den, int root)
    : num_(std::move(num)), den_(std::move(den)), root_(root) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  canonicalize();
}

QScalar QScalar::rational(const mpq_class& v, int root) {
  QScalar r(v);
  r.root_ = root;
  return r;
}

QScalar QScalar::s_power(int k, int root, const mpq_class& c) {
  QScalar r;
  r.num_ = LaurentPoly(c, k);
  r.root_ = root;
  if (root == 0 && k != 0) throw IncompatibleRoot("s power without a root order");
  return r;
}

QScalar QScalar::q_power(int num, int den, int root) {
  if (den <= 0) throw IncompatibleRoot("exponent denominator must be positive");
  if (root <= 0) {
    if (num == 0) return QScalar(1L);
    throw IncompatibleRoot("q power requires a positive root order");
  }
  if (int g = std::gcd(num, den); g > 1) {
    num /= g;
    den /= g;
  }
  if (root % den != 0)
    throw IncompatibleRoot("q^(" + std::to_string(num) + "/" + std::to_string(den) +
                           ") not in Q(q^(1/" + std::to_string(root) + "))");
  return s_power(num * (root / den), root);
}

QScalar QScalar::nu(int root) { return q(root) - q_power(-1, 1, root); }

void QScalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(mpq_class(1));
    return;
  }
  if (den_.is_one()) return;
  int d = den_.low();
  num_ = num_.shifted(-d);
  den_ = den_.shifted(-d);
  int n0 = num_.low();
  LaurentPoly np = num_.shifted(-n0);
  if (den_.high() > 0) {
    LaurentPoly g = LaurentPoly::gcd(np, den_);
    if (g.high() > 0) {
      LaurentPoly q, r;
      LaurentPoly::divmod(np, g, q, r);
      np = q;
      LaurentPoly::divmod(den_, g, q, r);
      den_ = q;
    }
  }
  mpq_class lc = den_.leading();
  if (lc != 1) {
    np = np.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
  num_ = np.shifted(n0);
}

int QScalar::common_root(const QScalar& a, const QScalar& b) {
  if (a.root_ == b.root_ || b.root_ == 0) return a.root_;
  if (a.root_ == 0) return b.root_;
  throw IncompatibleRoot("mixing roots " + std::to_string(a.root_) + " and " + std::to_string(b.root_));
}

QScalar QScalar::with_root(int root) const {
  if (root_ == root) return *this;
  if (root_ == 0) {
    QScalar r = *this;
    r.root_ = root;
    return r;
  }
  throw IncompatibleRoot("cannot move scalar between roots");
}

QScalar operator+(const QScalar& a, const QScalar& b) {
  int root = QScalar::common_root(a, b);
  QScalar r;
  r.root_ = root;
  if (a.is_zero()) { r.num_ = b.num_; r.den_ = b.den_; return r; }
  if (b.is_zero()) { r.num_ = a.num_; r.den_ = a.den_; return r; }
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ + b.num_;
    return r;
  }
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
  } else {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
  }
  r.canonicalize();
  return r;
}

QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -num_;
  return r;
}

QScalar operator*(const QScalar& a, const QScalar& b) {
  int root = QScalar::common_root(a, b);
  QScalar r;
  r.root_ = root;
  if (a.is_zero() || b.is_zero()) return r;
  r.num_ = a.num_ * b.num_;
  if (a.den_.is_one() && b.den_.is_one()) return r;
  r.den_ = a.den_ * b.den_;
  r.canonicalize();
  return r;
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  QScalar r;
  r.root_ = root_;
  r.num_ = den_;
  r.den_ = num_;
  if (num_.is_monomial()) {
    // den is a monomial c*s^k: invert directly
    r.num_ = den_.scaled(1 / num_.leading()).shifted(-num_.low());
    r.den_ = LaurentPoly(mpq_class(1));
    return r;
  }
  r.canonicalize();
  return r;
}

QScalar QScalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  QScalar r = QScalar::rational(1, root_);
  QScalar b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

bool operator==(const QScalar& a, const QScalar& b) {
  if (a.root_ != b.root_ && a.root_ != 0 && b.root_ != 0) return false;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

namespace {

std::string rat_string(const mpq_class& c) { return c.get_str(); }

std::string q_exp_string(int k, int root) {
  if (root <= 0) root = 1;
  int g = std::gcd(std::abs(k), root);
  int p = k / g, r = root / g;
  if (r == 1) {
    if (p == 1) return "q";
    return "q^" + std::to_string(p);
  }
  return "q^(" + std::to_string(p) + "/" + std::to_string(r) + ")";
}

}  // namespace

std::string laurent_to_string(const LaurentPoly& p, int root) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (int e = p.high(); e >= p.low(); --e) {
    mpq_class x = c[static_cast<std::size_t>(e - p.low())];
    if (x == 0) continue;
    bool neg = x < 0;
    if (neg) x = -x;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << rat_string(x);
    } else {
      if (x != 1) os << rat_string(x) << "*";
      os << q_exp_string(e, root);
    }
  }
  return os.str();
}

std::string QScalar::to_string() const {
  if (den_.is_one()) return laurent_to_string(num_, root_);
  return "(" + laurent_to_string(num_, root_) + ")/(" + laurent_to_string(den_, root_) + ")";
}

mpq_class QScalar::eval_at(const mpq_class& s) const {
  auto ev = [&](const LaurentPoly& p) {
    mpq_class acc = 0;
    mpq_class sp = 1;
    int lo = p.low();
    mpq_class base = lo >= 0 ? s : 1 / s;
    for (int i = 0; i < std::abs(lo); ++i) sp *= base;
    for (const auto& x : p.coeffs()) {
      acc += x * sp;
      sp *= s;
    }
    return acc;
  };
  return ev(num_) / ev(den_);
}

}  // namespace qflag
