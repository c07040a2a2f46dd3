#include "qflag/calculus.hpp"

namespace qflag {

std::string FormIndex::label(int b) const {
  switch (block(b)) {
    case FormBlock::Minus: return "em[" + std::to_string(offset(b)) + "]";
    case FormBlock::Zero: return "e0";
    case FormBlock::Plus: return "ep[" + std::to_string(offset(b)) + "]";
  }
  return {};
}

Omega1::Omega1(AlgebraSpec spec) : spec_(spec), coeffs_(static_cast<std::size_t>(2 * spec.size - 1), NCPoly(spec)) {}

bool Omega1::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

Omega1& Omega1::operator+=(const Omega1& o) {
  if (!(spec_ == o.spec_)) throw ContextMismatch("one-forms over different algebras");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Omega1& Omega1::operator-=(const Omega1& o) {
  if (!(spec_ == o.spec_)) throw ContextMismatch("one-forms over different algebras");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Omega1& Omega1::operator*=(const QScalar& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

namespace {

std::vector<QScalar> vec(const QMatrix& m) {
  std::vector<QScalar> v;
  for (const auto& row : m)
    for (const auto& x : row) v.push_back(x);
  return v;
}

}  // namespace

Calculus::Calculus(const Killing& killing) : su_(killing.algebra()), killing_(killing) {
  const int n = su_.size();
  for (int i = 2; i <= n; ++i) d_span_.push_back(su_.multiply(su_.gen(i, 1), su_.antipode(su_.gen(1, i))));
  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= n; ++j)
      if (i != j) d_span_.push_back(su_.gen(i, j));
  for (int i = 1; i < n; ++i) reps_.push_back(su_.gen(1, i + 1));
  reps_.push_back(su_.gen(1, 1) - su_.one());
  for (int i = 1; i < n; ++i) reps_.push_back(su_.gen(i + 1, 1));

  const std::size_t sz = static_cast<std::size_t>(n * n);
  DenseMatrix cols;
  for (const auto& x : d_span_) cols.push_back(vec(killing_.Q(x)));
  d_rank_ = rank(cols);
  for (const auto& x : reps_) cols.push_back(vec(killing_.Q(x)));
  total_rank_ = rank(cols);
  if (d_rank_ != static_cast<std::size_t>((n - 1) * (n - 1)) || total_rank_ != sz)
    throw InternalError("Q-images of the basis representatives are not independent");
  DenseMatrix b = zero_matrix(sz, sz, su_.root());
  for (std::size_t c = 0; c < sz; ++c)
    for (std::size_t r = 0; r < sz; ++r) b[r][c] = cols[c][r];
  auto inv = inverse(b);
  if (!inv) throw InternalError("column matrix of the calculus is singular");
  binv_ = std::move(*inv);
}

QMatrix Calculus::bc_coset(const NCPoly& x) const {
  if (!su_.counit(x).is_zero()) throw PreconditionError("coset requires an element of ker ε");
  return killing_.Q(x);
}

OneFormCoords Calculus::solve(const QMatrix& m) const {
  auto v = vec(m);
  OneFormCoords out(v.size());
  for (std::size_t r = 0; r < binv_.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero() && !binv_[r][c].is_zero()) out[r] += binv_[r][c] * v[c];
  return out;
}

OneFormCoords Calculus::coset_of_matrix(const QMatrix& m) const {
  auto full = solve(m);
  return OneFormCoords(full.end() - dim(), full.end());
}

OneFormCoords Calculus::coset(const NCPoly& x) const { return coset_of_matrix(bc_coset(x)); }

bool Calculus::in_ideal(const NCPoly& x) const {
  for (const auto& c : coset(x))
    if (!c.is_zero()) return false;
  return true;
}

const OneFormCoords& Calculus::coset_word(const Word& w) const {
  if (auto it = coset_memo_.find(w); it != coset_memo_.end()) return it->second;
  QMatrix m = killing_.Q_word(w);
  QScalar e = su_.counit(su_.word(w));
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= e;
  return coset_memo_.emplace(w, coset_of_matrix(m)).first->second;
}

Omega1 Calculus::basis(int b) const {
  Omega1 w = zero();
  w.coeff(b) = su_.one();
  return w;
}

Omega1 Calculus::from_coords(const NCPoly& f, const OneFormCoords& c) const {
  Omega1 w = zero();
  for (int b = 0; b < dim(); ++b)
    if (!c[static_cast<std::size_t>(b)].is_zero()) w.coeff(b) = c[static_cast<std::size_t>(b)] * f;
  return w;
}

Omega1 Calculus::from_tensor(const TensorPoly& t) const {
  Omega1 w = zero();
  for (const auto& [right, left] : t.by_right()) {
    const OneFormCoords& c = coset_word(right);
    for (int b = 0; b < dim(); ++b)
      if (!c[static_cast<std::size_t>(b)].is_zero()) w.coeff(b) += c[static_cast<std::size_t>(b)] * left;
  }
  return w;
}

// d f = f_1 ⊗ coset(f_2 - ε(f_2)); the constant part of a word drops out of coset_word.
Omega1 Calculus::ext_d(const NCPoly& f) const {
  if (!(f.spec() == su_.spec())) throw ContextMismatch("ext_d expects an element of " + su_.spec().name());
  Omega1 w = zero();
  for (const auto& [right, left] : su_.coproduct(f).by_right()) {
    if (right.empty()) continue;
    const OneFormCoords& c = coset_word(right);
    for (int b = 0; b < dim(); ++b)
      if (!c[static_cast<std::size_t>(b)].is_zero()) w.coeff(b) += c[static_cast<std::size_t>(b)] * left;
  }
  return w;
}

Omega1 Calculus::left_mul(const NCPoly& f, const Omega1& w) const {
  Omega1 out = zero();
  for (int b = 0; b < dim(); ++b)
    if (!w.coeff(b).is_zero()) out.coeff(b) = su_.multiply(f, w.coeff(b));
  return out;
}

const OneFormCoords& Calculus::act_word(int b, const Word& w) const {
  auto key = std::make_pair(b, w);
  if (auto it = act_memo_.find(key); it != act_memo_.end()) return it->second;
  QMatrix m = killing_.Q(reps_[static_cast<std::size_t>(b)]);
  for (char x : w) {
    Gen g = su_.decode(x);
    m = killing_.Q_extend(m, g.row, g.col);
  }
  return act_memo_.emplace(std::move(key), coset_of_matrix(m)).first->second;
}

// (f ⊗ v̄)·g = f g_1 ⊗ coset(v g_2)
Omega1 Calculus::right_act(const Omega1& w, const NCPoly& g) const {
  if (!(w.spec() == su_.spec()) || !(g.spec() == su_.spec()))
    throw ContextMismatch("right action expects elements of " + su_.spec().name());
  Omega1 out = zero();
  auto dg = su_.coproduct(g).by_right();
  for (int b = 0; b < dim(); ++b) {
    if (w.coeff(b).is_zero()) continue;
    for (const auto& [right, left] : dg) {
      const OneFormCoords& c = act_word(b, right);
      bool any = false;
      for (const auto& x : c) any = any || !x.is_zero();
      if (!any) continue;
      NCPoly fg = su_.multiply(w.coeff(b), left);
      for (int e = 0; e < dim(); ++e)
        if (!c[static_cast<std::size_t>(e)].is_zero()) out.coeff(e) += c[static_cast<std::size_t>(e)] * fg;
    }
  }
  return out;
}

Omega1 Calculus::project(const Omega1& w, FormBlock keep) const {
  Omega1 out = w;
  FormIndex ix = index();
  for (int b = 0; b < dim(); ++b)
    if (ix.block(b) != keep) out.coeff(b) = su_.zero();
  return out;
}

std::vector<NCPoly> Calculus::ideal_window(int degree_bound) const {
  std::vector<NCPoly> elems;
  Echelon ech(true);
  for (int d = 1; d <= degree_bound; ++d)
    for (const Word& w : su_.normal_words_of_degree(d)) {
      NCPoly x = su_.word(w) - su_.scalar(su_.counit(su_.word(w)));
      SparseVec v;
      const OneFormCoords& c = coset_word(w);
      for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) v.emplace(i, c[i]);
      ech.insert(std::move(v));
      elems.push_back(std::move(x));
    }
  std::vector<NCPoly> out;
  for (const auto& combo : ech.kernel()) {
    NCPoly p = su_.zero();
    for (const auto& [i, c] : combo) p += c * elems[i];
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace qflag
