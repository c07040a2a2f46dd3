#include "qflag/ncalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qflag/linalg.hpp"

namespace qflag {

std::string AlgebraSpec::name() const {
  std::string k = kind == AlgebraKind::MatrixBialgebra ? "M"
                  : kind == AlgebraKind::UnitaryGroup  ? "U"
                                                       : "SU";
  return "C_q[" + k + "_" + std::to_string(size) + "]";
}

Gen Gen::decode(char c, int size) {
  int v = static_cast<unsigned char>(c);
  if (v == size * size) return inv();
  return u(v / size + 1, v % size + 1);
}

// ---------------------------------------------------------------- NCPoly

NCPoly NCPoly::constant(AlgebraSpec spec, const QScalar& c) {
  NCPoly p(spec);
  p.add(Word(), c);
  return p;
}

NCPoly NCPoly::monomial(AlgebraSpec spec, Word w, const QScalar& c) {
  NCPoly p(spec);
  p.add(w, c);
  return p;
}

int NCPoly::degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return terms_.empty() ? -1 : d;
}

QScalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QScalar() : it->second;
}

void NCPoly::add(const Word& w, const QScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c.with_root(c.root() == 0 ? 0 : spec_.root));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void NCPoly::check(const NCPoly& o) const {
  if (!(spec_ == o.spec_)) throw ContextMismatch(spec_.name() + " vs " + o.spec_.name());
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  check(o);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  check(o);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

// ---------------------------------------------------------------- TensorPoly

TensorPoly TensorPoly::simple(const NCPoly& a, const NCPoly& b) {
  TensorPoly t(a.spec(), b.spec());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) t.add(wa, wb, ca * cb);
  return t;
}

void TensorPoly::add(const Word& l, const Word& r, const QScalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(l, r);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  if (!(left_ == o.left_) || !(right_ == o.right_)) throw ContextMismatch("tensor legs differ");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  if (!(left_ == o.left_) || !(right_ == o.right_)) throw ContextMismatch("tensor legs differ");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

std::map<Word, NCPoly, WordLess> TensorPoly::by_right() const {
  std::map<Word, NCPoly, WordLess> out;
  for (const auto& [k, c] : terms_) {
    auto it = out.try_emplace(k.second, NCPoly(left_)).first;
    it->second.add(k.first, c);
  }
  return out;
}

std::map<Word, NCPoly, WordLess> TensorPoly::by_left() const {
  std::map<Word, NCPoly, WordLess> out;
  for (const auto& [k, c] : terms_) {
    auto it = out.try_emplace(k.first, NCPoly(right_)).first;
    it->second.add(k.second, c);
  }
  return out;
}

// ---------------------------------------------------------------- R-matrix

QScalar r_matrix(int i, int k, int j, int l, int root) {
  QScalar out = QScalar::rational(0, root);
  if (i == l && k == j) out += i == k ? QScalar::q(root) : QScalar::rational(1, root);
  if (k > i && i == j && k == l) out += QScalar::nu(root);
  return out;
}

QScalar r_bar_matrix(int i, int k, int j, int l, int root) {
  QScalar out = QScalar::rational(0, root);
  if (i == l && k == j) out += i == k ? QScalar::q_power(-1, 1, root) : QScalar::rational(1, root);
  if (k > i && i == j && k == l) out -= QScalar::nu(root);
  return out;
}

std::vector<std::pair<std::vector<int>, int>> permutations_with_length(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    int inv = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)]) ++inv;
    out.emplace_back(p, inv);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(AlgebraSpec spec) : spec_(spec) {
  if (spec.size < 1) throw PreconditionError("algebra size must be positive");
  if (spec.root < 1) throw IncompatibleRoot("root order must be positive");
  rules_.context = spec;
  const int n = spec.size;
  for (const auto& [perm, len] : permutations_with_length(n)) {
    Word w;
    for (int r = 0; r < n; ++r) w.push_back(code(r + 1, perm[static_cast<std::size_t>(r)] + 1));
    det_terms_.emplace_back(w, (-QScalar::q(spec.root)).pow(len));
  }
  derive_rules();
}

NCPoly Algebra::gen(int i, int j) const {
  if (i < 1 || j < 1 || i > size() || j > size())
    throw PreconditionError("generator index out of range for " + spec_.name());
  return word(Word(1, code(i, j)));
}

NCPoly Algebra::detinv() const {
  if (kind() != AlgebraKind::UnitaryGroup) throw PreconditionError("det^-1 only exists in unitary contexts");
  return word(Word(1, detinv_code()));
}

void Algebra::derive_rules() {
  const int n = size();
  const int g = n * n;
  // columns: unsorted pairs in descending deg-lex order, then sorted pairs
  std::vector<Word> cols;
  for (int x = g - 1; x >= 0; --x)
    for (int y = x - 1; y >= 0; --y) cols.push_back(Word{static_cast<char>(x), static_cast<char>(y)});
  std::sort(cols.begin(), cols.end(), [](const Word& a, const Word& b) { return WordLess()(b, a); });
  const std::size_t unsorted = cols.size();
  for (int x = 0; x < g; ++x)
    for (int y = x; y < g; ++y) cols.push_back(Word{static_cast<char>(x), static_cast<char>(y)});
  std::map<Word, std::size_t> index;
  for (std::size_t c = 0; c < cols.size(); ++c) index[cols[c]] = c;

  const int root = spec_.root;
  Echelon ech;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          SparseVec v;
          auto put = [&](const Word& w, const QScalar& s) {
            if (s.is_zero()) return;
            SparseVec t{{index.at(w), s}};
            axpy(v, QScalar(1L), t);
          };
          for (int w = 1; w <= n; ++w)
            for (int x = 1; x <= n; ++x)
              put(Word{code(w, b), code(x, d)}, r_matrix(a, c, w, x, root));
          for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z)
              put(Word{code(a, y), code(c, z)}, -r_matrix(y, z, b, d, root));
          if (!v.empty()) ech.insert(std::move(v));
        }
  auto rows = ech.reduced_rows();
  if (rows.size() != unsorted) throw InternalError("relation rank differs from number of unsorted pairs");
  for (const auto& [pivot, row] : rows) {
    if (pivot >= unsorted) throw InternalError("relation among sorted words");
    const Word& lead = cols[pivot];
    NCPoly rep(spec_);
    for (const auto& [col, coef] : row) {
      if (col == pivot) continue;
      if (col < unsorted) throw InternalError("swap rule not reducible to sorted words");
      if (!WordLess()(cols[col], lead)) throw InternalError("swap rule not decreasing");
      rep.add(cols[col], -coef);
    }
    rules_.swap_rules.emplace(std::make_pair(static_cast<int>(lead[0]), static_cast<int>(lead[1])), rep);
  }
  if (kind() != AlgebraKind::MatrixBialgebra) {
    Word diag;
    for (int i = 1; i <= n; ++i) diag.push_back(code(i, i));
    NCPoly rep = one();
    for (const auto& [w, c] : det_terms_)
      if (w != diag) rep.add(w, -c);
    rules_.det_rule = std::make_pair(diag, rep);
  }
}

bool Algebra::is_sorted_word(const Word& w) const {
  const char di = detinv_code();
  std::size_t k = 0;
  while (k < w.size() && w[k] == di) ++k;
  for (std::size_t i = k; i + 1 < w.size(); ++i) {
    if (w[i + 1] == di) return false;
    if (static_cast<unsigned char>(w[i]) > static_cast<unsigned char>(w[i + 1])) return false;
  }
  return true;
}

const Algebra::TermList& Algebra::insert(const Word& v, char x) const {
  Word key = v;
  key.push_back(x);
  if (auto it = insert_memo_.find(key); it != insert_memo_.end()) return it->second;
  const char di = detinv_code();
  TermList out;
  if (x == di && kind() == AlgebraKind::UnitaryGroup) {
    out.emplace_back(Word(1, di) + v, QScalar(1L));
  } else if (v.empty() || v.back() == di ||
             static_cast<unsigned char>(v.back()) <= static_cast<unsigned char>(x)) {
    out.emplace_back(key, QScalar(1L));
  } else {
    const char y = v.back();
    const Word vp = v.substr(0, v.size() - 1);
    const NCPoly& rule = rules_.swap_rules.at({static_cast<int>(y), static_cast<int>(x)});
    std::map<Word, QScalar, WordLess> acc;
    for (const auto& [pr, c] : rule.terms()) {
      const TermList first = insert(vp, pr[0]);
      for (const auto& [u, cu] : first) {
        const TermList second = insert(u, pr[1]);
        for (const auto& [w2, cw] : second) acc[w2] += c * cu * cw;
      }
    }
    for (auto& [w, c] : acc)
      if (!c.is_zero()) out.emplace_back(w, c);
  }
  return insert_memo_.emplace(std::move(key), std::move(out)).first->second;
}

void Algebra::accumulate_sorted(const Word& w, const QScalar& c, std::map<Word, QScalar, WordLess>& out) const {
  const char di = detinv_code();
  for (char x : w) {
    if (x == di && kind() != AlgebraKind::UnitaryGroup)
      throw PreconditionError("det^-1 only exists in unitary contexts");
    if (static_cast<unsigned char>(x) > static_cast<unsigned char>(di))
      throw PreconditionError("generator out of range for " + spec_.name());
  }
  if (is_sorted_word(w)) {
    out[w] += c;
    return;
  }
  TermList cur{{Word(), c}};
  for (char x : w) {
    std::map<Word, QScalar, WordLess> next;
    for (const auto& [v, cv] : cur)
      for (const auto& [u, cu] : insert(v, x)) next[u] += cv * cu;
    cur.clear();
    for (auto& [u, cu] : next)
      if (!cu.is_zero()) cur.emplace_back(u, cu);
  }
  for (const auto& [u, cu] : cur) out[u] += cu;
}

NCPoly Algebra::sorted_form(const NCPoly& f) const {
  if (!(f.spec() == spec_)) throw ContextMismatch(f.spec().name() + " used in " + spec_.name());
  std::map<Word, QScalar, WordLess> acc;
  for (const auto& [w, c] : f.terms()) accumulate_sorted(w, c, acc);
  NCPoly out(spec_);
  for (const auto& [w, c] : acc) out.add(w, c);
  return out;
}

bool Algebra::dominates_det(const Word& u) const {
  for (int i = 1; i <= size(); ++i)
    if (u.find(code(i, i)) == Word::npos) return false;
  return true;
}

Word Algebra::strip_det(const Word& u) const {
  Word out = u;
  for (int i = 1; i <= size(); ++i) out.erase(out.find(code(i, i)), 1);
  return out;
}

const NCPoly& Algebra::reduce_sorted(const Word& w) const {
  if (auto it = reduce_memo_.find(w); it != reduce_memo_.end()) return it->second;
  const char di = detinv_code();
  std::size_t k = 0;
  if (kind() == AlgebraKind::UnitaryGroup)
    while (k < w.size() && w[k] == di) ++k;
  const Word u = w.substr(k);
  NCPoly out(spec_);
  const bool reducible = kind() == AlgebraKind::SpecialUnitaryGroup
                             ? dominates_det(u)
                             : kind() == AlgebraKind::UnitaryGroup && k > 0 && dominates_det(u);
  if (!reducible) {
    out.add(w, QScalar(1L));
  } else {
    // x^{u'} det = c x^u + lower terms in the PBW order with diagonal leading
    const Word up = strip_det(u);
    std::map<Word, QScalar, WordLess> prod;
    for (const auto& [dw, dc] : det_terms_) accumulate_sorted(up + dw, dc, prod);
    auto lead = prod.find(u);
    if (lead == prod.end() || lead->second.is_zero()) throw InternalError("det leading term vanished");
    const QScalar cinv = lead->second.inverse();
    const Word prefix(k, di);
    const Word lower_prefix = k > 0 ? Word(k - 1, di) : Word();
    out += reduce_sorted(lower_prefix + up);
    for (const auto& [t, ct] : prod) {
      if (t == u || ct.is_zero()) continue;
      if (!(t > u)) throw InternalError("det reduction not decreasing");
      NCPoly r = reduce_sorted(prefix + t);
      out -= ct * r;
    }
    out *= cinv;
  }
  return reduce_memo_.emplace(w, std::move(out)).first->second;
}

NCPoly Algebra::finish(const NCPoly& sorted) const {
  if (kind() == AlgebraKind::MatrixBialgebra) return sorted;
  NCPoly out(spec_);
  for (const auto& [w, c] : sorted.terms()) {
    const NCPoly& r = reduce_sorted(w);
    for (const auto& [rw, rc] : r.terms()) out.add(rw, c * rc);
  }
  return out;
}

NCPoly Algebra::normal_form(const NCPoly& f) const { return finish(sorted_form(f)); }

NCPoly Algebra::multiply(const NCPoly& f, const NCPoly& g) const {
  if (!(f.spec() == spec_) || !(g.spec() == spec_)) throw ContextMismatch("multiply across contexts");
  std::map<Word, QScalar, WordLess> acc;
  for (const auto& [wf, cf] : f.terms())
    for (const auto& [wg, cg] : g.terms()) accumulate_sorted(wf + wg, cf * cg, acc);
  NCPoly sorted(spec_);
  for (const auto& [w, c] : acc) sorted.add(w, c);
  return finish(sorted);
}

NCPoly Algebra::multiply(std::initializer_list<NCPoly> fs) const {
  NCPoly acc = one();
  for (const auto& f : fs) acc = multiply(acc, f);
  return acc;
}

NCPoly Algebra::power(const NCPoly& f, int k) const {
  if (k < 0) throw PreconditionError("negative power");
  NCPoly acc = one();
  for (int i = 0; i < k; ++i) acc = multiply(acc, f);
  return acc;
}

bool Algebra::equals(const NCPoly& f, const NCPoly& g) const {
  if (!(f.spec() == spec_) || !(g.spec() == spec_)) throw ContextMismatch("equals across contexts");
  if (kind() == AlgebraKind::UnitaryGroup) return localized_equals(*this, f, g);
  return normal_form(f - g).is_zero();
}

NCPoly Algebra::quantum_determinant() const {
  NCPoly d(spec_);
  for (const auto& [w, c] : det_terms_) d.add(w, c);
  return normal_form(d);
}

NCPoly Algebra::quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols) const {
  if (rows.size() != cols.size()) throw PreconditionError("minor needs equally many rows and columns");
  NCPoly m(spec_);
  const QScalar mq = -QScalar::q(root());
  for (const auto& [perm, len] : permutations_with_length(static_cast<int>(rows.size()))) {
    Word w;
    for (std::size_t r = 0; r < rows.size(); ++r)
      w.push_back(code(rows[r], cols[static_cast<std::size_t>(perm[r])]));
    m.add(w, mq.pow(len));
  }
  return normal_form(m);
}

QScalar Algebra::counit(const NCPoly& f) const {
  QScalar out = QScalar::rational(0, root());
  const char di = detinv_code();
  for (const auto& [w, c] : f.terms()) {
    bool alive = true;
    for (char x : w) {
      if (x == di) continue;
      Gen g = decode(x);
      if (g.row != g.col) {
        alive = false;
        break;
      }
    }
    if (alive) out += c;
  }
  return out;
}

TensorPoly Algebra::coproduct(const NCPoly& f) const {
  if (!(f.spec() == spec_)) throw ContextMismatch("coproduct across contexts");
  TensorPoly out(spec_, spec_);
  for (const auto& [w, c] : f.terms())
    for (const auto& [lr, v] : coproduct_word(w).terms()) out.add(lr.first, lr.second, c * v);
  return out;
}

const TensorPoly& Algebra::coproduct_word(const Word& w) const {
  if (auto it = coproduct_memo_.find(w); it != coproduct_memo_.end()) return it->second;
  const char di = detinv_code();
  std::map<std::pair<Word, Word>, QScalar, WordPairLess> cur{{{Word(), Word()}, QScalar(1L)}};
  for (char x : w) {
    std::map<std::pair<Word, Word>, QScalar, WordPairLess> next;
    for (const auto& [lr, cv] : cur) {
      if (x == di) {
        for (const auto& [l, cl] : insert(lr.first, di))
          for (const auto& [r, cr] : insert(lr.second, di)) next[{l, r}] += cv * cl * cr;
        continue;
      }
      Gen g = decode(x);
      for (int k = 1; k <= size(); ++k) {
        const TermList& ls = insert(lr.first, code(g.row, k));
        const TermList rs = insert(lr.second, code(k, g.col));
        for (const auto& [l, cl] : ls)
          for (const auto& [r, cr] : rs) next[{l, r}] += cv * cl * cr;
      }
    }
    cur.clear();
    for (auto& [k, v] : next)
      if (!v.is_zero()) cur.emplace(k, v);
  }
  TensorPoly out(spec_, spec_);
  for (const auto& [lr, c] : cur) {
    const NCPoly& l = kind() == AlgebraKind::MatrixBialgebra ? word(lr.first) : reduce_sorted(lr.first);
    const NCPoly& r = kind() == AlgebraKind::MatrixBialgebra ? word(lr.second) : reduce_sorted(lr.second);
    for (const auto& [lw, lc] : l.terms())
      for (const auto& [rw, rc] : r.terms()) out.add(lw, rw, c * lc * rc);
  }
  return coproduct_memo_.emplace(w, std::move(out)).first->second;
}

NCPoly Algebra::star(int i, int j) const {
  std::vector<int> rows, cols;
  for (int t = 1; t <= size(); ++t) {
    if (t != i) rows.push_back(t);
    if (t != j) cols.push_back(t);
  }
  NCPoly m = quantum_minor(rows, cols);
  return (-QScalar::q(root())).pow(j - i) * m;
}

const NCPoly& Algebra::antipode_gen(char c) const {
  if (auto it = antipode_memo_.find(c); it != antipode_memo_.end()) return it->second;
  NCPoly out(spec_);
  if (c == detinv_code()) {
    out = quantum_determinant();
  } else {
    Gen g = decode(c);
    out = star(g.col, g.row);
    if (kind() == AlgebraKind::UnitaryGroup) out = multiply(detinv(), out);
  }
  return antipode_memo_.emplace(c, std::move(out)).first->second;
}

NCPoly Algebra::antipode(const NCPoly& f) const {
  if (kind() == AlgebraKind::MatrixBialgebra) throw PreconditionError("the matrix bialgebra has no antipode");
  if (!(f.spec() == spec_)) throw ContextMismatch("antipode across contexts");
  NCPoly out(spec_);
  for (const auto& [w, c] : f.terms()) {
    NCPoly acc = scalar(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = multiply(acc, antipode_gen(*it));
    out += acc;
  }
  return out;
}

std::vector<Word> Algebra::normal_words_of_degree(int d) const {
  std::vector<Word> out;
  const int g = size() * size();
  Word cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == d) {
      if (kind() != AlgebraKind::SpecialUnitaryGroup || !dominates_det(cur)) out.push_back(cur);
      return;
    }
    for (int x = start; x < g; ++x) {
      cur.push_back(static_cast<char>(x));
      rec(x);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------- strategy rewriting

namespace {

using TermMap = std::map<Word, QScalar, WordLess>;

struct Rewriter {
  const Algebra& alg;
  Strategy strategy;
  std::map<Word, TermMap> det_products;

  bool swappable(char x, char y) const {
    const char di = alg.detinv_code();
    if (x == di) return false;
    if (y == di) return true;
    return static_cast<unsigned char>(x) > static_cast<unsigned char>(y);
  }

  // one swap step on the chosen term; false when every word is sorted
  bool swap_step(TermMap& t) const {
    auto visit = [&](const Word& w) -> long {
      if (strategy == Strategy::Leftmost) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
          if (swappable(w[i], w[i + 1])) return static_cast<long>(i);
      } else {
        for (std::size_t i = w.size(); i-- > 1;)
          if (swappable(w[i - 1], w[i])) return static_cast<long>(i - 1);
      }
      return -1;
    };
    auto apply = [&](const Word& w, const QScalar& c, long pos) {
      const auto p = static_cast<std::size_t>(pos);
      const Word a = w.substr(0, p), b = w.substr(p + 2);
      const char x = w[p], y = w[p + 1];
      if (y == alg.detinv_code()) {
        t[a + y + x + b] += c;
      } else {
        for (const auto& [pr, rc] : alg.rules().swap_rules.at({x, y}).terms()) t[a + pr + b] += c * rc;
      }
    };
    auto pick = [&](auto begin, auto end) {
      for (auto it = begin; it != end; ++it) {
        long pos = visit(it->first);
        if (pos < 0) continue;
        const Word w = it->first;
        const QScalar c = it->second;
        t.erase(w);
        apply(w, c, pos);
        return true;
      }
      return false;
    };
    bool done = strategy == Strategy::Leftmost ? pick(t.begin(), t.end()) : pick(t.rbegin(), t.rend());
    for (auto it = t.begin(); it != t.end();) it = it->second.is_zero() ? t.erase(it) : std::next(it);
    return done;
  }

  void sort_all(TermMap& t) const {
    while (swap_step(t)) {
    }
  }

  bool det_step(TermMap& t) {
    const AlgebraKind kind = alg.kind();
    if (kind == AlgebraKind::MatrixBialgebra) return false;
    const char di = alg.detinv_code();
    const Word& diag = alg.rules().det_rule->first;
    auto candidate = [&](const Word& w) {
      std::size_t k = 0;
      while (k < w.size() && w[k] == di) ++k;
      if (kind == AlgebraKind::UnitaryGroup && k == 0) return false;
      Word u = w.substr(k);
      for (char d : diag)
        if (u.find(d) == Word::npos) return false;
      return true;
    };
    auto pick = [&](auto begin, auto end) -> std::optional<Word> {
      for (auto it = begin; it != end; ++it)
        if (candidate(it->first)) return it->first;
      return std::nullopt;
    };
    auto chosen = strategy == Strategy::Leftmost ? pick(t.begin(), t.end()) : pick(t.rbegin(), t.rend());
    if (!chosen) return false;
    const Word w = *chosen;
    const QScalar c = t[w];
    t.erase(w);
    std::size_t k = 0;
    while (k < w.size() && w[k] == di) ++k;
    const Word u = w.substr(k);
    Word up = u;
    for (char d : diag) up.erase(up.find(d), 1);
    auto found = det_products.find(up);
    if (found == det_products.end()) {
      TermMap prod;
      for (const auto& [dw, dc] : alg.rules().det_rule->second.terms())
        if (!dw.empty()) prod[up + dw] -= dc;
      prod[up + diag] += QScalar(1L);
      sort_all(prod);
      found = det_products.emplace(up, std::move(prod)).first;
    }
    const TermMap& prod = found->second;
    const QScalar lead = prod.at(u);
    const QScalar f = c / lead;
    t[Word(k > 0 ? k - 1 : 0, di) + up] += f;
    for (const auto& [pw, pc] : prod)
      if (pw != u) t[Word(k, di) + pw] -= f * pc;
    for (auto it = t.begin(); it != t.end();) it = it->second.is_zero() ? t.erase(it) : std::next(it);
    return true;
  }
};

}  // namespace

NCPoly Algebra::normal_form(const NCPoly& f, Strategy s) const {
  if (!(f.spec() == spec_)) throw ContextMismatch("normal form across contexts");
  Rewriter rw{*this, s, {}};
  TermMap t(f.terms().begin(), f.terms().end());
  do {
    rw.sort_all(t);
  } while (rw.det_step(t));
  NCPoly out(spec_);
  for (const auto& [w, c] : t) out.add(w, c);
  return out;
}

// ---------------------------------------------------------------- localization and oracle

bool localized_equals(const Algebra& u, const NCPoly& f, const NCPoly& g) {
  const char di = u.detinv_code();
  auto split = [&](const NCPoly& p, int& kmax) {
    NCPoly s = u.sorted_form(p);
    kmax = 0;
    for (const auto& [w, c] : s.terms())
      kmax = std::max(kmax, static_cast<int>(std::count(w.begin(), w.end(), di)));
    return s;
  };
  int kf = 0, kg = 0;
  NCPoly sf = split(f, kf), sg = split(g, kg);
  auto sorted_mul = [&](const NCPoly& a, const NCPoly& b) {
    NCPoly cat(u.spec());
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms()) cat.add(wa + wb, ca * cb);
    return u.sorted_form(cat);
  };
  std::vector<NCPoly> det_pow{u.one()};
  NCPoly det_raw(u.spec());
  {
    for (const auto& [perm, len] : permutations_with_length(u.size())) {
      Word w;
      for (int r = 0; r < u.size(); ++r) w.push_back(u.code(r + 1, perm[static_cast<std::size_t>(r)] + 1));
      det_raw.add(w, (-QScalar::q(u.root())).pow(len));
    }
  }
  const int kmax = std::max(kf, kg);
  while (static_cast<int>(det_pow.size()) <= kmax) det_pow.push_back(sorted_mul(det_pow.back(), det_raw));
  auto clear = [&](const NCPoly& s, int k) {
    NCPoly out(u.spec());
    for (const auto& [w, c] : s.terms()) {
      const int kt = static_cast<int>(std::count(w.begin(), w.end(), di));
      NCPoly rest = u.word(w.substr(static_cast<std::size_t>(kt)));
      out += c * sorted_mul(det_pow[static_cast<std::size_t>(k - kt)], rest);
    }
    return out;
  };
  NCPoly pf = clear(sf, kf), pg = clear(sg, kg);
  return sorted_mul(pf, det_pow[static_cast<std::size_t>(kg)]) == sorted_mul(pg, det_pow[static_cast<std::size_t>(kf)]);
}

struct IdealOracle::Cache {
  std::map<Word, std::size_t> columns;
  Echelon ech;
  std::size_t col(const Word& w) {
    auto it = columns.find(w);
    if (it != columns.end()) return it->second;
    std::size_t c = columns.size();
    columns.emplace(w, c);
    return c;
  }
};

IdealOracle::IdealOracle(const Algebra& mat) : mat_(mat) {
  if (mat.kind() != AlgebraKind::MatrixBialgebra) throw PreconditionError("oracle works in the matrix bialgebra");
}

bool IdealOracle::contains(const NCPoly& f, int bound) {
  NCPoly nf = mat_.normal_form(f);
  if (nf.degree() > bound) throw PreconditionError("degree bound below the degree of the input");
  auto& slot = caches_[bound];
  if (!slot) {
    slot = std::make_shared<Cache>();
    const int n = mat_.size();
    NCPoly gen = mat_.quantum_determinant() - mat_.one();
    std::vector<Word> monos;
    for (int d = 0; d + n <= bound; ++d)
      for (auto& w : mat_.normal_words_of_degree(d)) monos.push_back(w);
    for (const auto& m1 : monos)
      for (const auto& m2 : monos) {
        if (static_cast<int>(m1.size() + m2.size()) + n > bound) continue;
        NCPoly row = mat_.multiply({mat_.word(m1), gen, mat_.word(m2)});
        SparseVec v;
        for (const auto& [w, c] : row.terms()) v.emplace(slot->col(w), c);
        slot->ech.insert(std::move(v));
      }
  }
  SparseVec v;
  for (const auto& [w, c] : nf.terms()) {
    auto it = slot->columns.find(w);
    if (it == slot->columns.end()) return false;
    v.emplace(it->second, c);
  }
  return slot->ech.contains(v);
}

bool oracle_ideal_membership(const Algebra& mat, const NCPoly& f, int bound) {
  IdealOracle o(mat);
  return o.contains(f, bound);
}

}  // namespace qflag
