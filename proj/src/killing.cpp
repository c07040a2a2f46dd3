#include "qflag/killing.hpp"

#include <functional>

namespace qflag {

namespace {

int idx4(int n, int i, int k, int j, int l) {
  return (((i - 1) * n + (k - 1)) * n + (j - 1)) * n + (l - 1);
}

}  // namespace

QMatrix qmatrix_add(const QMatrix& a, const QMatrix& b, const QScalar& cb) {
  QMatrix r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!b[i][j].is_zero()) r[i][j] += cb * b[i][j];
  return r;
}

bool qmatrix_is_zero(const QMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

Killing::Killing(const Algebra& su) : su_(su), n_(su.size()) {
  if (su.kind() != AlgebraKind::SpecialUnitaryGroup)
    throw PreconditionError("the Killing form is defined on C_q[SU_N] only");
  qn_ = su.q_pow(-1, n_);
  qn_inv_ = su.q_pow(1, n_);
  const int n = n_;
  rtab_.resize(static_cast<std::size_t>(n * n * n * n));
  rbtab_.resize(rtab_.size());
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int l = 1; l <= n; ++l) {
          rtab_[idx4(n, i, k, j, l)] = r_matrix(i, k, j, l, su.root());
          rbtab_[idx4(n, i, k, j, l)] = r_bar_matrix(i, k, j, l, su.root());
        }
}

QScalar Killing::R(int i, int k, int j, int l) const { return rtab_[idx4(n_, i, k, j, l)]; }
QScalar Killing::Rb(int i, int k, int j, int l) const { return rbtab_[idx4(n_, i, k, j, l)]; }

void Killing::check(const NCPoly& f) const {
  if (!(f.spec() == su_.spec()))
    throw ContextMismatch("expected an element of " + su_.spec().name() + ", got " + f.spec().name());
}

// r(u^a_b ⊗ y_1⋯y_m) = [T(y_m)⋯T(y_1)]_{ab},  T(u^k_l)_{ab} = q^{-1/N} R^{ka}_{bl}
// r(x_1⋯x_n ⊗ u^a_b) = [M(x_1)⋯M(x_n)]_{ab},  M(u^i_j)_{ab} = q^{-1/N} R^{ai}_{jb}

QScalar Killing::r_word(const Word& f, const Word& g) const {
  if (f.empty() || g.empty()) {
    QScalar e(1L);
    for (char c : f.empty() ? g : f) {
      Gen x = su_.decode(c);
      if (x.row != x.col) return QScalar();
    }
    return e;
  }
  std::string key = f + '\xff' + g;
  if (auto it = memo_left_.find(key); it != memo_left_.end()) return it->second;

  const int n = n_, m = static_cast<int>(g.size());
  Gen x1 = su_.decode(f[0]);
  Word rest = f.substr(1);
  std::vector<Gen> ys;
  for (char c : g) ys.push_back(su_.decode(c));

  // chain through y_m ... y_1 for the leading letter, tracking the split indices c_t
  QScalar total;
  std::vector<int> cs(static_cast<std::size_t>(m));
  std::function<void(int, int, const QScalar&)> walk = [&](int t, int a, const QScalar& acc) {
    // a: current row index of the T-product, processing y_t for t = m-1 down to 0
    if (t < 0) {
      if (a != x1.col) return;
      Word g2;
      for (int s = 0; s < m; ++s) g2.push_back(su_.code(cs[s], ys[s].col));
      QScalar tail = r_word(rest, g2);
      if (!tail.is_zero()) total += acc * tail;
      return;
    }
    for (int c = 1; c <= n; ++c) {
      for (int b = 1; b <= n; ++b) {
        QScalar v = R(ys[t].row, a, b, c);
        if (v.is_zero()) continue;
        cs[t] = c;
        walk(t - 1, b, acc * qn_ * v);
      }
    }
  };
  walk(m - 1, x1.row, QScalar(1L));
  memo_left_.emplace(std::move(key), total);
  return total;
}

QScalar Killing::r_right_word(const Word& f, const Word& g) const {
  if (f.empty() || g.empty()) return r_word(f, g);
  std::string key = f + '\xff' + g;
  if (auto it = memo_right_.find(key); it != memo_right_.end()) return it->second;

  // r(f ⊗ y g') = r(f_1 ⊗ g') r(f_2 ⊗ y)
  const int n = n_, len = static_cast<int>(f.size());
  Gen y = su_.decode(g[0]);
  Word rest = g.substr(1);
  std::vector<Gen> xs;
  for (char c : f) xs.push_back(su_.decode(c));

  QScalar total;
  std::vector<int> cs(static_cast<std::size_t>(len));
  std::function<void(int, int, const QScalar&)> walk = [&](int t, int a, const QScalar& acc) {
    if (t == len) {
      if (a != y.col) return;
      Word f1;
      for (int s = 0; s < len; ++s) f1.push_back(su_.code(xs[s].row, cs[s]));
      QScalar head = r_right_word(f1, rest);
      if (!head.is_zero()) total += acc * head;
      return;
    }
    for (int c = 1; c <= n; ++c)
      for (int b = 1; b <= n; ++b) {
        QScalar v = R(a, c, xs[t].col, b);
        if (v.is_zero()) continue;
        cs[t] = c;
        walk(t + 1, b, acc * qn_ * v);
      }
  };
  walk(0, y.row, QScalar(1L));
  memo_right_.emplace(std::move(key), total);
  return total;
}

// rbar(u^a_b ⊗ y_1⋯y_m) = [B(y_1)⋯B(y_m)]_{ab},  B(u^k_l)_{ab} = q^{1/N} Rbar^{ka}_{bl}
// rbar(f x ⊗ h) = rbar(x ⊗ h_1) rbar(f ⊗ h_2)
QScalar Killing::r_bar_word(const Word& f, const Word& g) const {
  if (f.empty() || g.empty()) return r_word(f, g);
  std::string key = f + '\xff' + g;
  if (auto it = memo_bar_.find(key); it != memo_bar_.end()) return it->second;

  const int n = n_, m = static_cast<int>(g.size());
  Gen xl = su_.decode(f.back());
  Word rest = f.substr(0, f.size() - 1);
  std::vector<Gen> ys;
  for (char c : g) ys.push_back(su_.decode(c));

  QScalar total;
  std::vector<int> cs(static_cast<std::size_t>(m));
  std::function<void(int, int, const QScalar&)> walk = [&](int t, int a, const QScalar& acc) {
    if (t == m) {
      if (a != xl.col) return;
      Word g2;
      for (int s = 0; s < m; ++s) g2.push_back(su_.code(cs[s], ys[s].col));
      QScalar tail = r_bar_word(rest, g2);
      if (!tail.is_zero()) total += acc * tail;
      return;
    }
    for (int c = 1; c <= n; ++c)
      for (int b = 1; b <= n; ++b) {
        QScalar v = Rb(ys[t].row, a, b, c);
        if (v.is_zero()) continue;
        cs[t] = c;
        walk(t + 1, b, acc * qn_inv_ * v);
      }
  };
  walk(0, xl.row, QScalar(1L));
  memo_bar_.emplace(std::move(key), total);
  return total;
}

namespace {

template <class F>
QScalar bilinear(const NCPoly& f, const NCPoly& g, F&& word_fn) {
  QScalar s;
  for (const auto& [wf, cf] : f.terms())
    for (const auto& [wg, cg] : g.terms()) {
      QScalar v = word_fn(wf, wg);
      if (!v.is_zero()) s += cf * cg * v;
    }
  return s;
}

}  // namespace

QScalar Killing::r(const NCPoly& f, const NCPoly& g) const {
  check(f);
  check(g);
  return bilinear(f, g, [&](const Word& a, const Word& b) { return r_word(a, b); });
}

QScalar Killing::r_right(const NCPoly& f, const NCPoly& g) const {
  check(f);
  check(g);
  return bilinear(f, g, [&](const Word& a, const Word& b) { return r_right_word(a, b); });
}

QScalar Killing::r_bar(const NCPoly& f, const NCPoly& g) const {
  check(f);
  check(g);
  return bilinear(f, g, [&](const Word& a, const Word& b) { return r_bar_word(a, b); });
}

// Q(h y) = Σ_a T(u^i_a) Q(h) M(u^a_j) for y = u^i_j, from expanding both r factors.
QMatrix Killing::Q_extend(const QMatrix& prev, int i, int j) const {
  const int n = n_;
  QMatrix out = zero_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n), su_.root());
  const QScalar q2 = qn_ * qn_;
  for (int a = 1; a <= n; ++a)
    // T(u^i_a)_{km} = q^{-1/N} R^{ik}_{ma},  M(u^a_j)_{pl} = q^{-1/N} R^{pa}_{jl}
    for (int k = 1; k <= n; ++k)
      for (int m = 1; m <= n; ++m) {
        QScalar t = R(i, k, m, a);
        if (t.is_zero()) continue;
        for (int p = 1; p <= n; ++p) {
          const QScalar& x = prev[m - 1][p - 1];
          if (x.is_zero()) continue;
          for (int l = 1; l <= n; ++l) {
            QScalar mm = R(p, a, j, l);
            if (mm.is_zero()) continue;
            out[k - 1][l - 1] += q2 * t * x * mm;
          }
        }
      }
  return out;
}

const QMatrix& Killing::Q_word(const Word& w) const {
  if (auto it = memo_q_.find(w); it != memo_q_.end()) return it->second;
  QMatrix out;
  if (w.empty()) {
    out = identity_matrix(static_cast<std::size_t>(n_), su_.root());
  } else {
    Gen y = su_.decode(w.back());
    out = Q_extend(Q_word(w.substr(0, w.size() - 1)), y.row, y.col);
  }
  return memo_q_.emplace(w, std::move(out)).first->second;
}

QMatrix Killing::Q(const NCPoly& h) const {
  check(h);
  const auto sz = static_cast<std::size_t>(n_);
  QMatrix out = zero_matrix(sz, sz, su_.root());
  for (const auto& [w, c] : h.terms()) out = qmatrix_add(out, Q_word(w), c);
  return out;
}

// 𝒬(h ⊗ g) = r(g_1 ⊗ h_1) r(h_2 ⊗ g_2)
QScalar Killing::killing_form(const NCPoly& h, const NCPoly& g) const {
  check(h);
  check(g);
  TensorPoly dh = su_.coproduct(h), dg = su_.coproduct(g);
  QScalar s;
  for (const auto& [hw, hc] : dh.terms())
    for (const auto& [gw, gc] : dg.terms()) {
      QScalar a = r_word(gw.first, hw.first);
      if (a.is_zero()) continue;
      QScalar b = r_word(hw.second, gw.second);
      if (b.is_zero()) continue;
      s += hc * gc * a * b;
    }
  return s;
}

QScalar Killing::closed_Q(QShape shape, const std::vector<int>& idx) const {
  static const std::size_t arity[] = {4, 4, 6, 6, 8};
  const int n = n_;
  if (idx.size() != arity[static_cast<int>(shape)])
    throw PreconditionError("wrong number of indices for closed form");
  for (int v : idx)
    if (v < 1 || v > n) throw PreconditionError("index out of range");
  const int k = idx[0], l = idx[1];
  QScalar s;
  switch (shape) {
    case QShape::Gen: {
      const int i = idx[2], j = idx[3];
      for (int z = 1; z <= n; ++z)
        for (int a = 1; a <= n; ++a) {
          QScalar x = R(i, k, z, a);
          if (x.is_zero()) continue;
          s += x * R(z, a, j, l);
        }
      return s * su_.q_pow(-2, n);
    }
    case QShape::SGen: {
      const int g = idx[2], h = idx[3];
      for (int a = 1; a <= n; ++a)
        for (int z = 1; z <= n; ++z) {
          QScalar x = Rb(a, k, z, h);
          if (x.is_zero()) continue;
          QScalar y = Rb(z, g, a, l);
          if (y.is_zero()) continue;
          s += su_.q_pow(2 * (a - h) * n + 2, n) * x * y;
        }
      return s;
    }
    case QShape::GenGen: {
      const int i = idx[2], j = idx[3], r = idx[4], ss = idx[5];
      for (int z = 1; z <= n; ++z)
        for (int b = 1; b <= n; ++b) {
          QScalar x1 = R(r, k, z, b);
          if (x1.is_zero()) continue;
          for (int y = 1; y <= n; ++y)
            for (int a = 1; a <= n; ++a) {
              QScalar x2 = R(i, z, y, a);
              if (x2.is_zero()) continue;
              for (int x = 1; x <= n; ++x) {
                QScalar x3 = R(y, a, j, x);
                if (x3.is_zero()) continue;
                QScalar x4 = R(x, b, ss, l);
                if (x4.is_zero()) continue;
                s += x1 * x2 * x3 * x4;
              }
            }
        }
      return s * su_.q_pow(-4, n);
    }
    case QShape::GenSGen: {
      const int i = idx[2], j = idx[3], g = idx[4], h = idx[5];
      for (int b = 1; b <= n; ++b)
        for (int z = 1; z <= n; ++z) {
          QScalar x1 = Rb(b, k, z, h);
          if (x1.is_zero()) continue;
          for (int y = 1; y <= n; ++y)
            for (int a = 1; a <= n; ++a) {
              QScalar x2 = R(i, z, y, a);
              if (x2.is_zero()) continue;
              for (int x = 1; x <= n; ++x) {
                QScalar x3 = R(y, a, j, x);
                if (x3.is_zero()) continue;
                QScalar x4 = Rb(x, g, b, l);
                if (x4.is_zero()) continue;
                s += su_.q_pow(2 * (b - h), 1) * x1 * x2 * x3 * x4;
              }
            }
        }
      return s;
    }
    case QShape::GenSGenGen: {
      const int i = idx[2], j = idx[3], g = idx[4], h = idx[5], r = idx[6], ss = idx[7];
      for (int z = 1; z <= n; ++z)
        for (int c = 1; c <= n; ++c) {
          QScalar x1 = R(r, k, z, c);
          if (x1.is_zero()) continue;
          for (int b = 1; b <= n; ++b)
            for (int y = 1; y <= n; ++y) {
              QScalar x2 = Rb(b, z, y, h);
              if (x2.is_zero()) continue;
              for (int x = 1; x <= n; ++x)
                for (int a = 1; a <= n; ++a) {
                  QScalar x3 = R(i, y, x, a);
                  if (x3.is_zero()) continue;
                  for (int w = 1; w <= n; ++w) {
                    QScalar x4 = R(x, a, j, w);
                    if (x4.is_zero()) continue;
                    for (int v = 1; v <= n; ++v) {
                      QScalar x5 = Rb(w, g, b, v);
                      if (x5.is_zero()) continue;
                      QScalar x6 = R(v, c, ss, l);
                      if (x6.is_zero()) continue;
                      s += su_.q_pow(2 * (b - h) * n - 2, n) * x1 * x2 * x3 * x4 * x5 * x6;
                    }
                  }
                }
            }
        }
      return s;
    }
  }
  return s;
}

// Ad_R(h) = h_2 ⊗ S(h_1) h_3
TensorPoly Killing::ad_r(const NCPoly& f) const {
  check(f);
  TensorPoly out(su_.spec(), su_.spec());
  std::unordered_map<Word, NCPoly> anti;
  std::unordered_map<Word, TensorPoly> second;
  const TensorPoly df = su_.coproduct(f);
  for (const auto& [w, c] : df.terms()) {
    const auto& [w1, wrest] = w;
    auto ai = anti.find(w1);
    if (ai == anti.end()) ai = anti.emplace(w1, su_.antipode(su_.word(w1))).first;
    auto si = second.find(wrest);
    if (si == second.end()) si = second.emplace(wrest, su_.coproduct(su_.word(wrest))).first;
    for (const auto& [w23, c23] : si->second.terms()) {
      NCPoly right = su_.multiply(ai->second, su_.word(w23.second));
      for (const auto& [rw, rc] : right.terms()) out.add(w23.first, rw, c * c23 * rc);
    }
  }
  return out;
}

}  // namespace qflag
