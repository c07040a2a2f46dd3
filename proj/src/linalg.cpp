#include "qflag/linalg.hpp"

namespace qflag {

DenseMatrix identity_matrix(std::size_t n, int root) {
  DenseMatrix m = zero_matrix(n, n, root);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = QScalar::rational(1, root);
  return m;
}

DenseMatrix zero_matrix(std::size_t rows, std::size_t cols, int root) {
  return DenseMatrix(rows, std::vector<QScalar>(cols, QScalar::rational(0, root)));
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  DenseMatrix r(n, std::vector<QScalar>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[t][j].is_zero()) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

namespace {

// In-place Bareiss forward elimination; returns pivot columns in row order.
std::vector<std::size_t> bareiss(DenseMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  QScalar prev(1L);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const std::size_t width = m[r].size();
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < width; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = QScalar();
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(DenseMatrix m) {
  if (m.empty()) return 0;
  return bareiss(m, m[0].size()).size();
}

std::optional<DenseMatrix> inverse(const DenseMatrix& a) {
  const std::size_t n = a.size();
  int root = 0;
  for (const auto& row : a)
    for (const auto& x : row)
      if (x.root() != 0) root = x.root();
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = a[i];
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(QScalar::rational(i == j ? 1 : 0, root));
  }
  auto piv = bareiss(m, n);
  if (piv.size() < n) return std::nullopt;
  for (std::size_t i = n; i-- > 0;) {
    QScalar inv = m[i][i].inverse();
    for (auto& x : m[i]) x = x * inv;
    for (std::size_t k = 0; k < i; ++k) {
      if (m[k][i].is_zero()) continue;
      QScalar f = m[k][i];
      for (std::size_t j = i; j < 2 * n; ++j) m[k][j] -= f * m[i][j];
    }
  }
  DenseMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) r[i].assign(m[i].begin() + static_cast<long>(n), m[i].end());
  return r;
}

void axpy(SparseVec& y, const QScalar& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * v);
    } else {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

void Echelon::eliminate(SparseVec& v, SparseVec* combo) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    QScalar c = -it->second;
    axpy(v, c, row->second.v);
    if (combo) axpy(*combo, c, row->second.combo);
    it = v.lower_bound(col);
  }
}

SparseVec Echelon::reduce(SparseVec v) const {
  eliminate(v, nullptr);
  return v;
}

bool Echelon::insert(SparseVec v) {
  SparseVec combo;
  if (track_) combo.emplace(inserted_, QScalar(1L));
  ++inserted_;
  eliminate(v, track_ ? &combo : nullptr);
  if (v.empty()) {
    if (track_) kernel_.push_back(std::move(combo));
    return false;
  }
  QScalar inv = v.begin()->second.inverse();
  for (auto& [k, x] : v) x = x * inv;
  if (track_)
    for (auto& [k, x] : combo) x = x * inv;
  std::size_t p = v.begin()->first;
  rows_.emplace(p, Row{std::move(v), std::move(combo)});
  return true;
}

std::map<std::size_t, SparseVec> Echelon::reduced_rows() const {
  std::map<std::size_t, SparseVec> out;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec v = it->second.v;
    for (auto e = std::next(v.begin()); e != v.end();) {
      auto done = out.find(e->first);
      if (done == out.end()) {
        ++e;
        continue;
      }
      std::size_t col = e->first;
      QScalar c = -e->second;
      axpy(v, c, done->second);
      e = v.upper_bound(col);
    }
    out.emplace(it->first, std::move(v));
  }
  return out;
}

}  // namespace qflag
