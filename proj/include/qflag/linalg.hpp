#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qflag/qfield.hpp"

namespace qflag {

using DenseMatrix = std::vector<std::vector<QScalar>>;
using SparseVec = std::map<std::size_t, QScalar>;

DenseMatrix identity_matrix(std::size_t n, int root);
DenseMatrix zero_matrix(std::size_t rows, std::size_t cols, int root);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

// Bareiss fraction-free elimination with first-nonzero pivoting.
std::size_t rank(DenseMatrix m);
// Inverse of a square matrix; nullopt when singular.
std::optional<DenseMatrix> inverse(const DenseMatrix& m);

// Row echelon basis grown one vector at a time. Pivot of a row is its lowest
// column index; stored rows are normalized to pivot coefficient 1. When
// tracking is on, each stored row remembers its expression in terms of the
// inserted vectors, which yields kernels of the insertion map.
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  // Returns true if v was independent of the rows so far.
  bool insert(SparseVec v);
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }
  // Combinations of inserted vectors (by insertion index) that reduced to zero.
  const std::vector<SparseVec>& kernel() const { return kernel_; }
  // Rows in fully reduced echelon form, keyed by pivot column.
  std::map<std::size_t, SparseVec> reduced_rows() const;

 private:
  struct Row {
    SparseVec v;
    SparseVec combo;
  };
  void eliminate(SparseVec& v, SparseVec* combo) const;

  bool track_;
  std::map<std::size_t, Row> rows_;
  std::size_t inserted_ = 0;
  std::vector<SparseVec> kernel_;
};

void axpy(SparseVec& y, const QScalar& a, const SparseVec& x);

}  // namespace qflag
