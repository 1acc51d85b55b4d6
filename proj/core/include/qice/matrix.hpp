#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qice/rational.hpp"

namespace qice {

// Dense matrix over the exact rationals, row major. Row/column counts may be
// zero; a 0xN or Nx0 matrix is a legitimate (empty) linear map.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static QMatrix identity(int n);
  static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }
  static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows, int cols);
  static QMatrix col_vector(const std::vector<Rat>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const Rat& c) const;
  void add_scaled(const QMatrix& o, const Rat& c);  // *this += c*o
  QMatrix transpose() const;

  std::vector<Rat> apply(const std::vector<Rat>& x) const;
  QMatrix column(int c) const;
  std::vector<Rat> column_vec(int c) const;

  static QMatrix hstack(const QMatrix& a, const QMatrix& b);
  static QMatrix vstack(const QMatrix& a, const QMatrix& b);
  static QMatrix block_diag(const std::vector<QMatrix>& blocks);

  // Canonical serialization; used for deterministic ordering and memo keys.
  std::string bytes() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

struct Rref {
  QMatrix mat;
  std::vector<int> pivots;  // pivot column per nonzero row, increasing
};

// Reduced row echelon form: leftmost pivots, exact division, zero rows
// dropped. Deterministic for a given input.
Rref rref(const QMatrix& m);

int rank(const QMatrix& m);

// Columns form the canonical basis of {x : m x = 0}: free variables taken in
// increasing column index, pivot entries by back substitution.
QMatrix kernel_basis(const QMatrix& m);

// Any exact solution of m x = b, free variables set to 0; nullopt if none.
std::optional<std::vector<Rat>> solve(const QMatrix& m, const std::vector<Rat>& b);

// Solves m X = B column by column; throws Errc::internal if inconsistent.
QMatrix solve_matrix(const QMatrix& m, const QMatrix& b);

// Canonical basis (as columns) of the column space of m.
QMatrix column_space_basis(const QMatrix& m);

// Canonical presentation of the quotient k^ambient / colspace(sub):
//   proj : ambient -> q  with  ker(proj) = colspace(sub),
//   lift : q -> ambient  with  proj * lift = identity.
struct QuotientMap {
  QMatrix proj;
  QMatrix lift;
};
QuotientMap quotient_map(const QMatrix& sub, int ambient_dim);

}  // namespace qice
