#include "qice/matrix.hpp"

#include <sstream>

#include "qice/error.hpp"

namespace qice {

Rat parse_rational(const std::string& s) {
  if (s.empty()) fail(Errc::invalid_input, "empty rational literal");
  for (char ch : s) {
    if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
      fail(Errc::invalid_input, "bad rational literal '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(Errc::invalid_input, "bad rational literal '" + s + "'");
  if (q.get_den() == 0) fail(Errc::invalid_input, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::unknown_arrow: return "UnknownArrow";
    case Errc::non_parallel_relation: return "NonParallelRelation";
    case Errc::not_admissible: return "NotAdmissible";
    case Errc::not_finite_dimensional: return "NotFiniteDimensional";
    case Errc::algebra_mismatch: return "AlgebraMismatch";
    case Errc::non_split_end_algebra: return "NonSplitEndAlgebra";
    case Errc::indeterminate: return "Indeterminate";
    case Errc::not_nakayama: return "NotNakayama";
    case Errc::budget_exhausted: return "BudgetExhausted";
    case Errc::census_incomplete: return "CensusIncomplete";
    case Errc::invalid_input: return "InvalidInput";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows, int cols) {
  QMatrix m(int(rows.size()), cols);
  for (int r = 0; r < int(rows.size()); ++r) {
    if (int(rows[r].size()) != cols) fail(Errc::internal, "ragged row matrix");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::col_vector(const std::vector<Rat>& v) {
  QMatrix m(int(v.size()), 1);
  for (int r = 0; r < int(v.size()); ++r) m.at(r, 0) = v[r];
  return m;
}

bool QMatrix::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

bool QMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) fail(Errc::internal, "matrix product shape mismatch");
  QMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& y = o.at(k, j);
        if (y != 0) out.at(i, j) += x * y;
      }
    }
  }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::internal, "matrix sum shape mismatch");
  QMatrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::internal, "matrix diff shape mismatch");
  QMatrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

QMatrix QMatrix::scaled(const Rat& c) const {
  QMatrix out = *this;
  for (Rat& x : out.a_) x *= c;
  return out;
}

void QMatrix::add_scaled(const QMatrix& o, const Rat& c) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::internal, "add_scaled shape mismatch");
  if (c == 0) return;
  for (size_t i = 0; i < a_.size(); ++i)
    if (o.a_[i] != 0) a_[i] += c * o.a_[i];
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& x) const {
  if (int(x.size()) != cols_) fail(Errc::internal, "apply shape mismatch");
  std::vector<Rat> y(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != 0) y[r] += at(r, c) * x[c];
  return y;
}

QMatrix QMatrix::column(int c) const {
  QMatrix out(rows_, 1);
  for (int r = 0; r < rows_; ++r) out.at(r, 0) = at(r, c);
  return out;
}

std::vector<Rat> QMatrix::column_vec(int c) const {
  std::vector<Rat> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

QMatrix QMatrix::hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_) fail(Errc::internal, "hstack shape mismatch");
  QMatrix out(a.rows_, a.cols_ + b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.cols_; ++c) out.at(r, a.cols_ + c) = b.at(r, c);
  }
  return out;
}

QMatrix QMatrix::vstack(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.cols_) fail(Errc::internal, "vstack shape mismatch");
  QMatrix out(a.rows_ + b.rows_, a.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c) out.at(a.rows_ + r, c) = b.at(r, c);
  return out;
}

QMatrix QMatrix::block_diag(const std::vector<QMatrix>& blocks) {
  int rows = 0, cols = 0;
  for (const QMatrix& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  QMatrix out(rows, cols);
  int r0 = 0, c0 = 0;
  for (const QMatrix& b : blocks) {
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c) out.at(r0 + r, c0 + c) = b.at(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

std::string QMatrix::bytes() const {
  std::ostringstream os;
  os << rows_ << 'x' << cols_ << ':';
  for (const Rat& x : a_) os << x.get_str() << ',';
  return os.str();
}

Rref rref(const QMatrix& m) {
  QMatrix a = m;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = col; c < a.cols(); ++c) swap(a.at(piv, c), a.at(row, c));
    Rat inv = 1 / a.at(row, col);
    if (inv != 1)
      for (int c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const Rat f = a.at(r, col);
      if (f == 0) continue;
      for (int c = col; c < a.cols(); ++c)
        if (a.at(row, c) != 0) a.at(r, c) -= f * a.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  QMatrix out(int(pivots.size()), a.cols());
  for (int r = 0; r < int(pivots.size()); ++r)
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  return {std::move(out), std::move(pivots)};
}

int rank(const QMatrix& m) { return int(rref(m).pivots.size()); }

QMatrix kernel_basis(const QMatrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMatrix out(m.cols(), int(free_cols.size()));
  for (int k = 0; k < int(free_cols.size()); ++k) {
    int f = free_cols[k];
    out.at(f, k) = 1;
    for (int t = 0; t < int(r.pivots.size()); ++t) out.at(r.pivots[t], k) = -r.mat.at(t, f);
  }
  return out;
}

std::optional<std::vector<Rat>> solve(const QMatrix& m, const std::vector<Rat>& b) {
  if (int(b.size()) != m.rows()) fail(Errc::internal, "solve shape mismatch");
  QMatrix aug = QMatrix::hstack(m, QMatrix::col_vector(b));
  Rref r = rref(aug);
  std::vector<Rat> x(m.cols());
  for (int t = 0; t < int(r.pivots.size()); ++t) {
    if (r.pivots[t] == m.cols()) return std::nullopt;  // pivot in augmented column
    x[r.pivots[t]] = r.mat.at(t, m.cols());
  }
  return x;
}

QMatrix solve_matrix(const QMatrix& m, const QMatrix& b) {
  if (m.rows() != b.rows()) fail(Errc::internal, "solve_matrix shape mismatch");
  QMatrix aug = QMatrix::hstack(m, b);
  Rref r = rref(aug);
  QMatrix x(m.cols(), b.cols());
  for (int t = 0; t < int(r.pivots.size()); ++t) {
    if (r.pivots[t] >= m.cols()) fail(Errc::internal, "solve_matrix: inconsistent system");
    for (int c = 0; c < b.cols(); ++c) x.at(r.pivots[t], c) = r.mat.at(t, m.cols() + c);
  }
  return x;
}

QMatrix column_space_basis(const QMatrix& m) { return rref(m.transpose()).mat.transpose(); }

QuotientMap quotient_map(const QMatrix& sub, int ambient_dim) {
  if (sub.rows() != ambient_dim) fail(Errc::internal, "quotient_map shape mismatch");
  Rref r = rref(sub.transpose());
  std::vector<bool> is_pivot(ambient_dim, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<int> free_coords;
  for (int c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free_coords.push_back(c);
  int q = int(free_coords.size());
  QuotientMap out{QMatrix(q, ambient_dim), QMatrix(ambient_dim, q)};
  for (int s = 0; s < q; ++s) {
    out.proj.at(s, free_coords[s]) = 1;
    out.lift.at(free_coords[s], s) = 1;
  }
  // row t of the echelon form reads e_{p_t} + sum_f c_{t,f} e_f in the
  // subspace, so the class of e_{p_t} is -sum_f c_{t,f} [e_f].
  for (int t = 0; t < int(r.pivots.size()); ++t)
    for (int s = 0; s < q; ++s) out.proj.at(s, r.pivots[t]) = -r.mat.at(t, free_coords[s]);
  return out;
}

}  // namespace qice
