#include "puinorm/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace puinorm {

Int l1Norm(const IntVec& v) {
  Int s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

bool grlexLess(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw UserError("matrix: dimension mismatch");
  const Int da = l1Norm(a);
  const Int db = l1Norm(b);
  if (da != db) return da < db;
  return a < b;
}

IntVec vecSub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw UserError("matrix: dimension mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec vecNeg(const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

bool isZeroVec(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
  if (rows < 1 || cols < 1) throw UserError("matrix: rows and columns must be positive");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::fromRows(const std::vector<IntVec>& rows) {
  if (rows.empty() || rows.front().empty()) throw UserError("matrix: empty row list");
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[static_cast<size_t>(i)].size() != rows.front().size())
      throw UserError("matrix: ragged row list");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

IntVec IntMatrix::row(int i) const {
  IntVec r(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(j)] = (*this)(i, j);
  return r;
}

IntVec IntMatrix::col(int j) const {
  IntVec c(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) c[static_cast<size_t>(i)] = (*this)(i, j);
  return c;
}

void IntMatrix::swapRows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swapCols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::negateRow(int i) {
  for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negateCol(int j) {
  for (int k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

void IntMatrix::addRowMultiple(int dst, int src, const Int& c) {
  for (int k = 0; k < cols_; ++k) (*this)(dst, k) += c * (*this)(src, k);
}

void IntMatrix::addColMultiple(int dst, int src, const Int& c) {
  for (int k = 0; k < rows_; ++k) (*this)(k, dst) += c * (*this)(k, src);
}

void IntMatrix::combineRows(int i, int j, const Int& p, const Int& q, const Int& r, const Int& s) {
  for (int k = 0; k < cols_; ++k) {
    Int vi = (*this)(i, k);
    Int vj = (*this)(j, k);
    (*this)(i, k) = p * vi + q * vj;
    (*this)(j, k) = r * vi + s * vj;
  }
}

void IntMatrix::combineCols(int i, int j, const Int& p, const Int& q, const Int& r, const Int& s) {
  for (int k = 0; k < rows_; ++k) {
    Int vi = (*this)(k, i);
    Int vj = (*this)(k, j);
    (*this)(k, i) = p * vi + q * vj;
    (*this)(k, j) = r * vi + s * vj;
  }
}

bool IntMatrix::isZero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows()) throw UserError("matrix: dimension mismatch in product");
  IntMatrix r(rows_, o.cols());
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols(); ++j) r(i, j) += v * o(k, j);
    }
  return r;
}

IntVec IntMatrix::mulVec(const IntVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw UserError("matrix: dimension mismatch in product");
  IntVec r(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
  return r;
}

IntVec mulRowVec(const IntVec& v, const IntMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows()) throw UserError("matrix: dimension mismatch in product");
  IntVec r(static_cast<size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    if (v[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) r[static_cast<size_t>(j)] += v[static_cast<size_t>(i)] * m(i, j);
  }
  return r;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw UserError("matrix: determinant of non-square matrix");
  const int n = m.rows();
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.swapRows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

std::string toString(const IntMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    os << '(';
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j).get_str();
    }
    os << ')';
  }
  return os.str();
}

}  // namespace puinorm
