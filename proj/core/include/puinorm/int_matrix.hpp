#pragma once

#include <vector>

#include "puinorm/rational.hpp"

namespace puinorm {

using IntVec = std::vector<Int>;

Int l1Norm(const IntVec& v);
bool grlexLess(const IntVec& a, const IntVec& b);
IntVec vecSub(const IntVec& a, const IntVec& b);
IntVec vecNeg(const IntVec& v);
bool isZeroVec(const IntVec& v);

// Dense matrix of arbitrary-precision integers, row major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);
  static IntMatrix fromRows(const std::vector<IntVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Int& operator()(int i, int j) const { return a_[idx(i, j)]; }
  Int& operator()(int i, int j) { return a_[idx(i, j)]; }

  IntVec row(int i) const;
  IntVec col(int j) const;

  void swapRows(int i, int j);
  void swapCols(int i, int j);
  void negateRow(int i);
  void negateCol(int j);
  // row[dst] += c * row[src]
  void addRowMultiple(int dst, int src, const Int& c);
  void addColMultiple(int dst, int src, const Int& c);
  // rows (i, j) <- (p*row_i + q*row_j, r*row_i + s*row_j)
  void combineRows(int i, int j, const Int& p, const Int& q, const Int& r, const Int& s);
  void combineCols(int i, int j, const Int& p, const Int& q, const Int& r, const Int& s);

  bool isZero() const;
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& o) const;
  // this * v with v interpreted as a column vector.
  IntVec mulVec(const IntVec& v) const;

  bool operator==(const IntMatrix& o) const = default;

private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j); }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

// row vector * matrix
IntVec mulRowVec(const IntVec& v, const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination; square input.
Int determinant(const IntMatrix& m);

std::string toString(const IntMatrix& m);

}  // namespace puinorm
