#include "puinorm/lattice.hpp"

#include <algorithm>
#include <tuple>

namespace puinorm {

namespace {

// Extended gcd transform data for eliminating b against a: p*a + q*b = g and
// the companion row (-b/g, a/g) completes a determinant-one 2x2 matrix.
struct GcdStep {
  Int g, p, q, aOverG, bOverG;
};

GcdStep gcdStep(const Int& a, const Int& b) {
  GcdStep s;
  mpz_gcdext(s.g.get_mpz_t(), s.p.get_mpz_t(), s.q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_divexact(s.aOverG.get_mpz_t(), a.get_mpz_t(), s.g.get_mpz_t());
  mpz_divexact(s.bOverG.get_mpz_t(), b.get_mpz_t(), s.g.get_mpz_t());
  return s;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  if (m.isZero()) throw UserError("lattice: rank zero");
  HnfResult res;
  res.h = m;
  res.u = IntMatrix::identity(m.rows());
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  const int r = m.rows();
  const int c = m.cols();

  int row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    // pivot: smallest nonzero magnitude at or below `row`, lowest index on ties
    int piv = -1;
    for (int i = row; i < r; ++i) {
      if (h(i, col) == 0) continue;
      if (piv < 0 || abs(h(i, col)) < abs(h(piv, col))) piv = i;
    }
    if (piv < 0) continue;
    h.swapRows(row, piv);
    u.swapRows(row, piv);
    for (int i = row + 1; i < r; ++i) {
      if (h(i, col) == 0) continue;
      const GcdStep s = gcdStep(h(row, col), h(i, col));
      h.combineRows(row, i, s.p, s.q, -s.bOverG, s.aOverG);
      u.combineRows(row, i, s.p, s.q, -s.bOverG, s.aOverG);
    }
    if (h(row, col) < 0) {
      h.negateRow(row);
      u.negateRow(row);
    }
    res.pivotCols.push_back(col);
    ++row;
  }
  res.rank = row;

  // reduce entries above each pivot into [0, pivot); ascending order keeps
  // earlier pivot columns untouched (row i is zero left of its pivot)
  for (int i = 0; i < res.rank; ++i) {
    const int p = res.pivotCols[static_cast<size_t>(i)];
    for (int j = 0; j < i; ++j) {
      if (h(j, p) == 0) continue;
      const Int q = floorDiv(h(j, p), h(i, p));
      if (q == 0) continue;
      h.addRowMultiple(j, i, -q);
      u.addRowMultiple(j, i, -q);
    }
  }
  return res;
}

SnfResult snf(const IntMatrix& m) {
  if (m.isZero()) throw UserError("lattice: rank zero");
  SnfResult res;
  res.d = m;
  res.u = IntMatrix::identity(m.rows());
  res.v = IntMatrix::identity(m.cols());
  IntMatrix& d = res.d;
  const int r = m.rows();
  const int c = m.cols();
  const int steps = std::min(r, c);

  for (int t = 0; t < steps; ++t) {
    // pivot: smallest nonzero magnitude in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        if (d(i, j) == 0) continue;
        if (pi < 0 || abs(d(i, j)) < abs(d(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    d.swapRows(t, pi);
    res.u.swapRows(t, pi);
    d.swapCols(t, pj);
    res.v.swapCols(t, pj);

    for (;;) {
      for (int i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        const GcdStep s = gcdStep(d(t, t), d(i, t));
        d.combineRows(t, i, s.p, s.q, -s.bOverG, s.aOverG);
        res.u.combineRows(t, i, s.p, s.q, -s.bOverG, s.aOverG);
      }
      for (int j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        const GcdStep s = gcdStep(d(t, t), d(t, j));
        d.combineCols(t, j, s.p, s.q, -s.bOverG, s.aOverG);
        res.v.combineCols(t, j, s.p, s.q, -s.bOverG, s.aOverG);
      }
      bool colClear = true;
      for (int i = t + 1; i < r && colClear; ++i) colClear = d(i, t) == 0;
      if (!colClear) continue;

      // fold in any entry the pivot does not divide yet
      int fi = -1;
      for (int i = t + 1; i < r && fi < 0; ++i)
        for (int j = t + 1; j < c; ++j) {
          Int rem;
          mpz_fdiv_r(rem.get_mpz_t(), d(i, j).get_mpz_t(), d(t, t).get_mpz_t());
          if (rem != 0) {
            fi = i;
            break;
          }
        }
      if (fi < 0) break;
      d.addRowMultiple(t, fi, 1);
      res.u.addRowMultiple(t, fi, 1);
    }
    if (d(t, t) < 0) {
      d.negateRow(t);
      res.u.negateRow(t);
    }
    res.rank = t + 1;
  }
  return res;
}

bool inRowSpan(const HnfResult& echelon, const IntVec& v) {
  if (static_cast<int>(v.size()) != echelon.h.cols()) throw UserError("lattice: dimension mismatch");
  IntVec w = v;
  for (int i = 0; i < echelon.rank; ++i) {
    const int p = echelon.pivotCols[static_cast<size_t>(i)];
    const Int& piv = echelon.h(i, p);
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w[static_cast<size_t>(p)].get_mpz_t(), piv.get_mpz_t());
    if (rem != 0) return false;
    if (q != 0)
      for (int j = 0; j < echelon.h.cols(); ++j) w[static_cast<size_t>(j)] -= q * echelon.h(i, j);
  }
  return isZeroVec(w);
}

Lattice Lattice::standard(int n) { return Lattice(IntMatrix::identity(n)); }

Lattice Lattice::fromGenerators(const std::vector<IntVec>& rows, int n) {
  if (rows.empty()) throw UserError("lattice: not full rank");
  IntMatrix m = IntMatrix::fromRows(rows);
  if (m.cols() != n) throw UserError("lattice: dimension mismatch");
  if (m.isZero()) throw UserError("lattice: not full rank");
  const HnfResult res = hnf(m);
  if (res.rank < n) throw UserError("lattice: not full rank");
  IntMatrix basis(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) basis(i, j) = res.h(i, j);
  return Lattice(std::move(basis));
}

Lattice Lattice::fromHnfBasis(IntMatrix basis) {
  if (basis.rows() != basis.cols()) throw UserError("lattice: basis must be square");
  const int n = basis.rows();
  for (int i = 0; i < n; ++i) {
    if (basis(i, i) <= 0) throw UserError("lattice: basis not in HNF");
    for (int j = 0; j < i; ++j)
      if (basis(i, j) != 0) throw UserError("lattice: basis not in HNF");
    for (int j = 0; j < i; ++j)
      if (basis(j, i) < 0 || basis(j, i) >= basis(i, i)) throw UserError("lattice: basis not in HNF");
  }
  return Lattice(std::move(basis));
}

Int Lattice::det() const {
  Int d = 1;
  for (int i = 0; i < dim(); ++i) d *= basis_(i, i);
  return d;
}

std::optional<IntVec> Lattice::coordinatesOf(const IntVec& v) const {
  if (static_cast<int>(v.size()) != dim()) throw UserError("lattice: dimension mismatch");
  IntVec w = v;
  IntVec coords(static_cast<size_t>(dim()));
  for (int i = 0; i < dim(); ++i) {
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w[static_cast<size_t>(i)].get_mpz_t(), basis_(i, i).get_mpz_t());
    if (rem != 0) return std::nullopt;
    coords[static_cast<size_t>(i)] = q;
    if (q != 0)
      for (int j = i; j < dim(); ++j) w[static_cast<size_t>(j)] -= q * basis_(i, j);
  }
  return coords;
}

bool Lattice::contains(const IntVec& v) const { return coordinatesOf(v).has_value(); }

Int latticeIndex(const Lattice& sub, const Lattice& sup) {
  if (sub.dim() != sup.dim()) throw UserError("lattice: dimension mismatch");
  for (int i = 0; i < sub.dim(); ++i)
    if (!sup.contains(sub.basis().row(i))) throw UserError("lattice: not a sublattice");
  Int idx;
  const Int ds = sub.det();
  const Int dp = sup.det();
  mpz_divexact(idx.get_mpz_t(), ds.get_mpz_t(), dp.get_mpz_t());
  return idx;
}

QuotientStructure quotientStructure(const Lattice& sub, const Lattice& sup) {
  if (sub.dim() != sup.dim()) throw UserError("lattice: dimension mismatch");
  const int n = sub.dim();
  // rows of `change` express sub's basis in sup's basis
  std::vector<IntVec> rows;
  rows.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto coords = sup.coordinatesOf(sub.basis().row(i));
    if (!coords) throw UserError("lattice: not a sublattice");
    rows.push_back(*coords);
  }
  const SnfResult s = snf(IntMatrix::fromRows(rows));

  QuotientStructure q;
  q.sup_ = sup;
  q.vTransform_ = s.v;
  q.order_ = 1;
  for (int i = 0; i < n; ++i) {
    const Int& di = s.d(i, i);
    if (di > 1) {
      q.factors_.push_back(di);
      q.factorPos_.push_back(i);
      q.order_ *= di;
    }
  }
  return q;
}

IntVec QuotientStructure::classOf(const IntVec& w) const {
  auto x = sup_.coordinatesOf(w);
  if (!x) throw UserError("lattice: vector outside the superlattice");
  const IntVec y = mulRowVec(*x, vTransform_);
  IntVec cls(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    Int rem;
    mpz_fdiv_r(rem.get_mpz_t(), y[static_cast<size_t>(factorPos_[i])].get_mpz_t(), factors_[i].get_mpz_t());
    cls[i] = rem;
  }
  return cls;
}

std::vector<IntVec> kernelLattice(const IntMatrix& a) {
  const int s = a.cols();
  if (a.isZero()) {
    std::vector<IntVec> basis;
    for (int j = 0; j < s; ++j) {
      IntVec e(static_cast<size_t>(s));
      e[static_cast<size_t>(j)] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  const SnfResult res = snf(a);
  // a*u = 0  <=>  (u*a*v)*(v^-1 u) = 0; kernel = span of v's trailing columns
  std::vector<IntVec> basis;
  for (int j = res.rank; j < s; ++j) basis.push_back(res.v.col(j));
  return basis;
}

std::vector<IntVec> latticePointsInBox(const Lattice& l, const IntVec& lo, const IntVec& hi) {
  const int n = l.dim();
  if (static_cast<int>(lo.size()) != n || static_cast<int>(hi.size()) != n)
    throw UserError("lattice: dimension mismatch");
  std::vector<IntVec> out;
  IntVec partial(static_cast<size_t>(n));
  const IntMatrix& b = l.basis();

  // rows are upper triangular: coordinate i is fixed once rows 0..i are chosen
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(partial);
      return;
    }
    const Int& piv = b(i, i);
    const Int cmin = ceilDiv(lo[static_cast<size_t>(i)] - partial[static_cast<size_t>(i)], piv);
    const Int cmax = floorDiv(hi[static_cast<size_t>(i)] - partial[static_cast<size_t>(i)], piv);
    for (Int c = cmin; c <= cmax; ++c) {
      if (c != 0)
        for (int j = i; j < n; ++j) partial[static_cast<size_t>(j)] += c * b(i, j);
      self(self, i + 1);
      if (c != 0)
        for (int j = i; j < n; ++j) partial[static_cast<size_t>(j)] -= c * b(i, j);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b2) { return grlexLess(a, b2); });
  return out;
}

FracLattice FracLattice::standard(int n) { return FracLattice(Int(1), Lattice::standard(n)); }

FracLattice FracLattice::fromGenerators(int n, const std::vector<ExpVec>& gens) {
  Int k0 = 1;
  for (const auto& g : gens) {
    if (g.dim() != n) throw UserError("lattice: dimension mismatch");
    const Int d = g.denominatorLcm();
    Int l;
    mpz_lcm(l.get_mpz_t(), k0.get_mpz_t(), d.get_mpz_t());
    k0 = l;
  }
  std::vector<IntVec> rows;
  rows.reserve(gens.size() + static_cast<size_t>(n));
  for (const auto& g : gens) rows.push_back(*g.scaledIntegral(k0));
  for (int i = 0; i < n; ++i) {
    IntVec e(static_cast<size_t>(n));
    e[static_cast<size_t>(i)] = k0;
    rows.push_back(std::move(e));
  }
  Lattice scaled = Lattice::fromGenerators(rows, n);

  // minimize the denominator: divide out the largest t | k0 dividing the basis
  Int g = k0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int t;
      mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), scaled.basis()(i, j).get_mpz_t());
      g = t;
    }
  if (g > 1) {
    IntMatrix reduced = scaled.basis();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        mpz_divexact(reduced(i, j).get_mpz_t(), scaled.basis()(i, j).get_mpz_t(), g.get_mpz_t());
    scaled = Lattice::fromHnfBasis(std::move(reduced));
    Int k;
    mpz_divexact(k.get_mpz_t(), k0.get_mpz_t(), g.get_mpz_t());
    k0 = k;
  }
  return FracLattice(std::move(k0), std::move(scaled));
}

bool FracLattice::contains(const ExpVec& v) const {
  if (v.dim() != dim()) throw UserError("lattice: dimension mismatch");
  const auto scaled = v.scaledIntegral(k_);
  if (!scaled) return false;
  return scaled_.contains(*scaled);
}

IntVec FracLattice::scaledCoords(const ExpVec& v) const {
  const auto scaled = v.scaledIntegral(k_);
  if (!scaled || !scaled_.contains(*scaled)) throw UserError("lattice: vector outside the lattice");
  return *scaled;
}

Int FracLattice::indexOverZn() const {
  Int kn = 1;
  for (int i = 0; i < dim(); ++i) kn *= k_;
  Int idx;
  const Int d = scaled_.det();
  mpz_divexact(idx.get_mpz_t(), kn.get_mpz_t(), d.get_mpz_t());
  return idx;
}

std::vector<ExpVec> FracLattice::basisRows() const {
  std::vector<ExpVec> rows;
  for (int i = 0; i < dim(); ++i) {
    ExpVec r(dim());
    for (int j = 0; j < dim(); ++j) r[j] = makeRational(scaled_.basis()(i, j), k_);
    rows.push_back(std::move(r));
  }
  return rows;
}

QuotientStructure FracLattice::quotientByZn() const {
  std::vector<IntVec> rows;
  for (int i = 0; i < dim(); ++i) {
    IntVec e(static_cast<size_t>(dim()));
    e[static_cast<size_t>(i)] = k_;
    rows.push_back(std::move(e));
  }
  return quotientStructure(Lattice::fromGenerators(rows, dim()), scaled_);
}

}  // namespace puinorm
