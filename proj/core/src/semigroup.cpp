#include "puinorm/semigroup.hpp"

#include <algorithm>
#include <set>

namespace puinorm {

AffineSemigroup::AffineSemigroup(int n, const std::vector<ExpVec>& extraGenerators) : n_(n) {
  if (n < 1) throw UserError("semigroup: dimension must be positive");
  for (const auto& g : extraGenerators) {
    if (g.dim() != n) throw UserError("semigroup: dimension mismatch");
    if (!g.isNonNegative()) throw UserError("semigroup: generators must be nonnegative");
    if (g.isIntegral()) continue;  // absorbed by the unit vectors
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
  }
}

bool AffineSemigroup::contains(const ExpVec& target) const {
  if (target.dim() != n_) throw UserError("semigroup: dimension mismatch");
  if (!target.isNonNegative()) return false;

  // multiplicity of generator j is bounded at every coordinate it is
  // positive on; leftover must be a nonnegative integer vector
  auto rec = [&](auto&& self, size_t j, const ExpVec& residual) -> bool {
    if (j == gens_.size()) return residual.isIntegral() && residual.isNonNegative();
    const ExpVec& g = gens_[j];
    Int amax = -1;
    for (int i = 0; i < n_; ++i) {
      if (g[i] > 0) {
        const Int bound = rationalFloor(residual[i] / g[i]);
        if (amax < 0 || bound < amax) amax = bound;
      }
    }
    ExpVec rem = residual;
    for (Int a = 0; a <= amax; ++a) {
      if (self(self, j + 1, rem)) return true;
      rem = rem - g;
    }
    return false;
  };
  return rec(rec, 0, target);
}

FracLattice spanGroup(const AffineSemigroup& s) {
  return FracLattice::fromGenerators(s.dim(), s.extraGenerators());
}

MVector mVector(const Lattice& l) {
  MVector mv;
  const Int bound = l.det();
  for (int i = 0; i < l.dim(); ++i) {
    IntVec v(static_cast<size_t>(l.dim()));
    for (Int t = 1; t <= bound; ++t) {
      v[static_cast<size_t>(i)] = t;
      if (l.contains(v)) {
        mv.m.push_back(t);
        break;
      }
    }
  }
  if (static_cast<int>(mv.m.size()) != l.dim()) throw InternalError("semigroup: axis multiple not found");
  return mv;
}

MVector mVector(const FracLattice& m) {
  MVector mv;
  for (int i = 0; i < m.dim(); ++i) {
    ExpVec v(m.dim());
    for (Int t = 1; t <= m.denominator(); ++t) {
      v[i] = t;
      if (m.contains(v)) {
        mv.m.push_back(t);
        break;
      }
    }
  }
  if (static_cast<int>(mv.m.size()) != m.dim()) throw InternalError("semigroup: axis multiple not found");
  return mv;
}

std::vector<Rational> axisMinima(const FracLattice& m) {
  // minimal c >= 1 with c*e_i in the scaled lattice gives t_i = c/k
  const MVector scaledAxis = mVector(m.scaledLattice());
  std::vector<Rational> t;
  t.reserve(static_cast<size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) t.push_back(makeRational(scaledAxis.m[static_cast<size_t>(i)], m.denominator()));
  return t;
}

std::vector<ExpVec> hilbertBasis(const FracLattice& m) {
  const int n = m.dim();
  const Int& k = m.denominator();
  const MVector mv = mVector(m);

  // every irreducible element lies in the box prod [0, m_i]
  IntVec lo(static_cast<size_t>(n));
  IntVec hi(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) hi[static_cast<size_t>(i)] = k * mv.m[static_cast<size_t>(i)];
  std::vector<IntVec> pts = latticePointsInBox(m.scaledLattice(), lo, hi);

  std::set<IntVec> inBox(pts.begin(), pts.end());
  std::vector<ExpVec> basis;
  for (const auto& p : pts) {
    if (isZeroVec(p)) continue;
    bool reducible = false;
    for (const auto& q : pts) {
      if (isZeroVec(q) || q == p) continue;
      bool below = true;
      for (size_t i = 0; i < q.size() && below; ++i) below = q[i] <= p[i];
      if (!below) continue;
      if (inBox.count(vecSub(p, q))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) {
      ExpVec e(n);
      for (int i = 0; i < n; ++i) e[i] = makeRational(p[static_cast<size_t>(i)], k);
      basis.push_back(std::move(e));
    }
  }
  sortCanonical(basis);
  return basis;
}

SaturatedSemigroup saturate(const AffineSemigroup& s) {
  SaturatedSemigroup out;
  out.n = s.dim();
  out.spanGroup = spanGroup(s);
  out.hilbertBasis = hilbertBasis(out.spanGroup);
  return out;
}

bool isSaturated(const AffineSemigroup& s) {
  const SaturatedSemigroup sat = saturate(s);
  for (const auto& h : sat.hilbertBasis)
    if (!s.contains(h)) return false;
  return true;
}

bool isSmooth(const FracLattice& m) {
  const std::vector<Rational> t = axisMinima(m);
  std::vector<ExpVec> rescaled;
  for (const auto& row : m.basisRows()) {
    ExpVec r(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
      r[i] = row[i] / t[static_cast<size_t>(i)];
      r[i].canonicalize();
    }
    rescaled.push_back(std::move(r));
  }
  const FracLattice lPrime = FracLattice::fromGenerators(m.dim(), rescaled);
  return lPrime.indexOverZn() == 1;
}

}  // namespace puinorm
