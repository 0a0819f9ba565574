#include "puinorm/hj.hpp"

namespace puinorm {

RescaleResult rescale(const Lattice& l) {
  RescaleResult res;
  res.m = mVector(l);
  std::vector<ExpVec> rows;
  for (int i = 0; i < l.dim(); ++i) {
    ExpVec r(l.dim());
    for (int j = 0; j < l.dim(); ++j) r[j] = makeRational(l.basis()(i, j), res.m.m[static_cast<size_t>(j)]);
    rows.push_back(std::move(r));
  }
  res.lPrime = FracLattice::fromGenerators(l.dim(), rows);
  return res;
}

DistinguishedExponents hjExponents(const FracLattice& lPrime, const MonomialOrder& ord) {
  const int n = lPrime.dim();
  const Int& k = lPrime.denominator();

  // points of lPrime in [0,1)^n; selecting from the box loses no minima since
  // subtracting a unit vector lowers the weight and stays outside the group
  IntVec lo(static_cast<size_t>(n));
  IntVec hi(static_cast<size_t>(n), Int(k - 1));
  std::vector<ExpVec> boxPoints;
  for (const auto& p : latticePointsInBox(lPrime.scaledLattice(), lo, hi)) {
    if (isZeroVec(p)) continue;
    ExpVec e(n);
    for (int i = 0; i < n; ++i) e[i] = makeRational(p[static_cast<size_t>(i)], k);
    boxPoints.push_back(std::move(e));
  }

  DistinguishedExponents out;
  out.terminalGroup = FracLattice::standard(n);
  for (;;) {
    const ExpVec* best = nullptr;
    for (const auto& e : boxPoints) {
      if (out.terminalGroup.contains(e)) continue;
      if (!best || ord.less(e, *best)) best = &e;
    }
    if (!best) break;
    out.exponents.push_back(*best);
    out.terminalGroup = FracLattice::fromGenerators(n, out.exponents);
  }
  if (out.terminalGroup != lPrime)
    throw InternalError("hj: selected exponents do not generate the rescaled lattice");
  return out;
}

HJResult hjToPuiseux(const HJInput& input, const MonomialOrder& ord) {
  HJResult res;
  const RescaleResult rs = rescale(input.lattice);
  res.m = rs.m;
  res.lPrime = rs.lPrime;
  res.exponents = hjExponents(res.lPrime, ord);
  res.smooth = isSmooth(res.lPrime);

  const int n = input.lattice.dim();
  res.xi = PuiseuxSeries(n);
  for (const auto& e : res.exponents.exponents) res.xi.addTerm(e, CycloNumber::fromRational(1));

  if (res.xi.isZero()) {
    // lPrime = Z^n: nothing singular remains, the zero series has minimal
    // polynomial y
    res.f = PolyY(n, {PuiseuxSeries(n)});
  } else {
    res.f = minimalPolynomial(res.xi);
  }

  const SaturatedSemigroup sat = saturate(AffineSemigroup(n, res.exponents.exponents));
  res.roundTripOk = sat.spanGroup == res.lPrime && sat.hilbertBasis == hilbertBasis(res.lPrime);
  if (!res.roundTripOk) throw InternalError("hj: round trip failed to regenerate the rescaled lattice");
  return res;
}

}  // namespace puinorm
