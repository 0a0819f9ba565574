#pragma once

#include "puinorm/minpoly.hpp"
#include "puinorm/puiseux.hpp"
#include "puinorm/semigroup.hpp"

namespace puinorm {

struct HJInput {
  Lattice lattice = Lattice::standard(1);
};

struct RescaleResult {
  MVector m;
  FracLattice lPrime = FracLattice::standard(1);
};

// Per-axis minimal multiples of a full-rank integer lattice, and the lattice
// obtained by dividing coordinate i by m_i. The result contains Z^n.
RescaleResult rescale(const Lattice& l);

// Greedy order-minimal selection over the nonnegative part of lPrime. Every
// minimum is attained in the half-open unit box, which is enumerated exactly.
DistinguishedExponents hjExponents(const FracLattice& lPrime, const MonomialOrder& ord);

struct HJResult {
  MVector m;
  FracLattice lPrime = FracLattice::standard(1);
  DistinguishedExponents exponents;
  PuiseuxSeries xi = PuiseuxSeries(1);
  PolyY f = PolyY(1, {});
  bool smooth = false;      // the rescaled lattice is Z^n, no singularity left
  bool roundTripOk = false; // saturating the exponent semigroup regenerates lPrime
};

// Full converse pipeline: rescale, pick exponents, build the unit-coefficient
// series and its minimal polynomial, verify the round trip. A smooth input
// (lPrime = Z^n) yields the zero series and f = y.
HJResult hjToPuiseux(const HJInput& input, const MonomialOrder& ord);

}  // namespace puinorm
