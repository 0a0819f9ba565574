#pragma once

#include <vector>

#include "puinorm/lattice.hpp"

namespace puinorm {

// Affine semigroup generated by (Z>=0)^n together with finitely many extra
// rational generators from (Q>=0)^n. Integral generators are absorbed into
// the implicit unit vectors; duplicates are dropped.
class AffineSemigroup {
public:
  AffineSemigroup(int n, const std::vector<ExpVec>& extraGenerators);

  int dim() const { return n_; }
  const std::vector<ExpVec>& extraGenerators() const { return gens_; }

  // Semigroup membership by bounded search over generator multiplicities.
  bool contains(const ExpVec& target) const;

private:
  int n_;
  std::vector<ExpVec> gens_;
};

// Per-axis minimal positive integer multiples m_i with m_i*e_i in the lattice.
struct MVector {
  std::vector<Int> m;
};

struct SaturatedSemigroup {
  int n = 0;
  FracLattice spanGroup = FracLattice::standard(1);
  std::vector<ExpVec> hilbertBasis;  // descending graded-lex
};

// Group generated by the semigroup: Z^n + sum of generator lines.
FracLattice spanGroup(const AffineSemigroup& s);

// Minimal generating set of M intersected with the nonnegative orthant.
// Requires M >= Z^n (every FracLattice satisfies this).
std::vector<ExpVec> hilbertBasis(const FracLattice& m);

SaturatedSemigroup saturate(const AffineSemigroup& s);

// True when every Hilbert-basis element of the saturation already lies in s.
bool isSaturated(const AffineSemigroup& s);

MVector mVector(const Lattice& l);
MVector mVector(const FracLattice& m);

// Minimal positive rational t_i with t_i*e_i in M, one per axis.
std::vector<Rational> axisMinima(const FracLattice& m);

// Freeness of the saturated semigroup: rescaling each axis by its minimal
// positive element must give exactly Z^n.
bool isSmooth(const FracLattice& m);

}  // namespace puinorm
