#pragma once

#include <optional>
#include <vector>

#include "puinorm/int_matrix.hpp"

namespace puinorm {

// Row-style Hermite normal form h = u*m, u unimodular. Nonzero rows of h form
// an upper echelon with positive pivots; entries above each pivot are reduced
// into [0, pivot). Rows beyond `rank` are zero.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  int rank = 0;
  std::vector<int> pivotCols;  // one per nonzero row
};
HnfResult hnf(const IntMatrix& m);

// Smith normal form d = u*m*v, d diagonal with d1 | d2 | ..., u and v
// unimodular. Diagonal entries beyond `rank` are zero.
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  int rank = 0;
};
SnfResult snf(const IntMatrix& m);

// Membership of v in the integer row span of an echelon basis.
bool inRowSpan(const HnfResult& echelon, const IntVec& v);

// Full-rank sublattice of Z^n held as its canonical HNF basis.
class Lattice {
public:
  static Lattice standard(int n);
  static Lattice fromGenerators(const std::vector<IntVec>& rows, int n);
  // Takes an already-reduced basis; validates the HNF shape.
  static Lattice fromHnfBasis(IntMatrix basis);

  int dim() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  Int det() const;

  bool contains(const IntVec& v) const;
  // Integer coordinates of v in the basis rows; nullopt when v is outside.
  std::optional<IntVec> coordinatesOf(const IntVec& v) const;

  bool operator==(const Lattice& o) const = default;

private:
  explicit Lattice(IntMatrix basis) : basis_(std::move(basis)) {}
  IntMatrix basis_;
};

// [sup : sub] as an exact integer; throws unless sub is a sublattice of sup.
Int latticeIndex(const Lattice& sub, const Lattice& sup);

// Invariant factors d1 | d2 | ... (each >= 2) of sup/sub together with a
// coordinate map onto the corresponding cyclic components.
class QuotientStructure {
public:
  const std::vector<Int>& invariantFactors() const { return factors_; }
  const Int& order() const { return order_; }
  // Residues of w (ambient coordinates, must lie in sup) aligned with
  // invariantFactors(); empty vector for the trivial quotient.
  IntVec classOf(const IntVec& w) const;

private:
  friend QuotientStructure quotientStructure(const Lattice& sub, const Lattice& sup);
  std::vector<Int> factors_;
  Int order_ = 1;
  Lattice sup_ = Lattice::standard(1);
  IntMatrix vTransform_;
  std::vector<int> factorPos_;
};
QuotientStructure quotientStructure(const Lattice& sub, const Lattice& sup);

// Basis of {u in Z^s : a*u = 0}, read off the SNF transforms.
std::vector<IntVec> kernelLattice(const IntMatrix& a);

// All lattice points v with lo <= v <= hi componentwise.
std::vector<IntVec> latticePointsInBox(const Lattice& l, const IntVec& lo, const IntVec& hi);

// Lattice M with Z^n <= M <= (1/k)Z^n, stored as the integer lattice k*M in
// HNF. The denominator k is minimal, so representations are canonical.
class FracLattice {
public:
  static FracLattice standard(int n);
  // Lattice generated by Z^n together with the given rational vectors.
  static FracLattice fromGenerators(int n, const std::vector<ExpVec>& gens);

  int dim() const { return scaled_.dim(); }
  const Int& denominator() const { return k_; }
  const Lattice& scaledLattice() const { return scaled_; }

  bool contains(const ExpVec& v) const;
  // k*v as an integer vector; throws UserError when v is not in the lattice.
  IntVec scaledCoords(const ExpVec& v) const;

  Int indexOverZn() const;  // [M : Z^n]
  std::vector<ExpVec> basisRows() const;
  QuotientStructure quotientByZn() const;

  bool operator==(const FracLattice& o) const { return k_ == o.k_ && scaled_ == o.scaled_; }
  bool operator!=(const FracLattice& o) const { return !(*this == o); }

private:
  FracLattice(Int k, Lattice scaled) : k_(std::move(k)), scaled_(std::move(scaled)) {}
  Int k_;
  Lattice scaled_;
};

}  // namespace puinorm
