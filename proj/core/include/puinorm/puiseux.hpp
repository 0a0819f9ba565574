#pragma once

#include <map>
#include <vector>

#include "puinorm/cyclotomic.hpp"
#include "puinorm/lattice.hpp"

namespace puinorm {

// Finite-support series with exponents in (Q>=0)^n and cyclotomic
// coefficients. Zero coefficients are never stored.
class PuiseuxSeries {
public:
  using TermMap = std::map<ExpVec, CycloNumber, GrlexLess>;

  explicit PuiseuxSeries(int dim) : dim_(dim) {
    if (dim < 1) throw UserError("puiseux: dimension must be positive");
  }
  static PuiseuxSeries monomial(int dim, const ExpVec& e, const CycloNumber& c);
  static PuiseuxSeries constant(int dim, const CycloNumber& c);

  int dim() const { return dim_; }
  bool isZero() const { return terms_.empty(); }
  int termCount() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  // Accumulates c onto the coefficient at e; drops the term when it cancels.
  void addTerm(const ExpVec& e, const CycloNumber& c);

  std::vector<ExpVec> support() const;  // ascending graded-lex
  Int supportDenominatorLcm() const;
  bool allExponentsIntegral() const;
  bool allCoefficientsRational() const;

  PuiseuxSeries operator-() const;
  PuiseuxSeries operator+(const PuiseuxSeries& o) const;
  PuiseuxSeries operator-(const PuiseuxSeries& o) const;
  PuiseuxSeries operator*(const PuiseuxSeries& o) const;

  bool operator==(const PuiseuxSeries& o) const;
  bool operator!=(const PuiseuxSeries& o) const { return !(*this == o); }

private:
  int dim_;
  TermMap terms_;
};

// Total additive order on (Q>=0)^n: rational weight first, lexicographic
// tie-break with coordinate 1 most significant. The tie-break realizes an
// infinitesimal perturbation of the weight, so the order is total even for
// rational weights.
struct MonomialOrder {
  ExpVec weight;

  static MonomialOrder standard(int n);
  static MonomialOrder withWeight(ExpVec w);

  bool less(const ExpVec& a, const ExpVec& b) const;
};

// -1, 0, +1 comparison of a and b under the order.
int omegaCompare(const ExpVec& a, const ExpVec& b, const MonomialOrder& ord);

struct DistinguishedExponents {
  std::vector<ExpVec> exponents;  // in selection order
  FracLattice terminalGroup = FracLattice::standard(1);
};

// Group generated by Z^n and the support of the series.
FracLattice supportGroup(const PuiseuxSeries& xi);

// Greedy selection: repeatedly take the order-minimal support element outside
// the group generated so far, until the support is exhausted.
DistinguishedExponents distinguishedExponents(const PuiseuxSeries& xi, const MonomialOrder& ord);

}  // namespace puinorm
