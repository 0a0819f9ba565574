#pragma once

#include <vector>

#include "puinorm/puiseux.hpp"
#include "puinorm/semigroup.hpp"

namespace puinorm {

// All homomorphisms M/Z^n -> roots of unity, enumerated from the invariant
// factors. Character 0 is trivial; the characters separate classes.
class CharacterGroup {
public:
  explicit CharacterGroup(const FracLattice& m);

  const FracLattice& latticeM() const { return m_; }
  int order() const { return static_cast<int>(tuples_.size()); }
  unsigned long groupExponent() const { return e_; }
  const QuotientStructure& quotient() const { return quotient_; }

  // Value of character chi on the class of w; w must lie in M.
  CycloNumber value(int chi, const ExpVec& w) const;

private:
  FracLattice m_;
  QuotientStructure quotient_;
  unsigned long e_;
  std::vector<IntVec> tuples_;
};

// Monic polynomial in one distinguished variable with series coefficients:
// y^d + c_{d-1} y^{d-1} + ... + c_0.
class PolyY {
public:
  PolyY(int dim, std::vector<PuiseuxSeries> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {}

  int dim() const { return dim_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const PuiseuxSeries& coefficient(int power) const { return coeffs_[static_cast<size_t>(power)]; }
  const std::vector<PuiseuxSeries>& coefficients() const { return coeffs_; }

  bool operator==(const PolyY& o) const { return dim_ == o.dim_ && coeffs_ == o.coeffs_; }
  bool operator!=(const PolyY& o) const { return !(*this == o); }

private:
  int dim_;
  std::vector<PuiseuxSeries> coeffs_;
};

// Coefficient-wise twist of every term by the character value of its
// exponent class.
PuiseuxSeries characterTwist(const PuiseuxSeries& s, const CharacterGroup& cg, int chi);

// One twisted series per character; pairwise distinct when the group is built
// on exactly supportGroup(xi) and all coefficients are nonzero.
std::vector<PuiseuxSeries> conjugates(const PuiseuxSeries& xi, const CharacterGroup& cg);

// Product over all conjugates of (y - conjugate). Certifies on exit:
// integral nonnegative coefficient exponents, rational coefficient values
// (when the input coefficients are rational), degree = [M : Z^n], and
// exact vanishing at xi. Violations raise InternalError.
PolyY minimalPolynomial(const PuiseuxSeries& xi);

PuiseuxSeries evaluate(const PolyY& f, const PuiseuxSeries& xi);

}  // namespace puinorm
