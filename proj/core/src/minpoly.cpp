#include "puinorm/minpoly.hpp"

#include <sstream>

namespace puinorm {

CharacterGroup::CharacterGroup(const FracLattice& m) : m_(m), quotient_(m.quotientByZn()) {
  const auto& factors = quotient_.invariantFactors();
  e_ = factors.empty() ? 1 : static_cast<unsigned long>(factors.back().get_ui());

  // odometer enumeration, last digit fastest; the all-zero tuple comes first
  IntVec tuple(factors.size());
  for (;;) {
    tuples_.push_back(tuple);
    size_t i = factors.size();
    while (i > 0) {
      --i;
      ++tuple[i];
      if (tuple[i] < factors[i]) break;
      tuple[i] = 0;
      if (i == 0) return;
    }
    if (factors.empty()) return;
  }
}

CycloNumber CharacterGroup::value(int chi, const ExpVec& w) const {
  if (!m_.contains(w)) throw UserError("minpoly: support not contained in M");
  const IntVec cls = quotient_.classOf(m_.scaledCoords(w));
  const IntVec& a = tuples_[static_cast<size_t>(chi)];
  const auto& factors = quotient_.invariantFactors();
  Int s = 0;
  const Int e(e_);
  for (size_t i = 0; i < factors.size(); ++i) {
    Int scale;
    mpz_divexact(scale.get_mpz_t(), e.get_mpz_t(), factors[i].get_mpz_t());
    s += scale * a[i] * cls[i];
  }
  return CycloNumber::rootOfUnity(e_, s);
}

PuiseuxSeries characterTwist(const PuiseuxSeries& s, const CharacterGroup& cg, int chi) {
  PuiseuxSeries out(s.dim());
  for (const auto& [e, c] : s.terms()) out.addTerm(e, c * cg.value(chi, e));
  return out;
}

std::vector<PuiseuxSeries> conjugates(const PuiseuxSeries& xi, const CharacterGroup& cg) {
  for (const auto& e : xi.support())
    if (!cg.latticeM().contains(e)) throw UserError("minpoly: support not contained in M");
  std::vector<PuiseuxSeries> out;
  out.reserve(static_cast<size_t>(cg.order()));
  for (int chi = 0; chi < cg.order(); ++chi) out.push_back(characterTwist(xi, cg, chi));
  return out;
}

namespace {

std::string offendingMonomial(const PuiseuxSeries& s, bool wantIrrationalCoefficient) {
  for (const auto& [e, c] : s.terms()) {
    if (wantIrrationalCoefficient ? !c.isRational() : !e.isIntegral()) {
      std::ostringstream os;
      os << "coefficient " << c.str() << " at X^" << toString(e);
      return os.str();
    }
  }
  return "unknown monomial";
}

}  // namespace

PolyY minimalPolynomial(const PuiseuxSeries& xi) {
  if (xi.isZero()) throw UserError("minpoly: empty support");
  const int n = xi.dim();
  const FracLattice m = supportGroup(xi);
  const CharacterGroup cg(m);
  const std::vector<PuiseuxSeries> conj = conjugates(xi, cg);

  // expand prod (y - conj) one linear factor at a time
  std::vector<PuiseuxSeries> coeffs;  // c_0..c_{d-1}, monic top implicit
  for (const auto& root : conj) {
    const PuiseuxSeries neg = -root;
    std::vector<PuiseuxSeries> next;
    next.reserve(coeffs.size() + 1);
    for (size_t j = 0; j <= coeffs.size(); ++j) {
      PuiseuxSeries term = j < coeffs.size() ? coeffs[j] * neg : neg;
      if (j > 0) term = term + coeffs[j - 1];
      next.push_back(std::move(term));
    }
    coeffs = std::move(next);
  }
  PolyY f(n, std::move(coeffs));

  const bool rationalInput = xi.allCoefficientsRational();
  for (int j = 0; j < f.degree(); ++j) {
    const PuiseuxSeries& c = f.coefficient(j);
    if (!c.allExponentsIntegral())
      throw InternalError("minpoly: non-integral exponent in coefficient of y^" + std::to_string(j) +
                          " (" + offendingMonomial(c, false) + ")");
    if (rationalInput && !c.allCoefficientsRational())
      throw InternalError("minpoly: irrational value in coefficient of y^" + std::to_string(j) +
                          " (" + offendingMonomial(c, true) + ")");
  }
  if (Int(f.degree()) != m.indexOverZn())
    throw InternalError("minpoly: degree does not match the lattice index");
  if (!evaluate(f, xi).isZero()) throw InternalError("minpoly: series is not a root of its minimal polynomial");
  return f;
}

PuiseuxSeries evaluate(const PolyY& f, const PuiseuxSeries& xi) {
  if (f.dim() != xi.dim()) throw UserError("minpoly: dimension mismatch");
  PuiseuxSeries acc = PuiseuxSeries::constant(f.dim(), CycloNumber::fromRational(1));
  for (int j = f.degree() - 1; j >= 0; --j) acc = acc * xi + f.coefficient(j);
  return acc;
}

}  // namespace puinorm
