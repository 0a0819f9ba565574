#include "puinorm/puiseux.hpp"

#include <algorithm>

namespace puinorm {

PuiseuxSeries PuiseuxSeries::monomial(int dim, const ExpVec& e, const CycloNumber& c) {
  PuiseuxSeries s(dim);
  s.addTerm(e, c);
  return s;
}

PuiseuxSeries PuiseuxSeries::constant(int dim, const CycloNumber& c) {
  return monomial(dim, ExpVec(dim), c);
}

void PuiseuxSeries::addTerm(const ExpVec& e, const CycloNumber& c) {
  if (e.dim() != dim_) throw UserError("puiseux: dimension mismatch");
  if (!e.isNonNegative()) throw UserError("puiseux: exponents must be nonnegative");
  if (c.isZero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

std::vector<ExpVec> PuiseuxSeries::support() const {
  std::vector<ExpVec> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

Int PuiseuxSeries::supportDenominatorLcm() const {
  Int k = 1;
  for (const auto& [e, c] : terms_) {
    const Int d = e.denominatorLcm();
    Int l;
    mpz_lcm(l.get_mpz_t(), k.get_mpz_t(), d.get_mpz_t());
    k = l;
  }
  return k;
}

bool PuiseuxSeries::allExponentsIntegral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.isIntegral(); });
}

bool PuiseuxSeries::allCoefficientsRational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.isRational(); });
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

PuiseuxSeries PuiseuxSeries::operator+(const PuiseuxSeries& o) const {
  if (dim_ != o.dim_) throw UserError("puiseux: dimension mismatch");
  PuiseuxSeries r = *this;
  for (const auto& [e, c] : o.terms_) r.addTerm(e, c);
  return r;
}

PuiseuxSeries PuiseuxSeries::operator-(const PuiseuxSeries& o) const { return *this + (-o); }

PuiseuxSeries PuiseuxSeries::operator*(const PuiseuxSeries& o) const {
  if (dim_ != o.dim_) throw UserError("puiseux: dimension mismatch");
  PuiseuxSeries r(dim_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.addTerm(ea + eb, ca * cb);
  return r;
}

bool PuiseuxSeries::operator==(const PuiseuxSeries& o) const {
  if (dim_ != o.dim_ || terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

MonomialOrder MonomialOrder::standard(int n) {
  ExpVec w(n);
  for (int i = 0; i < n; ++i) w[i] = 1;
  return MonomialOrder{std::move(w)};
}

MonomialOrder MonomialOrder::withWeight(ExpVec w) {
  for (int i = 0; i < w.dim(); ++i)
    if (w[i] <= 0) throw UserError("puiseux: order weights must be positive");
  return MonomialOrder{std::move(w)};
}

bool MonomialOrder::less(const ExpVec& a, const ExpVec& b) const {
  if (a.dim() != b.dim() || a.dim() != weight.dim()) throw UserError("puiseux: dimension mismatch");
  Rational wa = 0;
  Rational wb = 0;
  for (int i = 0; i < a.dim(); ++i) {
    wa += a[i] * weight[i];
    wb += b[i] * weight[i];
  }
  if (wa != wb) return wa < wb;
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

int omegaCompare(const ExpVec& a, const ExpVec& b, const MonomialOrder& ord) {
  if (ord.less(a, b)) return -1;
  if (ord.less(b, a)) return 1;
  return 0;
}

FracLattice supportGroup(const PuiseuxSeries& xi) {
  if (xi.isZero()) throw UserError("puiseux: empty support");
  return FracLattice::fromGenerators(xi.dim(), xi.support());
}

DistinguishedExponents distinguishedExponents(const PuiseuxSeries& xi, const MonomialOrder& ord) {
  const int n = xi.dim();
  const std::vector<ExpVec> supp = xi.support();

  DistinguishedExponents out;
  out.terminalGroup = FracLattice::standard(n);

  // index over Z^n at least doubles per step, so g <= n*log2(k)
  const Int k = xi.supportDenominatorLcm();
  size_t maxSteps = 1;
  for (Int t = k; t > 1; t = ceilDiv(t, 2)) maxSteps += static_cast<size_t>(n);

  for (;;) {
    const ExpVec* best = nullptr;
    for (const auto& e : supp) {
      if (out.terminalGroup.contains(e)) continue;
      if (!best || ord.less(e, *best)) best = &e;
    }
    if (!best) break;
    out.exponents.push_back(*best);
    std::vector<ExpVec> gens = out.exponents;
    out.terminalGroup = FracLattice::fromGenerators(n, gens);
    if (out.exponents.size() > maxSteps) throw InternalError("puiseux: exponent selection failed to terminate");
  }
  return out;
}

}  // namespace puinorm
