#include "puinorm/rational.hpp"

#include <algorithm>
#include <sstream>

namespace puinorm {

Rational makeRational(long num, long den) {
  if (den == 0) throw UserError("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational makeRational(const Int& num, const Int& den) {
  if (den == 0) throw UserError("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parseRational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return makeRational(num, den);
  } catch (const std::invalid_argument&) {
    throw UserError("rational: malformed value '" + text + "'");
  }
}

std::string toString(const Rational& q) { return q.get_str(); }
std::string toString(const Int& z) { return z.get_str(); }

Int floorDiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceilDiv(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int rationalFloor(const Rational& q) { return floorDiv(q.get_num(), q.get_den()); }

ExpVec ExpVec::unit(int dim, int axis) {
  ExpVec v(dim);
  v[axis] = 1;
  return v;
}

Rational ExpVec::totalDegree() const {
  Rational s = 0;
  for (const auto& x : e_) s += x;
  return s;
}

bool ExpVec::isZero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x == 0; });
}

bool ExpVec::isIntegral() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool ExpVec::isNonNegative() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x >= 0; });
}

Int ExpVec::denominatorLcm() const {
  Int k = 1;
  for (const auto& x : e_) {
    const Int d = x.get_den();
    Int l;
    mpz_lcm(l.get_mpz_t(), k.get_mpz_t(), d.get_mpz_t());
    k = l;
  }
  return k;
}

std::optional<std::vector<Int>> ExpVec::scaledIntegral(const Int& k) const {
  std::vector<Int> out;
  out.reserve(e_.size());
  for (const auto& x : e_) {
    Rational s = x * k;
    s.canonicalize();
    if (s.get_den() != 1) return std::nullopt;
    out.push_back(s.get_num());
  }
  return out;
}

ExpVec ExpVec::operator+(const ExpVec& o) const {
  if (dim() != o.dim()) throw UserError("exponent: dimension mismatch");
  ExpVec r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = e_[static_cast<size_t>(i)] + o[i];
  return r;
}

ExpVec ExpVec::operator-(const ExpVec& o) const {
  if (dim() != o.dim()) throw UserError("exponent: dimension mismatch");
  ExpVec r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = e_[static_cast<size_t>(i)] - o[i];
  return r;
}

ExpVec ExpVec::scaled(const Rational& c) const {
  ExpVec r(dim());
  for (int i = 0; i < dim(); ++i) {
    r[i] = e_[static_cast<size_t>(i)] * c;
    r[i].canonicalize();
  }
  return r;
}

bool grlexLess(const ExpVec& a, const ExpVec& b) {
  if (a.dim() != b.dim()) throw UserError("exponent: dimension mismatch");
  const Rational da = a.totalDegree();
  const Rational db = b.totalDegree();
  if (da != db) return da < db;
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

void sortCanonical(std::vector<ExpVec>& v) {
  std::sort(v.begin(), v.end(), [](const ExpVec& a, const ExpVec& b) { return grlexLess(b, a); });
}

std::string toString(const ExpVec& v) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace puinorm
