#include "puinorm/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace puinorm {

unsigned long eulerPhi(unsigned long n) {
  unsigned long phi = n;
  unsigned long m = n;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    phi -= phi / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) phi -= phi / m;
  return phi;
}

namespace {

// exact division of integer polynomials, divisor monic
std::vector<Int> polyDivExact(const std::vector<Int>& num, const std::vector<Int>& den) {
  std::vector<Int> rem = num;
  const size_t dd = den.size() - 1;
  std::vector<Int> quot(rem.size() - dd);
  for (size_t i = rem.size(); i-- > dd;) {
    Int c = rem[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw InternalError("cyclotomic: inexact polynomial division");
  return quot;
}

std::vector<Int> computeCyclotomic(unsigned long n) {
  // t^n - 1 divided by the cyclotomic polynomials of all proper divisors
  std::vector<Int> poly(n + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d) continue;
    poly = polyDivExact(poly, cyclotomicPolynomial(d));
  }
  return poly;
}

}  // namespace

const std::vector<Int>& cyclotomicPolynomial(unsigned long n) {
  if (n < 1) throw UserError("cyclotomic: order must be positive");
  static std::mutex mu;
  static std::map<unsigned long, std::vector<Int>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Int> value = n == 1 ? std::vector<Int>{-1, 1} : computeCyclotomic(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(value)).first->second;
}

std::vector<Rational> CycloNumber::reduceMod(std::vector<Rational> poly, unsigned long n) {
  const std::vector<Int>& phiPoly = cyclotomicPolynomial(n);
  const size_t deg = phiPoly.size() - 1;  // = eulerPhi(n)
  for (size_t i = poly.size(); i-- > deg;) {
    Rational c = poly[i];
    if (c == 0) continue;
    poly[i] = 0;
    for (size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * phiPoly[j];
  }
  poly.resize(deg);
  return poly;
}

CycloNumber CycloNumber::fromRational(const Rational& r) {
  std::vector<Rational> c(1);
  c[0] = r;
  return CycloNumber(1, std::move(c));
}

CycloNumber CycloNumber::rootOfUnity(unsigned long n, const Int& power) {
  if (n < 1) throw UserError("cyclotomic: order must be positive");
  Int pm;
  Int nz(static_cast<unsigned long>(n));
  mpz_fdiv_r(pm.get_mpz_t(), power.get_mpz_t(), nz.get_mpz_t());
  const unsigned long j = pm.get_ui();
  std::vector<Rational> poly(j + 1);
  poly[j] = 1;
  return CycloNumber(n, reduceMod(std::move(poly), n));
}

bool CycloNumber::isZero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool CycloNumber::isRational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycloNumber::rationalValue() const {
  if (!isRational()) throw InternalError("cyclotomic: value is not rational");
  return c_[0];
}

CycloNumber CycloNumber::embeddedInto(unsigned long m) const {
  if (m == n_) return *this;
  if (m % n_) throw InternalError("cyclotomic: conductor does not embed");
  const unsigned long stride = m / n_;
  std::vector<Rational> poly((c_.size() - 1) * stride + 1);
  for (size_t i = 0; i < c_.size(); ++i) poly[i * stride] = c_[i];
  return CycloNumber(m, reduceMod(std::move(poly), m));
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
  const unsigned long m = std::lcm(n_, o.n_);
  CycloNumber a = embeddedInto(m);
  const CycloNumber b = o.embeddedInto(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const { return *this + (-o); }

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
  const unsigned long m = std::lcm(n_, o.n_);
  const CycloNumber a = embeddedInto(m);
  const CycloNumber b = o.embeddedInto(m);
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return CycloNumber(m, reduceMod(std::move(prod), m));
}

CycloNumber CycloNumber::operator*(const Rational& r) const {
  CycloNumber out = *this;
  for (auto& x : out.c_) x *= r;
  return out;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  *this = *this + o;
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  *this = *this * o;
  return *this;
}

bool CycloNumber::operator==(const CycloNumber& o) const {
  const unsigned long m = std::lcm(n_, o.n_);
  return embeddedInto(m).c_ == o.embeddedInto(m).c_;
}

std::string CycloNumber::str() const {
  if (isRational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    Rational mag = c_[j] > 0 ? c_[j] : Rational(-c_[j]);
    if (first) {
      if (c_[j] < 0) os << '-';
      first = false;
    } else {
      os << (c_[j] < 0 ? " - " : " + ");
    }
    if (j == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << "zeta(" << n_ << ')';
    if (j > 1) os << '^' << j;
  }
  return os.str();
}

}  // namespace puinorm
