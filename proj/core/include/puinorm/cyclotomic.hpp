#pragma once

#include <string>
#include <vector>

#include "puinorm/rational.hpp"

namespace puinorm {

unsigned long eulerPhi(unsigned long n);

// Coefficients of the N-th cyclotomic polynomial, constant term first.
// Cached; safe to call from multiple threads.
const std::vector<Int>& cyclotomicPolynomial(unsigned long n);

// Element of Q(zeta_N): canonical representative of degree < phi(N) in the
// power basis, reduced modulo the N-th cyclotomic polynomial. The conductor
// is not forced to be minimal; equality embeds into a common conductor.
class CycloNumber {
public:
  CycloNumber() : n_(1), c_(1) {}
  static CycloNumber fromRational(const Rational& r);
  static CycloNumber rootOfUnity(unsigned long n, const Int& power);

  unsigned long conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool isZero() const;
  bool isRational() const;
  // Canonical rational value; throws InternalError when not rational.
  Rational rationalValue() const;

  CycloNumber embeddedInto(unsigned long m) const;

  CycloNumber operator-() const;
  CycloNumber operator+(const CycloNumber& o) const;
  CycloNumber operator-(const CycloNumber& o) const;
  CycloNumber operator*(const CycloNumber& o) const;
  CycloNumber operator*(const Rational& r) const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);

  bool operator==(const CycloNumber& o) const;
  bool operator!=(const CycloNumber& o) const { return !(*this == o); }

  // "p/q" for rationals, otherwise a sum of "c*zeta(N)^j" terms.
  std::string str() const;

private:
  CycloNumber(unsigned long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  static std::vector<Rational> reduceMod(std::vector<Rational> poly, unsigned long n);

  unsigned long n_;
  std::vector<Rational> c_;  // size phi(n_)
};

}  // namespace puinorm
