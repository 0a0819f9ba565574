#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "puinorm/errors.hpp"

namespace puinorm {

using Int = mpz_class;
using Rational = mpq_class;

// Canonicalized p/q with q > 0.
Rational makeRational(long num, long den = 1);
Rational makeRational(const Int& num, const Int& den);

// Accepts "p" and "p/q"; throws UserError on malformed text or q = 0.
Rational parseRational(const std::string& text);

std::string toString(const Rational& q);
std::string toString(const Int& z);

Int floorDiv(const Int& a, const Int& b);
Int ceilDiv(const Int& a, const Int& b);
Int rationalFloor(const Rational& q);

// Exponent vector in Q^n. Entries are exact; semigroup and series code keeps
// them >= 0, lattice code uses signed entries freely.
class ExpVec {
public:
  ExpVec() = default;
  explicit ExpVec(int dim) : e_(static_cast<size_t>(dim)) {}
  explicit ExpVec(std::vector<Rational> entries) : e_(std::move(entries)) {}
  static ExpVec unit(int dim, int axis);

  int dim() const { return static_cast<int>(e_.size()); }
  const Rational& operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return e_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& entries() const { return e_; }

  Rational totalDegree() const;
  bool isZero() const;
  bool isIntegral() const;
  bool isNonNegative() const;

  // lcm of entry denominators (1 for the zero vector).
  Int denominatorLcm() const;

  // k*this as integers; nullopt when some entry k*e_i is not integral.
  std::optional<std::vector<Int>> scaledIntegral(const Int& k) const;

  ExpVec operator+(const ExpVec& o) const;
  ExpVec operator-(const ExpVec& o) const;
  ExpVec scaled(const Rational& c) const;

  bool operator==(const ExpVec& o) const { return e_ == o.e_; }
  bool operator!=(const ExpVec& o) const { return !(*this == o); }

private:
  std::vector<Rational> e_;
};

// Graded-lexicographic comparison: total degree, then entry-wise with
// coordinate 1 most significant.
bool grlexLess(const ExpVec& a, const ExpVec& b);

struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const { return grlexLess(a, b); }
};

// Listing convention used by every serialized output: descending graded-lex
// (leading monomial first).
void sortCanonical(std::vector<ExpVec>& v);

std::string toString(const ExpVec& v);  // "(p/q, ...)" debug form

}  // namespace puinorm
