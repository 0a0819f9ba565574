#pragma once

#include <optional>
#include <vector>

#include "puinorm/semigroup.hpp"

namespace puinorm {

// Difference of two monomials with equal image: x^plus - x^minus. The two
// vectors are nonzero with disjoint supports, plus > minus in graded-lex.
struct Binomial {
  IntVec plus;
  IntVec minus;
  bool operator==(const Binomial& o) const = default;
};

// Columns are the Hilbert-basis vectors scaled by k, in the canonical
// (descending graded-lex) listing order.
IntMatrix exponentMatrix(const std::vector<ExpVec>& hb, const Int& k);

// Degree-bounded binomial generators: fibers of every image reachable with
// |u|_1 <= degreeBound are made connected, processed in ascending graded-lex
// image order; new moves are appended canonically smallest first.
std::vector<Binomial> toricBinomials(const IntMatrix& a, const Int& degreeBound);

struct KernelCheckResult {
  bool ok = true;
  std::optional<Binomial> witness;  // first binomial outside the kernel
};

// Every binomial difference must lie in the integer kernel lattice of a.
KernelCheckResult kernelCheck(const IntMatrix& a, const std::vector<Binomial>& binomials);

Int defaultDegreeBound(const IntMatrix& a);  // 2 * max column degree

struct ToricPresentation {
  IntMatrix exponentMatrix;
  Int degreeBound;
  std::vector<Binomial> binomials;
};

ToricPresentation toricPresentation(const SaturatedSemigroup& sat, const std::optional<Int>& degreeBound);

// Full fiber {u >= 0 : a*u = b}; finite because every column is nonzero
// and nonnegative.
std::vector<IntVec> enumerateFiber(const IntMatrix& a, const IntVec& b);

// True when every listed fiber element is connected to the first one by the
// given moves.
bool fiberConnected(const std::vector<IntVec>& fiber, const std::vector<Binomial>& moves);

}  // namespace puinorm
