#include "puinorm/toric.hpp"

#include <algorithm>
#include <set>

namespace puinorm {

IntMatrix exponentMatrix(const std::vector<ExpVec>& hb, const Int& k) {
  if (hb.empty()) throw UserError("toric: empty generator list");
  const int n = hb.front().dim();
  std::vector<ExpVec> ordered = hb;
  sortCanonical(ordered);
  IntMatrix a(n, static_cast<int>(ordered.size()));
  for (size_t j = 0; j < ordered.size(); ++j) {
    const auto scaled = ordered[j].scaledIntegral(k);
    if (!scaled) throw UserError("toric: denominator not cleared");
    for (int i = 0; i < n; ++i) a(i, static_cast<int>(j)) = (*scaled)[static_cast<size_t>(i)];
  }
  return a;
}

std::vector<IntVec> enumerateFiber(const IntMatrix& a, const IntVec& b) {
  const int s = a.cols();
  std::vector<IntVec> fiber;
  IntVec u(static_cast<size_t>(s));
  IntVec rem = b;

  auto rec = [&](auto&& self, int col) -> void {
    if (col == s) {
      if (isZeroVec(rem)) fiber.push_back(u);
      return;
    }
    Int amax = -1;
    for (int i = 0; i < a.rows(); ++i) {
      if (a(i, col) > 0) {
        const Int bound = floorDiv(rem[static_cast<size_t>(i)], a(i, col));
        if (amax < 0 || bound < amax) amax = bound;
      }
    }
    for (Int c = 0; c <= amax; ++c) {
      u[static_cast<size_t>(col)] = c;
      self(self, col + 1);
      for (int i = 0; i < a.rows(); ++i) rem[static_cast<size_t>(i)] -= a(i, col);
    }
    u[static_cast<size_t>(col)] = 0;
    if (amax >= 0)
      for (int i = 0; i < a.rows(); ++i) rem[static_cast<size_t>(i)] += (amax + 1) * a(i, col);
  };
  rec(rec, 0);
  std::sort(fiber.begin(), fiber.end(), [](const IntVec& x, const IntVec& y) { return grlexLess(x, y); });
  return fiber;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); }
};

bool moveConnects(const IntVec& u, const IntVec& v, const Binomial& move) {
  const IntVec diff = vecSub(u, v);
  const IntVec mv = vecSub(move.plus, move.minus);
  return diff == mv || diff == vecNeg(mv);
}

Binomial splitParts(const IntVec& diff) {
  Binomial b;
  b.plus.resize(diff.size());
  b.minus.resize(diff.size());
  for (size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] > 0)
      b.plus[i] = diff[i];
    else
      b.minus[i] = -diff[i];
  }
  if (grlexLess(b.plus, b.minus)) std::swap(b.plus, b.minus);
  return b;
}

bool binomialLess(const Binomial& x, const Binomial& y) {
  if (x.plus != y.plus) return grlexLess(x.plus, y.plus);
  return grlexLess(x.minus, y.minus);
}

Dsu components(const std::vector<IntVec>& fiber, const std::vector<Binomial>& moves) {
  Dsu dsu(fiber.size());
  for (size_t i = 0; i < fiber.size(); ++i)
    for (size_t j = i + 1; j < fiber.size(); ++j)
      for (const auto& mv : moves)
        if (moveConnects(fiber[i], fiber[j], mv)) {
          dsu.unite(static_cast<int>(i), static_cast<int>(j));
          break;
        }
  return dsu;
}

}  // namespace

bool fiberConnected(const std::vector<IntVec>& fiber, const std::vector<Binomial>& moves) {
  if (fiber.size() < 2) return true;
  Dsu dsu = components(fiber, moves);
  const int root = dsu.find(0);
  for (size_t i = 1; i < fiber.size(); ++i)
    if (dsu.find(static_cast<int>(i)) != root) return false;
  return true;
}

std::vector<Binomial> toricBinomials(const IntMatrix& a, const Int& degreeBound) {
  if (degreeBound < 1) throw UserError("toric: degree bound must be positive");
  const int s = a.cols();
  for (int j = 0; j < s; ++j) {
    bool zero = true;
    for (int i = 0; i < a.rows(); ++i) {
      if (a(i, j) < 0) throw UserError("toric: not pointed");
      if (a(i, j) != 0) zero = false;
    }
    if (zero) throw UserError("toric: not pointed");
  }

  // all images reachable within the degree bound
  std::set<IntVec> images;
  IntVec u(static_cast<size_t>(s));
  auto enumerate = [&](auto&& self, int col, const Int& budget, IntVec img) -> void {
    if (col == s) {
      images.insert(std::move(img));
      return;
    }
    for (Int c = 0; c <= budget; ++c) {
      IntVec next = img;
      for (int i = 0; i < a.rows(); ++i) next[static_cast<size_t>(i)] += c * a(i, col);
      self(self, col + 1, Int(budget - c), std::move(next));
    }
  };
  enumerate(enumerate, 0, degreeBound, IntVec(static_cast<size_t>(a.rows())));

  std::vector<IntVec> ordered(images.begin(), images.end());
  std::sort(ordered.begin(), ordered.end(), [](const IntVec& x, const IntVec& y) { return grlexLess(x, y); });

  std::vector<Binomial> selected;
  for (const auto& b : ordered) {
    const std::vector<IntVec> fiber = enumerateFiber(a, b);
    if (fiber.size() < 2) continue;
    for (;;) {
      Dsu dsu = components(fiber, selected);
      bool connected = true;
      const int root = dsu.find(0);
      for (size_t i = 1; i < fiber.size() && connected; ++i)
        connected = dsu.find(static_cast<int>(i)) == root;
      if (connected) break;

      std::optional<Binomial> best;
      for (size_t i = 0; i < fiber.size(); ++i)
        for (size_t j = i + 1; j < fiber.size(); ++j) {
          if (dsu.find(static_cast<int>(i)) == dsu.find(static_cast<int>(j))) continue;
          Binomial cand = splitParts(vecSub(fiber[i], fiber[j]));
          if (!best || binomialLess(cand, *best)) best = std::move(cand);
        }
      selected.push_back(std::move(*best));
    }
  }
  return selected;
}

KernelCheckResult kernelCheck(const IntMatrix& a, const std::vector<Binomial>& binomials) {
  KernelCheckResult res;
  if (binomials.empty()) return res;
  const std::vector<IntVec> kernel = kernelLattice(a);
  std::optional<HnfResult> echelon;
  if (!kernel.empty()) {
    IntMatrix km = IntMatrix::fromRows(kernel);
    if (!km.isZero()) echelon = hnf(km);
  }
  for (const auto& b : binomials) {
    const IntVec diff = vecSub(b.plus, b.minus);
    const bool inside = echelon ? inRowSpan(*echelon, diff) : isZeroVec(diff);
    if (!inside) {
      res.ok = false;
      res.witness = b;
      return res;
    }
  }
  return res;
}

Int defaultDegreeBound(const IntMatrix& a) {
  Int best = 1;
  for (int j = 0; j < a.cols(); ++j) {
    Int deg = 0;
    for (int i = 0; i < a.rows(); ++i) deg += abs(a(i, j));
    if (deg > best) best = deg;
  }
  return 2 * best;
}

ToricPresentation toricPresentation(const SaturatedSemigroup& sat, const std::optional<Int>& degreeBound) {
  ToricPresentation tp;
  tp.exponentMatrix = puinorm::exponentMatrix(sat.hilbertBasis, sat.spanGroup.denominator());
  tp.degreeBound = degreeBound ? *degreeBound : defaultDegreeBound(tp.exponentMatrix);
  tp.binomials = toricBinomials(tp.exponentMatrix, tp.degreeBound);
  return tp;
}

}  // namespace puinorm
