#include "puinorm/report.hpp"

#include <chrono>

#include "puinorm/series_parser.hpp"

namespace puinorm {

namespace {

using Clock = std::chrono::steady_clock;

long elapsedMs(Clock::time_point start) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

struct ParsedInput {
  int n = 0;
  PuiseuxSeries xi = PuiseuxSeries(1);
  MonomialOrder ord = MonomialOrder::standard(1);
};

ParsedInput parseInput(const std::string& seriesText, const RunFlags& flags) {
  ParsedInput in;
  in.n = flags.vars > 0 ? flags.vars : inferDimension(seriesText);
  in.xi = parseSeries(seriesText, in.n);
  if (flags.omega) {
    if (flags.omega->dim() != in.n) throw UserError("cli: omega dimension mismatch");
    in.ord = MonomialOrder::withWeight(*flags.omega);
  } else {
    in.ord = MonomialOrder::standard(in.n);
  }
  if (in.xi.isZero()) throw UserError("puiseux: empty support");
  return in;
}

Json header(const char* command, const std::string& input, int n, const MonomialOrder& ord) {
  Json j;
  j["command"] = command;
  j["input"] = input;
  j["vars"] = n;
  j["omega"] = expVecToJson(ord.weight);
  return j;
}

Json exponentsToJson(const DistinguishedExponents& de) {
  Json arr = Json::array();
  for (const auto& e : de.exponents) arr.push_back(expVecToJson(e));
  return arr;
}

Json hilbertBasisToJson(const std::vector<ExpVec>& hb) {
  Json arr = Json::array();
  for (const auto& h : hb) arr.push_back(expVecToJson(h));
  return arr;
}

}  // namespace

Json expVecToJson(const ExpVec& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.dim(); ++i) arr.push_back(toString(v[i]));
  return arr;
}

Json fracLatticeToJson(const FracLattice& m) {
  Json j;
  j["denominator"] = toString(m.denominator());
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.dim(); ++k) row.push_back(toString(m.scaledLattice().basis()(i, k)));
    rows.push_back(std::move(row));
  }
  j["hnf_rows"] = std::move(rows);
  j["index_over_zn"] = toString(m.indexOverZn());
  return j;
}

Json seriesToJson(const PuiseuxSeries& s) {
  Json j;
  j["text"] = seriesToString(s);
  Json terms = Json::array();
  const auto& tm = s.terms();
  for (auto it = tm.rbegin(); it != tm.rend(); ++it) {
    Json t;
    t["exponent"] = expVecToJson(it->first);
    t["coefficient"] = it->second.str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json polyToJson(const PolyY& f) {
  Json j;
  j["degree"] = f.degree();
  j["text"] = polyToString(f);
  Json coeffs = Json::array();
  for (int p = f.degree() - 1; p >= 0; --p) {
    if (f.coefficient(p).isZero()) continue;
    Json c;
    c["power"] = p;
    c["series"] = seriesToJson(f.coefficient(p));
    coeffs.push_back(std::move(c));
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

Json toricToJson(const ToricPresentation& tp) {
  Json j;
  const IntMatrix& a = tp.exponentMatrix;
  const int s = a.cols();
  Json vars = Json::array();
  for (int i = 0; i < s; ++i) vars.push_back(s <= 4 ? std::string(1, "xyzw"[i]) : "u" + std::to_string(i + 1));
  j["variables"] = std::move(vars);
  Json cols = Json::array();
  for (int c = 0; c < s; ++c) {
    Json col = Json::array();
    for (int r = 0; r < a.rows(); ++r) col.push_back(toString(a(r, c)));
    cols.push_back(std::move(col));
  }
  j["columns"] = std::move(cols);
  j["degree_bound"] = toString(tp.degreeBound);
  j["complete_up_to_degree"] = toString(tp.degreeBound);

  auto monomial = [&](const IntVec& v) {
    std::string out;
    for (int i = 0; i < s; ++i) {
      if (v[static_cast<size_t>(i)] == 0) continue;
      if (!out.empty()) out += '*';
      out += j["variables"][static_cast<size_t>(i)].get<std::string>();
      if (v[static_cast<size_t>(i)] != 1) out += "^" + v[static_cast<size_t>(i)].get_str();
    }
    return out.empty() ? std::string("1") : out;
  };

  Json bins = Json::array();
  for (const auto& b : tp.binomials) {
    Json bj;
    Json plus = Json::array();
    Json minus = Json::array();
    for (const auto& x : b.plus) plus.push_back(toString(x));
    for (const auto& x : b.minus) minus.push_back(toString(x));
    bj["plus"] = std::move(plus);
    bj["minus"] = std::move(minus);
    bj["text"] = monomial(b.plus) + " - " + monomial(b.minus);
    bins.push_back(std::move(bj));
  }
  j["binomials"] = std::move(bins);
  return j;
}

Json runExponents(const std::string& seriesText, const RunFlags& flags) {
  const auto start = Clock::now();
  const ParsedInput in = parseInput(seriesText, flags);
  const DistinguishedExponents de = distinguishedExponents(in.xi, in.ord);
  Json j = header("exponents", seriesText, in.n, in.ord);
  j["distinguished_exponents"] = exponentsToJson(de);
  j["span_group"] = fracLatticeToJson(de.terminalGroup);
  j["timing_ms"] = elapsedMs(start);
  return j;
}

Json runSaturate(const std::string& seriesText, const RunFlags& flags) {
  const auto start = Clock::now();
  const ParsedInput in = parseInput(seriesText, flags);
  const DistinguishedExponents de = distinguishedExponents(in.xi, in.ord);
  const AffineSemigroup sg(in.n, de.exponents);
  const SaturatedSemigroup sat = saturate(sg);
  Json j = header("saturate", seriesText, in.n, in.ord);
  j["distinguished_exponents"] = exponentsToJson(de);
  j["span_group"] = fracLatticeToJson(sat.spanGroup);
  j["hilbert_basis"] = hilbertBasisToJson(sat.hilbertBasis);
  j["saturated"] = isSaturated(sg);
  j["smooth"] = isSmooth(sat.spanGroup);
  j["timing_ms"] = elapsedMs(start);
  return j;
}

Json runNormalize(const std::string& seriesText, const RunFlags& flags) {
  const auto start = Clock::now();
  const ParsedInput in = parseInput(seriesText, flags);
  const DistinguishedExponents de = distinguishedExponents(in.xi, in.ord);
  const AffineSemigroup sg(in.n, de.exponents);
  const SaturatedSemigroup sat = saturate(sg);

  Json j = header("normalize", seriesText, in.n, in.ord);
  j["distinguished_exponents"] = exponentsToJson(de);
  j["span_group"] = fracLatticeToJson(sat.spanGroup);
  j["hilbert_basis"] = hilbertBasisToJson(sat.hilbertBasis);
  j["saturated"] = isSaturated(sg);
  j["smooth"] = isSmooth(sat.spanGroup);
  if (flags.withMinpoly) j["minimal_polynomial"] = polyToJson(minimalPolynomial(in.xi));
  if (flags.withToric) j["toric"] = toricToJson(toricPresentation(sat, flags.degreeBound));
  j["timing_ms"] = elapsedMs(start);
  return j;
}

Json runMinpoly(const std::string& seriesText, const RunFlags& flags) {
  const auto start = Clock::now();
  const ParsedInput in = parseInput(seriesText, flags);
  Json j = header("minpoly", seriesText, in.n, in.ord);
  j["minimal_polynomial"] = polyToJson(minimalPolynomial(in.xi));
  j["timing_ms"] = elapsedMs(start);
  return j;
}

Json runToric(const std::string& seriesText, const RunFlags& flags) {
  const auto start = Clock::now();
  const ParsedInput in = parseInput(seriesText, flags);
  const DistinguishedExponents de = distinguishedExponents(in.xi, in.ord);
  const SaturatedSemigroup sat = saturate(AffineSemigroup(in.n, de.exponents));
  Json j = header("toric", seriesText, in.n, in.ord);
  j["hilbert_basis"] = hilbertBasisToJson(sat.hilbertBasis);
  j["toric"] = toricToJson(toricPresentation(sat, flags.degreeBound));
  j["timing_ms"] = elapsedMs(start);
  return j;
}

Json runFromHJ(const std::string& latticeSpec, const RunFlags& flags) {
  const auto start = Clock::now();
  const std::vector<IntVec> rows = parseLatticeSpec(latticeSpec);
  const int n = static_cast<int>(rows.front().size());
  if (flags.vars > 0 && flags.vars != n) throw UserError("cli: --vars conflicts with the tuple length");
  MonomialOrder ord = MonomialOrder::standard(n);
  if (flags.omega) {
    if (flags.omega->dim() != n) throw UserError("cli: omega dimension mismatch");
    ord = MonomialOrder::withWeight(*flags.omega);
  }
  HJInput input{Lattice::fromGenerators(rows, n)};
  const HJResult res = hjToPuiseux(input, ord);

  Json j = header("from-hj", latticeSpec, n, ord);
  Json m = Json::array();
  for (const auto& mi : res.m.m) m.push_back(toString(mi));
  j["m_vector"] = std::move(m);
  j["l_prime"] = fracLatticeToJson(res.lPrime);
  j["distinguished_exponents"] = exponentsToJson(res.exponents);
  j["series"] = seriesToJson(res.xi);
  j["hilbert_basis"] = hilbertBasisToJson(hilbertBasis(res.lPrime));
  j["smooth"] = res.smooth;
  j["round_trip_ok"] = res.roundTripOk;
  if (flags.withMinpoly) j["minimal_polynomial"] = polyToJson(res.f);
  j["timing_ms"] = elapsedMs(start);
  return j;
}

std::string renderReport(const Json& report, bool pretty) {
  return pretty ? report.dump(2) : report.dump();
}

}  // namespace puinorm
