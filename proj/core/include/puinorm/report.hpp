#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "puinorm/hj.hpp"
#include "puinorm/toric.hpp"

namespace puinorm {

using Json = nlohmann::ordered_json;

struct RunFlags {
  int vars = 0;  // 0 = infer from the expression
  std::optional<ExpVec> omega;
  std::optional<Int> degreeBound;
  bool withMinpoly = true;
  bool withToric = true;
};

// Forward pipeline over a series expression. Sections follow the subcommand:
// "exponents" stops after exponent selection, "saturate" adds the Hilbert
// basis and verdicts, "normalize" runs everything, "minpoly"/"toric" report
// just their section.
Json runExponents(const std::string& seriesText, const RunFlags& flags);
Json runSaturate(const std::string& seriesText, const RunFlags& flags);
Json runNormalize(const std::string& seriesText, const RunFlags& flags);
Json runMinpoly(const std::string& seriesText, const RunFlags& flags);
Json runToric(const std::string& seriesText, const RunFlags& flags);

// Converse pipeline over a lattice spec.
Json runFromHJ(const std::string& latticeSpec, const RunFlags& flags);

std::string renderReport(const Json& report, bool pretty);

// Serialization helpers shared with the test suites.
Json expVecToJson(const ExpVec& v);
Json fracLatticeToJson(const FracLattice& m);
Json seriesToJson(const PuiseuxSeries& s);
Json polyToJson(const PolyY& f);
Json toricToJson(const ToricPresentation& tp);

}  // namespace puinorm
