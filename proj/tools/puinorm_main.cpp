// Command line front end: parses inputs, dispatches to the pipeline entry
// points, prints one JSON report per run.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "puinorm/report.hpp"
#include "puinorm/series_parser.hpp"

namespace {

struct CommonOpts {
  std::string expression;
  std::string inputPath;
  int vars = 0;
  std::string omega;
  std::string degreeBound;
  bool pretty = false;
  bool compact = false;
};

void addCommonOptions(CLI::App* cmd, CommonOpts& opts, const char* what) {
  cmd->add_option("expression", opts.expression, what);
  cmd->add_option("--input", opts.inputPath, "Read the input from this file instead");
  cmd->add_option("--vars", opts.vars, "Number of variables (default: inferred)");
  cmd->add_option("--omega", opts.omega, "Order weights w1,...,wn as rationals");
  cmd->add_flag("--pretty", opts.pretty, "Indent the JSON report");
  cmd->add_flag("--json", opts.compact, "Compact JSON output (default)");
}

std::string resolveInput(const CommonOpts& opts) {
  if (!opts.inputPath.empty()) {
    std::ifstream in(opts.inputPath);
    if (!in) throw puinorm::UserError("cli: cannot open input file '" + opts.inputPath + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
  }
  if (opts.expression.empty()) throw puinorm::UserError("cli: missing input expression");
  return opts.expression;
}

puinorm::RunFlags resolveFlags(const CommonOpts& opts, const std::string& input) {
  puinorm::RunFlags flags;
  flags.vars = opts.vars;
  if (!opts.omega.empty()) {
    std::vector<puinorm::Rational> ws;
    std::stringstream ss(opts.omega);
    std::string piece;
    while (std::getline(ss, piece, ',')) ws.push_back(puinorm::parseRational(piece));
    flags.omega = puinorm::ExpVec(std::move(ws));
  }
  if (!opts.degreeBound.empty()) {
    const puinorm::Rational d = puinorm::parseRational(opts.degreeBound);
    if (d.get_den() != 1 || d < 1) throw puinorm::UserError("cli: degree bound must be a positive integer");
    flags.degreeBound = d.get_num();
  }
  (void)input;
  return flags;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact normalization of Puiseux hypersurfaces and the converse construction from lattice data"};
  app.require_subcommand(1);

  CommonOpts exponentsOpts, saturateOpts, normalizeOpts, minpolyOpts, toricOpts, fromHjOpts;
  bool noMinpoly = false;
  bool noToric = false;

  auto* cmdExponents = app.add_subcommand("exponents", "Distinguished exponents and the group they span");
  addCommonOptions(cmdExponents, exponentsOpts, "Puiseux series expression");

  auto* cmdSaturate = app.add_subcommand("saturate", "Saturation: Hilbert basis, saturation and smoothness verdicts");
  addCommonOptions(cmdSaturate, saturateOpts, "Puiseux series expression");

  auto* cmdNormalize = app.add_subcommand("normalize", "Full pipeline: exponents, saturation, minimal polynomial, toric presentation");
  addCommonOptions(cmdNormalize, normalizeOpts, "Puiseux series expression");
  cmdNormalize->add_option("--degree-bound", normalizeOpts.degreeBound, "Toric generator degree bound");
  cmdNormalize->add_flag("--no-minpoly", noMinpoly, "Skip the minimal polynomial section");
  cmdNormalize->add_flag("--no-toric", noToric, "Skip the toric section");

  auto* cmdMinpoly = app.add_subcommand("minpoly", "Minimal polynomial of the series over the integral-exponent ring");
  addCommonOptions(cmdMinpoly, minpolyOpts, "Puiseux series expression");

  auto* cmdToric = app.add_subcommand("toric", "Binomial presentation of the normalization");
  addCommonOptions(cmdToric, toricOpts, "Puiseux series expression");
  cmdToric->add_option("--degree-bound", toricOpts.degreeBound, "Toric generator degree bound");

  auto* cmdFromHj = app.add_subcommand("from-hj", "Converse construction from lattice generators, e.g. \"(1,1);(1,-1)\"");
  addCommonOptions(cmdFromHj, fromHjOpts, "Lattice generators");

  CLI11_PARSE(app, argc, argv);

  try {
    const CommonOpts* opts = nullptr;
    puinorm::Json report;
    if (cmdExponents->parsed()) {
      opts = &exponentsOpts;
      const std::string input = resolveInput(*opts);
      report = puinorm::runExponents(input, resolveFlags(*opts, input));
    } else if (cmdSaturate->parsed()) {
      opts = &saturateOpts;
      const std::string input = resolveInput(*opts);
      report = puinorm::runSaturate(input, resolveFlags(*opts, input));
    } else if (cmdNormalize->parsed()) {
      opts = &normalizeOpts;
      const std::string input = resolveInput(*opts);
      puinorm::RunFlags flags = resolveFlags(*opts, input);
      flags.withMinpoly = !noMinpoly;
      flags.withToric = !noToric;
      report = puinorm::runNormalize(input, flags);
    } else if (cmdMinpoly->parsed()) {
      opts = &minpolyOpts;
      const std::string input = resolveInput(*opts);
      report = puinorm::runMinpoly(input, resolveFlags(*opts, input));
    } else if (cmdToric->parsed()) {
      opts = &toricOpts;
      const std::string input = resolveInput(*opts);
      report = puinorm::runToric(input, resolveFlags(*opts, input));
    } else {
      opts = &fromHjOpts;
      const std::string input = resolveInput(*opts);
      report = puinorm::runFromHJ(input, resolveFlags(*opts, input));
    }
    std::cout << puinorm::renderReport(report, opts->pretty) << "\n";
    return 0;
  } catch (const puinorm::UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const puinorm::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
