#pragma once

#include <string>
#include <vector>

#include "puinorm/minpoly.hpp"
#include "puinorm/puiseux.hpp"

namespace puinorm {

// Grammar:
//   series   := sign? term (('+'|'-') term)*
//   term     := factor ('*'? factor)*
//   factor   := rational | zeta | var ('^' exponent)?
//   exponent := integer | '(' integer '/' integer ')'
//   zeta     := 'zeta' '(' integer ')' ('^' integer)?
//   rational := integer ('/' integer)?
// Variables are x1..xn; x, y, z, w alias x1..x4 when n <= 4. Whitespace is
// ignored; like terms merge; zero terms are dropped.
PuiseuxSeries parseSeries(const std::string& text, int n);

// Largest variable index mentioned (1 when no variable occurs).
int inferDimension(const std::string& text);

// Semicolon-separated integer tuples: "(1,1);(1,-1)".
std::vector<IntVec> parseLatticeSpec(const std::string& text);

std::string variableName(int index, int n);  // aliases for n <= 4
std::string monomialToString(const ExpVec& e, int n);

// Canonical rendering, parseable by parseSeries: terms leading-first, one
// printed term per cyclotomic basis element of each coefficient.
std::string seriesToString(const PuiseuxSeries& s);

// Human-readable display of a monic polynomial in y.
std::string polyToString(const PolyY& f);

}  // namespace puinorm
