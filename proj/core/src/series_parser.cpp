#include "puinorm/series_parser.hpp"

#include <cctype>
#include <sstream>

namespace puinorm {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool atEnd() {
    skipSpace();
    return pos >= text.size();
  }
  char peek() {
    skipSpace();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw UserError("cli: syntax error at position " + std::to_string(pos) + ": " + msg);
  }

  Int integer() {
    skipSpace();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    skipSpace();
    const size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    Int v(text.substr(start, pos - start));
    return neg ? Int(-v) : v;
  }

  std::string ident() {
    skipSpace();
    const size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])))) ++pos;
    return text.substr(start, pos - start);
  }
};

int variableIndex(Cursor& cur, const std::string& name, int n) {
  if (name == "x" && n <= 4) return 0;
  if (name == "y" && n >= 2 && n <= 4) return 1;
  if (name == "z" && n >= 3 && n <= 4) return 2;
  if (name == "w" && n == 4) return 3;
  if (name.size() > 1 && name[0] == 'x') {
    bool digits = true;
    for (size_t i = 1; i < name.size() && digits; ++i) digits = std::isdigit(static_cast<unsigned char>(name[i]));
    if (digits) {
      const int idx = std::stoi(name.substr(1));
      if (idx >= 1 && idx <= n) return idx - 1;
    }
  }
  cur.fail("unknown variable '" + name + "'");
}

Rational parseExponent(Cursor& cur) {
  Rational e;
  if (cur.consume('(')) {
    const Int num = cur.integer();
    cur.expect('/');
    const Int den = cur.integer();
    cur.expect(')');
    if (den == 0) cur.fail("zero denominator in exponent");
    e = makeRational(num, den);
  } else {
    e = Rational(cur.integer());
  }
  if (e < 0) throw UserError("cli: exponents must be nonnegative");
  return e;
}

// one multiplicative factor; updates either the coefficient or the exponent
void parseFactor(Cursor& cur, int n, CycloNumber& coeff, ExpVec& exps) {
  const char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    const Int num = cur.integer();
    if (cur.consume('/')) {
      const Int den = cur.integer();
      if (den == 0) cur.fail("zero denominator");
      coeff *= CycloNumber::fromRational(makeRational(num, den));
    } else {
      coeff *= CycloNumber::fromRational(Rational(num));
    }
    return;
  }
  if (!std::isalpha(static_cast<unsigned char>(c))) cur.fail("expected a factor");
  const size_t namePos = cur.pos;
  const std::string name = cur.ident();
  if (name == "zeta") {
    cur.expect('(');
    const Int order = cur.integer();
    cur.expect(')');
    if (order < 1) cur.fail("root of unity order must be positive");
    Int power = 1;
    if (cur.consume('^')) power = cur.integer();
    coeff *= CycloNumber::rootOfUnity(order.get_ui(), power);
    return;
  }
  cur.pos = namePos;  // reparse as a variable for error positions
  const std::string var = cur.ident();
  const int idx = variableIndex(cur, var, n);
  Rational e = 1;
  if (cur.consume('^')) e = parseExponent(cur);
  exps[idx] += e;
}

bool startsFactor(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
}

}  // namespace

PuiseuxSeries parseSeries(const std::string& text, int n) {
  if (n < 1) throw UserError("cli: dimension must be positive");
  Cursor cur{text};
  if (cur.atEnd()) throw UserError("cli: empty series expression");

  PuiseuxSeries series(n);
  bool first = true;
  while (!cur.atEnd()) {
    int sign = 1;
    if (cur.consume('-'))
      sign = -1;
    else if (cur.consume('+')) {
      if (first) {
        // explicit leading plus
      }
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;

    CycloNumber coeff = CycloNumber::fromRational(Rational(sign));
    ExpVec exps(n);
    if (!startsFactor(cur.peek())) cur.fail("expected a term");
    parseFactor(cur, n, coeff, exps);
    for (;;) {
      if (cur.consume('*')) {
        if (!startsFactor(cur.peek())) cur.fail("expected a factor after '*'");
        parseFactor(cur, n, coeff, exps);
        continue;
      }
      if (startsFactor(cur.peek())) {
        parseFactor(cur, n, coeff, exps);
        continue;
      }
      break;
    }
    series.addTerm(exps, coeff);
  }
  return series;
}

int inferDimension(const std::string& text) {
  Cursor cur{text};
  int best = 1;
  while (!cur.atEnd()) {
    const char c = cur.peek();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = cur.ident();
      if (name == "zeta") continue;
      if (name == "y") best = std::max(best, 2);
      else if (name == "z") best = std::max(best, 3);
      else if (name == "w") best = std::max(best, 4);
      else if (name.size() > 1 && name[0] == 'x') {
        bool digits = true;
        for (size_t i = 1; i < name.size() && digits; ++i)
          digits = std::isdigit(static_cast<unsigned char>(name[i]));
        if (digits) best = std::max(best, std::stoi(name.substr(1)));
      }
    } else {
      ++cur.pos;
    }
  }
  return best;
}

std::vector<IntVec> parseLatticeSpec(const std::string& text) {
  Cursor cur{text};
  std::vector<IntVec> rows;
  for (;;) {
    cur.expect('(');
    IntVec row;
    row.push_back(cur.integer());
    while (cur.consume(',')) row.push_back(cur.integer());
    cur.expect(')');
    if (!rows.empty() && rows.front().size() != row.size())
      cur.fail("tuples of unequal length");
    rows.push_back(std::move(row));
    if (!cur.consume(';')) break;
  }
  if (!cur.atEnd()) cur.fail("trailing input after lattice tuples");
  return rows;
}

std::string variableName(int index, int n) {
  static const char* alias[] = {"x", "y", "z", "w"};
  if (n <= 4) return alias[index];
  return "x" + std::to_string(index + 1);
}

namespace {

std::string exponentToString(const Rational& e) {
  if (e.get_den() == 1) return e.get_num().get_str();
  return "(" + e.get_str() + ")";
}

}  // namespace

std::string monomialToString(const ExpVec& e, int n) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (any) os << '*';
    os << variableName(i, n);
    if (e[i] != 1) os << '^' << exponentToString(e[i]);
    any = true;
  }
  return any ? os.str() : std::string();
}

std::string seriesToString(const PuiseuxSeries& s) {
  if (s.isZero()) return "0";
  std::ostringstream os;
  bool first = true;

  // leading terms first; each cyclotomic basis component prints separately so
  // the output re-parses to the same term map
  const auto& terms = s.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const ExpVec& e = it->first;
    const CycloNumber& c = it->second;
    const std::string mono = monomialToString(e, s.dim());
    const unsigned long conductor = c.conductor();
    for (size_t j = 0; j < c.coeffs().size(); ++j) {
      const Rational& q = c.coeffs()[j];
      if (q == 0) continue;
      const bool neg = q < 0;
      Rational mag = neg ? Rational(-q) : q;
      if (first) {
        if (neg) os << '-';
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      std::ostringstream piece;
      bool needStar = false;
      if (mag != 1 || (j == 0 && mono.empty())) {
        piece << mag.get_str();
        needStar = true;
      }
      if (j > 0) {
        if (needStar) piece << '*';
        piece << "zeta(" << conductor << ')';
        if (j > 1) piece << '^' << j;
        needStar = true;
      }
      if (!mono.empty()) {
        if (needStar) piece << '*';
        piece << mono;
      } else if (!needStar) {
        piece << mag.get_str();
      }
      os << piece.str();
    }
  }
  return os.str();
}

std::string polyToString(const PolyY& f) {
  std::ostringstream os;
  os << "y^" << f.degree();
  for (int j = f.degree() - 1; j >= 0; --j) {
    const PuiseuxSeries& c = f.coefficient(j);
    if (c.isZero()) continue;
    const std::string cs = seriesToString(c);
    os << " + ";
    if (c.termCount() == 1 && cs.find(' ') == std::string::npos && cs[0] != '-')
      os << cs;
    else
      os << '(' << cs << ')';
    if (j > 0) {
      os << "*y";
      if (j > 1) os << '^' << j;
    }
  }
  return os.str();
}

}  // namespace puinorm
