#include "xorpb/proof_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace xorpb {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    // split a trailing ';' glued to a token
    if (tok.size() > 1 && tok.back() == ';') {
      out.push_back(tok.substr(0, tok.size() - 1));
      out.push_back(";");
    } else {
      out.push_back(tok);
    }
  }
  return out;
}

bool isInteger(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool isName(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

BigInt toBigInt(const std::string& s, size_t lineNo) {
  if (!isInteger(s)) throw ParseError(lineNo, "expected integer, got '" + s + "'");
  return BigInt(s);
}

Lit parseLit(const std::string& tok, VarTable& vars, bool aux, size_t lineNo) {
  bool neg = !tok.empty() && tok[0] == '~';
  std::string name = neg ? tok.substr(1) : tok;
  if (!isName(name)) throw ParseError(lineNo, "bad literal '" + tok + "'");
  return Lit::make(vars.findOrAdd(name, aux), neg);
}

// Consumes "coef lit ... >= degree" starting at pos; leaves pos just past the
// degree token.
PBConstraint parseConstraintTokens(const std::vector<std::string>& t, size_t& pos,
                                   VarTable& vars, bool aux, size_t lineNo) {
  SignedTerms terms;
  while (pos < t.size() && t[pos] != ">=") {
    BigInt coef = toBigInt(t[pos], lineNo);
    if (++pos >= t.size()) throw ParseError(lineNo, "coefficient without literal");
    terms.push_back({std::move(coef), parseLit(t[pos], vars, aux, lineNo)});
    ++pos;
  }
  if (pos >= t.size()) throw ParseError(lineNo, "missing '>=' in constraint");
  ++pos;  // >=
  if (pos >= t.size()) throw ParseError(lineNo, "missing degree after '>='");
  BigInt degree = toBigInt(t[pos], lineNo);
  ++pos;
  return normalize(terms, degree);
}

void expectSemicolon(const std::vector<std::string>& t, size_t& pos, size_t lineNo) {
  if (pos >= t.size() || t[pos] != ";") throw ParseError(lineNo, "missing ';' after constraint");
  ++pos;
}

}  // namespace

bool Formula::isClausal() const {
  for (const PBConstraint& c : constraints) {
    if (c.degree() != 1) return false;
    for (const Term& t : c.terms())
      if (t.coef != 1) return false;
  }
  return true;
}

Formula parseOpb(std::istream& in) {
  Formula f;
  std::string line;
  size_t lineNo = 0;
  bool haveHeader = false;
  size_t declaredConstraints = 0;

  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty()) continue;
    if (line[0] == '*') {
      if (!haveHeader) {
        auto t = tokenize(line);
        for (size_t i = 0; i + 1 < t.size(); ++i) {
          if (t[i] == "#variable=" && isInteger(t[i + 1])) f.declaredVars = std::stoull(t[i + 1]);
          if (t[i] == "#constraint=" && isInteger(t[i + 1])) {
            declaredConstraints = std::stoull(t[i + 1]);
            haveHeader = true;
          }
        }
      }
      continue;
    }
    if (!haveHeader) throw ParseError(lineNo, "constraint before '* #variable= .. #constraint= ..' header");
    auto t = tokenize(line);
    if (t.empty()) continue;
    size_t pos = 0;
    PBConstraint c = parseConstraintTokens(t, pos, f.vars, false, lineNo);
    expectSemicolon(t, pos, lineNo);
    if (pos != t.size()) throw ParseError(lineNo, "trailing tokens after ';'");
    f.constraints.push_back(std::move(c));
  }
  if (!haveHeader) throw Error("opb: missing '* #variable= .. #constraint= ..' header");
  if (f.constraints.size() != declaredConstraints)
    throw Error("opb: header declares " + std::to_string(declaredConstraints) +
                " constraints, body has " + std::to_string(f.constraints.size()));
  if (f.vars.size() > f.declaredVars)
    throw Error("opb: body mentions " + std::to_string(f.vars.size()) +
                " variables, header declares " + std::to_string(f.declaredVars));
  for (Var v = 0; v < f.vars.size(); ++v) {
    const std::string& n = f.vars.name(v);
    if (n.size() > 1 && n[0] == 'x' &&
        std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      if (std::stoull(n.substr(1)) > f.declaredVars)
        throw Error("opb: variable " + n + " exceeds declared #variable= " +
                    std::to_string(f.declaredVars));
    }
  }
  return f;
}

Formula parseCnf(std::istream& in) {
  Formula f;
  std::string line;
  size_t lineNo = 0;
  bool haveHeader = false;
  size_t declaredVars = 0, declaredClauses = 0;
  std::vector<Lit> current;

  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty() || line[0] == 'c') continue;
    auto t = tokenize(line);
    if (t.empty()) continue;
    if (t[0] == "p") {
      if (haveHeader) throw ParseError(lineNo, "duplicate 'p' header");
      if (t.size() != 4 || t[1] != "cnf") throw ParseError(lineNo, "expected 'p cnf <vars> <clauses>'");
      declaredVars = std::stoull(t[2]);
      declaredClauses = std::stoull(t[3]);
      f.declaredVars = declaredVars;
      for (size_t i = 1; i <= declaredVars; ++i) f.vars.add("x" + std::to_string(i), false);
      haveHeader = true;
      continue;
    }
    if (!haveHeader) throw ParseError(lineNo, "clause before 'p cnf' header");
    for (const std::string& tok : t) {
      if (!isInteger(tok)) throw ParseError(lineNo, "bad literal '" + tok + "'");
      long long v = std::stoll(tok);
      if (v == 0) {
        f.constraints.push_back(clauseConstraint(current));
        current.clear();
      } else {
        unsigned long long a = static_cast<unsigned long long>(v < 0 ? -v : v);
        if (a > declaredVars) throw ParseError(lineNo, "variable " + std::to_string(a) + " out of range");
        current.push_back(Lit::make(static_cast<Var>(a - 1), v < 0));
      }
    }
  }
  if (!haveHeader) throw Error("cnf: missing 'p cnf' header");
  if (!current.empty()) throw Error("cnf: last clause not terminated by 0");
  if (f.constraints.size() != declaredClauses)
    throw Error("cnf: header declares " + std::to_string(declaredClauses) + " clauses, body has " +
                std::to_string(f.constraints.size()));
  return f;
}

Formula parseFormulaFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".cnf") return parseCnf(in);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".opb") return parseOpb(in);
  throw Error("unknown formula extension (want .opb or .cnf): " + path);
}

ProofStep parseProofLine(const std::string& line, VarTable& vars, size_t lineNo) {
  auto t = tokenize(line);
  if (t.empty()) throw ParseError(lineNo, "empty proof line");
  ProofStep s;

  if (t[0] == "pseudo-Boolean") {
    if (t.size() < 4 || t[1] != "proof" || t[2] != "version")
      throw ParseError(lineNo, "malformed proof header");
    s.kind = ProofStep::Kind::Header;
    s.version = t[3];
    return s;
  }
  if (t[0] == "f") {
    if (t.size() != 2 || !isInteger(t[1])) throw ParseError(lineNo, "expected 'f <count>'");
    s.kind = ProofStep::Kind::Load;
    s.count = std::stoull(t[1]);
    return s;
  }
  if (t[0] == "red") {
    s.kind = ProofStep::Kind::Red;
    size_t pos = 1;
    s.constraint = parseConstraintTokens(t, pos, vars, true, lineNo);
    expectSemicolon(t, pos, lineNo);
    while (pos < t.size()) {
      if (!isName(t[pos])) throw ParseError(lineNo, "bad witness variable '" + t[pos] + "'");
      Var v = vars.findOrAdd(t[pos], true);
      ++pos;
      if (pos < t.size() && t[pos] == "->") ++pos;
      if (pos >= t.size()) throw ParseError(lineNo, "witness variable without value");
      const std::string& val = t[pos];
      if (val == "0")
        s.witness.set(v, false);
      else if (val == "1")
        s.witness.set(v, true);
      else
        s.witness.setLiteral(v, parseLit(val, vars, true, lineNo));
      ++pos;
    }
    return s;
  }
  if (t[0] == "p" || t[0] == "pol") {
    s.kind = ProofStep::Kind::Pol;
    for (size_t i = 1; i < t.size(); ++i) {
      const std::string& tok = t[i];
      if (tok == "+")
        s.tokens.push_back(RpnToken::add());
      else if (tok == "*")
        s.tokens.push_back(RpnToken::mul());
      else if (tok == "d")
        s.tokens.push_back(RpnToken::div());
      else if (tok == "s")
        s.tokens.push_back(RpnToken::sat());
      else if (isInteger(tok))
        s.tokens.push_back(RpnToken::num(toBigInt(tok, lineNo)));
      else
        s.tokens.push_back(RpnToken::literal(parseLit(tok, vars, true, lineNo)));
    }
    if (s.tokens.empty()) throw ParseError(lineNo, "empty p line");
    return s;
  }
  if (t[0] == "rup") {
    s.kind = ProofStep::Kind::Rup;
    size_t pos = 1;
    s.constraint = parseConstraintTokens(t, pos, vars, true, lineNo);
    expectSemicolon(t, pos, lineNo);
    if (pos != t.size()) throw ParseError(lineNo, "trailing tokens after rup constraint");
    return s;
  }
  if (t[0] == "del") {
    s.kind = ProofStep::Kind::Del;
    if (t.size() < 3 || t[1] != "id") throw ParseError(lineNo, "expected 'del id <id> ...'");
    for (size_t i = 2; i < t.size(); ++i) {
      if (!isInteger(t[i])) throw ParseError(lineNo, "bad id '" + t[i] + "'");
      s.ids.push_back(std::stoull(t[i]));
    }
    return s;
  }
  if (t[0] == "c") {
    if (t.size() != 2 || !isInteger(t[1])) throw ParseError(lineNo, "expected 'c <id>'");
    s.kind = ProofStep::Kind::Conclusion;
    s.id = std::stoull(t[1]);
    return s;
  }
  throw ParseError(lineNo, "unknown proof keyword '" + t[0] + "'");
}

std::optional<ProofParser::Item> ProofParser::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    bool blank = line.empty() || std::all_of(line.begin(), line.end(), [](char c) {
                   return std::isspace(static_cast<unsigned char>(c));
                 });
    if (blank || line[0] == '*') continue;
    return Item{parseProofLine(line, vars_, line_), line_};
  }
  return std::nullopt;
}

std::string rpnToString(std::span<const RpnToken> tokens, const VarTable& vars) {
  std::ostringstream os;
  bool first = true;
  for (const RpnToken& t : tokens) {
    if (!first) os << " ";
    first = false;
    switch (t.kind) {
      case RpnToken::Kind::Number: os << t.number; break;
      case RpnToken::Kind::LiteralName: os << vars.litName(t.lit); break;
      case RpnToken::Kind::Add: os << "+"; break;
      case RpnToken::Kind::Mul: os << "*"; break;
      case RpnToken::Kind::Div: os << "d"; break;
      case RpnToken::Kind::Sat: os << "s"; break;
    }
  }
  return os.str();
}

std::string witnessToString(const Substitution& w, const VarTable& vars) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : w) {
    if (!first) os << " ";
    first = false;
    os << vars.name(v) << " -> ";
    switch (e.image) {
      case Substitution::Image::ToFalse: os << "0"; break;
      case Substitution::Image::ToTrue: os << "1"; break;
      case Substitution::Image::ToLiteral: os << vars.litName(e.lit); break;
    }
  }
  return os.str();
}

void ProofWriter::writeHeader(const std::string& version) {
  *out_ << "pseudo-Boolean proof version " << version << "\n";
}
void ProofWriter::writeLoad(uint64_t count) { *out_ << "f " << count << "\n"; }
void ProofWriter::writeRed(const PBConstraint& c, const Substitution& witness) {
  *out_ << "red " << c.toString(*vars_) << " ; " << witnessToString(witness, *vars_) << "\n";
}
void ProofWriter::writePol(std::span<const RpnToken> tokens) {
  *out_ << "p " << rpnToString(tokens, *vars_) << "\n";
}
void ProofWriter::writeRup(const PBConstraint& c) {
  *out_ << "rup " << c.toString(*vars_) << " ;\n";
}
void ProofWriter::writeDel(std::span<const uint64_t> ids) {
  *out_ << "del id";
  for (uint64_t id : ids) *out_ << " " << id;
  *out_ << "\n";
}
void ProofWriter::writeConclusion(uint64_t id) { *out_ << "c " << id << "\n"; }

void ProofWriter::write(const ProofStep& s) {
  switch (s.kind) {
    case ProofStep::Kind::Header: writeHeader(s.version); break;
    case ProofStep::Kind::Load: writeLoad(s.count); break;
    case ProofStep::Kind::Red: writeRed(s.constraint, s.witness); break;
    case ProofStep::Kind::Pol: writePol(s.tokens); break;
    case ProofStep::Kind::Rup: writeRup(s.constraint); break;
    case ProofStep::Kind::Del: writeDel(s.ids); break;
    case ProofStep::Kind::Conclusion: writeConclusion(s.id); break;
  }
}

}  // namespace xorpb
