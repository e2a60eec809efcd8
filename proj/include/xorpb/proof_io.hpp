#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "xorpb/constraint.hpp"
#include "xorpb/cutting_planes.hpp"

namespace xorpb {

// A parsed input formula: interned variables plus constraints in file order
// (database ids 1..m follow that order).
struct Formula {
  VarTable vars;
  std::vector<PBConstraint> constraints;
  size_t declaredVars = 0;

  bool isClausal() const;
};

// OPB input: '*' comment lines; a leading "* #variable= N #constraint= M"
// header; constraint lines "[+|-]<int> <lit> ... >= <int> ;" with literals
// <name> or ~<name>, names matching [A-Za-z][A-Za-z0-9_]*.
Formula parseOpb(std::istream& in);

// DIMACS CNF; clause i becomes sum(lits) >= 1 over variables named x<k>.
Formula parseCnf(std::istream& in);

// Dispatches on extension (.opb / .cnf).
Formula parseFormulaFile(const std::string& path);

// One line of the proof dialect.
struct ProofStep {
  enum class Kind : uint8_t { Header, Load, Red, Pol, Rup, Del, Conclusion };
  Kind kind = Kind::Header;
  std::string version;           // Header
  uint64_t count = 0;            // Load
  PBConstraint constraint;       // Red, Rup
  Substitution witness;          // Red
  std::vector<RpnToken> tokens;  // Pol
  std::vector<uint64_t> ids;     // Del
  uint64_t id = 0;               // Conclusion

  bool operator==(const ProofStep&) const = default;
};

// Parses a single non-comment proof line; registers new variable names in
// vars (as auxiliary). Throws ParseError.
ProofStep parseProofLine(const std::string& line, VarTable& vars, size_t lineNo = 0);

// Streaming step reader; skips blank and '*' comment lines. Memory use is
// bounded by the longest line.
class ProofParser {
 public:
  ProofParser(std::istream& in, VarTable& vars) : in_(in), vars_(vars) {}

  struct Item {
    ProofStep step;
    size_t line;
  };
  std::optional<Item> next();
  size_t lineNumber() const { return line_; }

 private:
  std::istream& in_;
  VarTable& vars_;
  size_t line_ = 0;
};

// Buffered sequential proof writer. Emitted text reparses to an equal step.
class ProofWriter {
 public:
  ProofWriter(std::ostream& out, const VarTable& vars) : out_(&out), vars_(&vars) {}

  void write(const ProofStep& s);

  void writeHeader(const std::string& version = "1.1");
  void writeLoad(uint64_t count);
  void writeRed(const PBConstraint& c, const Substitution& witness);
  void writePol(std::span<const RpnToken> tokens);
  void writeRup(const PBConstraint& c);
  void writeDel(std::span<const uint64_t> ids);
  void writeConclusion(uint64_t id);

 private:
  std::ostream* out_;
  const VarTable* vars_;
};

std::string rpnToString(std::span<const RpnToken> tokens, const VarTable& vars);
std::string witnessToString(const Substitution& w, const VarTable& vars);

}  // namespace xorpb
