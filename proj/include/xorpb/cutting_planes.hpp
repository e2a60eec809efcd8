#pragma once

#include <span>
#include <vector>

#include "xorpb/constraint.hpp"

namespace xorpb {

class ConstraintDatabase;

// normalize(cA*a + cB*b); implied by {a, b} for cA, cB >= 0.
PBConstraint linearCombination(const PBConstraint& a, const PBConstraint& b,
                               const BigInt& cA, const BigInt& cB);

// Scales coefficients and degree by m >= 1.
PBConstraint multiply(const PBConstraint& c, const BigInt& m);

// Ceiling division of coefficients and degree by d >= 1; sound on
// normalized constraints.
PBConstraint divide(const PBConstraint& c, const BigInt& d);

// Coefficients capped at the degree; Boolean solution set unchanged.
PBConstraint saturate(const PBConstraint& c);

// The trivially true constraint l >= 0.
PBConstraint literalAxiom(Lit l);

// One token of a reverse-polish proof expression.
struct RpnToken {
  enum class Kind : uint8_t { Number, LiteralName, Add, Mul, Div, Sat };
  Kind kind;
  BigInt number;  // Number
  Lit lit;        // LiteralName

  static RpnToken num(BigInt n) { return {Kind::Number, std::move(n), Lit()}; }
  static RpnToken literal(Lit l) { return {Kind::LiteralName, 0, l}; }
  static RpnToken add() { return {Kind::Add, 0, Lit()}; }
  static RpnToken mul() { return {Kind::Mul, 0, Lit()}; }
  static RpnToken div() { return {Kind::Div, 0, Lit()}; }
  static RpnToken sat() { return {Kind::Sat, 0, Lit()}; }

  bool operator==(const RpnToken&) const = default;
};

// Stack evaluation of a token stream. Numbers push scalars and literal names
// push literal axioms; * and d pop a scalar then a constraint-position
// operand, + pops two constraint-position operands, s pops one. A scalar in
// constraint position resolves as a database id. Exactly one constraint must
// remain; throws RpnError otherwise (underflow, unresolved id, leftover
// items, non-positive scalar, or a scalar as the final result).
PBConstraint evalRpn(std::span<const RpnToken> tokens, const ConstraintDatabase& db);

}  // namespace xorpb
