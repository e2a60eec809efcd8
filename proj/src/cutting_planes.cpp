#include "xorpb/cutting_planes.hpp"

#include <variant>

#include "xorpb/database.hpp"

namespace xorpb {

PBConstraint linearCombination(const PBConstraint& a, const PBConstraint& b,
                               const BigInt& cA, const BigInt& cB) {
  if (cA < 0 || cB < 0) throw Error("linear combination: negative multiplier");
  SignedTerms t;
  t.reserve(a.terms().size() + b.terms().size());
  for (const Term& term : a.terms()) t.push_back({term.coef * cA, term.lit});
  for (const Term& term : b.terms()) t.push_back({term.coef * cB, term.lit});
  return normalize(t, a.degree() * cA + b.degree() * cB);
}

PBConstraint multiply(const PBConstraint& c, const BigInt& m) {
  if (m < 1) throw RpnError("multiplication by non-positive scalar");
  SignedTerms t;
  t.reserve(c.terms().size());
  for (const Term& term : c.terms()) t.push_back({term.coef * m, term.lit});
  return normalize(t, c.degree() * m);
}

PBConstraint divide(const PBConstraint& c, const BigInt& d) {
  if (d < 1) throw RpnError("division by non-positive scalar");
  SignedTerms t;
  t.reserve(c.terms().size());
  for (const Term& term : c.terms()) t.push_back({ceilDiv(term.coef, d), term.lit});
  return normalize(t, ceilDiv(c.degree(), d));
}

PBConstraint saturate(const PBConstraint& c) {
  SignedTerms t;
  t.reserve(c.terms().size());
  for (const Term& term : c.terms())
    t.push_back({term.coef < c.degree() ? term.coef : c.degree(), term.lit});
  return normalize(t, c.degree());
}

PBConstraint literalAxiom(Lit l) {
  SignedTerms t{{1, l}};
  return normalize(t, 0);
}

PBConstraint evalRpn(std::span<const RpnToken> tokens, const ConstraintDatabase& db) {
  using Slot = std::variant<BigInt, PBConstraint>;
  std::vector<Slot> stack;

  auto popConstraint = [&]() -> PBConstraint {
    if (stack.empty()) throw RpnError("stack underflow");
    Slot s = std::move(stack.back());
    stack.pop_back();
    if (std::holds_alternative<PBConstraint>(s)) return std::get<PBConstraint>(std::move(s));
    const BigInt& n = std::get<BigInt>(s);
    if (n < 1 || n >= db.nextId())
      throw RpnError("constraint id out of range: " + n.str());
    const PBConstraint* c = db.find(static_cast<uint64_t>(n));
    if (!c) throw RpnError("constraint id refers to a deleted constraint: " + n.str());
    return *c;
  };
  auto popScalar = [&]() -> BigInt {
    if (stack.empty()) throw RpnError("stack underflow");
    Slot s = std::move(stack.back());
    stack.pop_back();
    if (!std::holds_alternative<BigInt>(s)) throw RpnError("operator needs a scalar operand");
    BigInt n = std::get<BigInt>(std::move(s));
    if (n < 1) throw RpnError("non-positive scalar operand");
    return n;
  };

  for (const RpnToken& tok : tokens) {
    switch (tok.kind) {
      case RpnToken::Kind::Number:
        stack.emplace_back(tok.number);
        break;
      case RpnToken::Kind::LiteralName:
        stack.emplace_back(literalAxiom(tok.lit));
        break;
      case RpnToken::Kind::Add: {
        PBConstraint b = popConstraint();
        PBConstraint a = popConstraint();
        stack.emplace_back(linearCombination(a, b, 1, 1));
        break;
      }
      case RpnToken::Kind::Mul: {
        BigInt m = popScalar();
        stack.emplace_back(multiply(popConstraint(), m));
        break;
      }
      case RpnToken::Kind::Div: {
        BigInt d = popScalar();
        stack.emplace_back(divide(popConstraint(), d));
        break;
      }
      case RpnToken::Kind::Sat:
        stack.emplace_back(saturate(popConstraint()));
        break;
    }
  }
  if (stack.size() != 1) throw RpnError("expression leaves " + std::to_string(stack.size()) + " items on the stack");
  if (!std::holds_alternative<PBConstraint>(stack.back()))
    throw RpnError("expression result is a scalar, not a constraint");
  return std::get<PBConstraint>(std::move(stack.back()));
}

}  // namespace xorpb
