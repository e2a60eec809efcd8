#include "xorpb/constraint.hpp"

#include <algorithm>
#include <sstream>

namespace xorpb {

PBConstraint normalizedFromParts(std::vector<Term> terms, BigInt degree) {
  PBConstraint c;
  c.terms_ = std::move(terms);
  c.degree_ = std::move(degree);
  return c;
}

const Term* PBConstraint::termOn(Var v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](const Term& t, Var v2) { return t.lit.var() < v2; });
  if (it == terms_.end() || it->lit.var() != v) return nullptr;
  return &*it;
}

size_t PBConstraint::hash() const {
  size_t h = hashBigInt(degree_);
  for (const Term& t : terms_) {
    h = hashCombine(h, t.lit.code());
    h = hashCombine(h, hashBigInt(t.coef));
  }
  return h;
}

std::string PBConstraint::toString(const VarTable& vars) const {
  std::ostringstream os;
  for (const Term& t : terms_) os << "+" << t.coef << " " << vars.litName(t.lit) << " ";
  os << ">= " << degree_;
  return os.str();
}

PBConstraint normalize(const SignedTerms& lhs, const BigInt& rhs) {
  // Accumulate per-variable coefficients on the positive literal; each
  // k*~x contributes -k*x and shifts k to the right-hand side.
  std::map<Var, BigInt> acc;
  BigInt degree = rhs;
  for (const auto& [c, lit] : lhs) {
    if (c == 0) continue;
    if (lit.negated()) {
      acc[lit.var()] -= c;
      degree -= c;
    } else {
      acc[lit.var()] += c;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  BigInt sum = 0;
  for (auto& [v, a] : acc) {
    if (a == 0) continue;
    if (a > 0) {
      terms.push_back({a, Lit::pos(v)});
      sum += a;
    } else {
      terms.push_back({-a, Lit::neg(v)});
      degree -= a;
      sum -= a;
    }
  }
  if (degree < 0)
    degree = 0;
  else if (degree > sum + 1)
    degree = sum + 1;  // canonical representative of an over-degree contradiction
  return normalizedFromParts(std::move(terms), std::move(degree));
}

PBConstraint clauseConstraint(std::span<const Lit> lits) {
  SignedTerms t;
  t.reserve(lits.size());
  for (Lit l : lits) t.push_back({1, l});
  return normalize(t, 1);
}

PBConstraint negate(const PBConstraint& c) {
  SignedTerms t;
  t.reserve(c.terms().size());
  for (const Term& term : c.terms()) t.push_back({-term.coef, term.lit});
  return normalize(t, -c.degree() + 1);
}

PBConstraint restrict(const PBConstraint& c, const Substitution& s) {
  SignedTerms t;
  t.reserve(c.terms().size());
  BigInt rhs = c.degree();
  for (const Term& term : c.terms()) {
    const Substitution::Entry* e = s.find(term.lit.var());
    if (!e) {
      t.push_back({term.coef, term.lit});
      continue;
    }
    switch (e->image) {
      case Substitution::Image::ToFalse:
        if (term.lit.negated()) rhs -= term.coef;  // literal satisfied
        break;
      case Substitution::Image::ToTrue:
        if (!term.lit.negated()) rhs -= term.coef;
        break;
      case Substitution::Image::ToLiteral:
        t.push_back({term.coef, term.lit.negated() ? ~e->lit : e->lit});
        break;
    }
  }
  return normalize(t, rhs);
}

bool impliesSyntactically(const PBConstraint& c, const PBConstraint& d) {
  // penalty(x) = cost of rewriting c's term on x into d's term on x using
  // literal axioms; accept iff degree(d) <= degree(c) - sum(penalty).
  BigInt penalty = 0;
  auto it = d.terms().begin();
  const auto end = d.terms().end();
  for (const Term& tc : c.terms()) {
    while (it != end && it->lit.var() < tc.lit.var()) ++it;
    if (it != end && it->lit.var() == tc.lit.var() && it->lit == tc.lit) {
      if (it->coef < tc.coef) penalty += tc.coef - it->coef;
    } else {
      penalty += tc.coef;  // absent from d or opposite polarity
    }
  }
  return d.degree() <= c.degree() - penalty;
}

bool evaluate(const PBConstraint& c, const Substitution& assignment) {
  BigInt sum = 0;
  for (const Term& t : c.terms()) {
    const Substitution::Entry* e = assignment.find(t.lit.var());
    if (!e || e->image == Substitution::Image::ToLiteral)
      throw UnassignedVariable("evaluate: variable not assigned a value");
    bool value = (e->image == Substitution::Image::ToTrue);
    if (t.lit.negated()) value = !value;
    if (value) sum += t.coef;
  }
  return sum >= c.degree();
}

std::pair<PBConstraint, PBConstraint> LinearEquality::expand() const {
  PBConstraint geq = normalize(lhs, rhs);
  SignedTerms neg;
  neg.reserve(lhs.size());
  for (const auto& [c, lit] : lhs) neg.push_back({-c, lit});
  PBConstraint leq = normalize(neg, -rhs);
  return {geq, leq};
}

}  // namespace xorpb
