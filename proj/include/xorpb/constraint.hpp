#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xorpb/bigint.hpp"
#include "xorpb/errors.hpp"
#include "xorpb/literal.hpp"

namespace xorpb {

// Partial map from variables to 0, 1, or a literal. Serves both as the
// witness of a red step and as a (partial) truth assignment.
class Substitution {
 public:
  enum class Image : uint8_t { ToFalse, ToTrue, ToLiteral };
  struct Entry {
    Image image;
    Lit lit;  // meaningful only for ToLiteral
    bool operator==(const Entry&) const = default;
  };

  void set(Var v, bool value) { insert(v, {value ? Image::ToTrue : Image::ToFalse, Lit()}); }
  void setLiteral(Var v, Lit l) { insert(v, {Image::ToLiteral, l}); }

  const Entry* find(Var v) const {
    auto it = map_.find(v);
    return it == map_.end() ? nullptr : &it->second;
  }

  bool empty() const { return map_.empty(); }
  size_t size() const { return map_.size(); }
  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }

  bool operator==(const Substitution&) const = default;

 private:
  void insert(Var v, Entry e) {
    if (!map_.emplace(v, e).second)
      throw DuplicateWitnessVar("variable bound twice in substitution");
  }
  std::map<Var, Entry> map_;  // ordered: deterministic iteration
};

struct Term {
  BigInt coef;
  Lit lit;
  bool operator==(const Term&) const = default;
};

// Normalized pseudo-Boolean inequality  sum_i coef_i * lit_i >= degree:
// literals over distinct variables, terms sorted by variable id,
// coefficients >= 1, and 0 <= degree <= sum(coef) + 1.
class PBConstraint {
 public:
  PBConstraint() = default;  // the trivial constraint 0 >= 0

  const std::vector<Term>& terms() const { return terms_; }
  const BigInt& degree() const { return degree_; }

  BigInt coefSum() const {
    BigInt s = 0;
    for (const Term& t : terms_) s += t.coef;
    return s;
  }

  bool triviallyTrue() const { return degree_ == 0; }
  bool isContradiction() const { return terms_.empty() && degree_ > 0; }

  // Coefficient of the term over v, or nullptr.
  const Term* termOn(Var v) const;

  bool operator==(const PBConstraint&) const = default;
  size_t hash() const;

  // Renders as OPB-style text, e.g. "+1 x1 +2 ~y1 >= 2".
  std::string toString(const VarTable& vars) const;

 private:
  friend PBConstraint normalizedFromParts(std::vector<Term>, BigInt);
  std::vector<Term> terms_;
  BigInt degree_;
};

// Signed linear combination of literals; the raw (pre-normalization) shape.
using SignedTerms = std::vector<std::pair<BigInt, Lit>>;

// Rewrites an arbitrary signed inequality sum(lhs) >= rhs into canonical
// normalized form. Total on integer inputs: repeated variables merge,
// opposite polarities cancel, the degree is clamped into [0, sum(coef)+1].
PBConstraint normalize(const SignedTerms& lhs, const BigInt& rhs);

// The clause l1 v ... v lk as the constraint sum(l_i) >= 1.
PBConstraint clauseConstraint(std::span<const Lit> lits);

// Negation: normalized form of sum(-coef_i * lit_i) >= -degree + 1.
PBConstraint negate(const PBConstraint& c);

// Applies a substitution and renormalizes.
PBConstraint restrict(const PBConstraint& c, const Substitution& s);

// True iff d is derivable from c by adding literal axioms and renormalizing.
// Complete decision procedure for that notion; sound for implication.
bool impliesSyntactically(const PBConstraint& c, const PBConstraint& d);

// Evaluates under a total assignment; throws UnassignedVariable if some
// variable of c is unassigned or mapped to a literal.
bool evaluate(const PBConstraint& c, const Substitution& assignment);

// Equality sum(lhs) = rhs, syntactic sugar for a pair of inequalities.
struct LinearEquality {
  SignedTerms lhs;
  BigInt rhs;
  // Returns the (>=, <=) halves, both normalized.
  std::pair<PBConstraint, PBConstraint> expand() const;
};

}  // namespace xorpb
