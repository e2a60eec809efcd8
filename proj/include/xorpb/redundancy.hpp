#pragma once

#include <cstdint>
#include <string>

#include "xorpb/constraint.hpp"
#include "xorpb/database.hpp"
#include "xorpb/propagation.hpp"

namespace xorpb {

struct RedundancyVerdict {
  bool accepted = false;
  // On rejection: database id of the constraint whose restriction failed
  // every check, or 0 when it was the candidate constraint itself.
  uint64_t failingId = 0;
  std::string failingCheck;
};

// Validates a redundance-based strengthening step: accept iff
//   (i)  db RUP-implies c, or
//   (ii) every D in restrict(db AND c, omega) is trivially true, is
//        structurally present in db, follows syntactically from negate(c),
//        or is RUP w.r.t. db AND negate(c).
// Accept guarantees db and db AND c are equisatisfiable. The engine must be
// attached to exactly the live constraints of db. Constraints that mention
// no witness-domain variable restrict to themselves and pass via membership,
// so only touched ids are iterated (db-id order, then c last).
RedundancyVerdict redundancyCheck(const ConstraintDatabase& db, PropagationEngine& engine,
                                  const PBConstraint& c, const Substitution& omega);

}  // namespace xorpb
