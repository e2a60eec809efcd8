#include "xorpb/redundancy.hpp"

#include <algorithm>

namespace xorpb {

RedundancyVerdict redundancyCheck(const ConstraintDatabase& db, PropagationEngine& engine,
                                  const PBConstraint& c, const Substitution& omega) {
  if (engine.rupCheck(c)) return {true, 0, {}};

  PBConstraint notC = negate(c);

  std::vector<uint64_t> touched;
  for (const auto& [v, img] : omega) {
    std::vector<uint64_t> ids = engine.liveMentioning(v);
    touched.insert(touched.end(), ids.begin(), ids.end());
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  auto holds = [&](const PBConstraint& d) -> bool {
    PBConstraint dw = restrict(d, omega);
    if (dw.triviallyTrue()) return true;
    if (db.containsStructurally(dw)) return true;
    if (impliesSyntactically(notC, dw)) return true;
    PBConstraint notDw = negate(dw);
    const PBConstraint* extras[2] = {&notC, &notDw};
    return engine.propagate(extras).conflict;
  };

  for (uint64_t id : touched) {
    const PBConstraint* d = db.find(id);
    if (!d) continue;
    if (!holds(*d)) return {false, id, "restriction of constraint " + std::to_string(id) + " not implied"};
  }
  if (!holds(c)) return {false, 0, "restriction of the added constraint not implied"};
  return {true, 0, {}};
}

}  // namespace xorpb
