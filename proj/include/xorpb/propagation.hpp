#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xorpb/constraint.hpp"
#include "xorpb/database.hpp"

namespace xorpb {

// sum of coefficients of literals not falsified by rho, minus the degree.
// Negative slack means the constraint is violated; it propagates an
// unassigned literal l_i iff slack < coef_i.
BigInt slack(const PBConstraint& c, const Substitution& rho);

struct PropagationOutcome {
  bool conflict = false;
  // Database id of the violated constraint, or 0 when a transient
  // (negated-goal) constraint conflicts.
  uint64_t conflictId = 0;
};

// Counter-based unit propagation over an attached constraint set.
// Propagation always restarts from scratch (per-run generation stamps keep
// resets O(1) amortized); the queue is FIFO and occurrence lists are kept in
// attach order, so runs are deterministic.
class PropagationEngine {
 public:
  void attach(uint64_t id, const PBConstraint* c);  // *c must outlive detach
  void detach(uint64_t id);

  // Unit propagation from rho over attached constraints plus extras.
  PropagationOutcome propagate(const Substitution& rho,
                               std::span<const PBConstraint* const> extras);
  PropagationOutcome propagate(std::span<const PBConstraint* const> extras) {
    static const Substitution empty;
    return propagate(empty, extras);
  }

  // True iff attached-set AND negate(c) propagates to conflict from the
  // empty assignment.
  bool rupCheck(const PBConstraint& c);

  // Trail of the most recent run, in assignment order.
  std::span<const Lit> lastTrail() const { return trail_; }

  // Live constraint ids (ascending) whose constraint mentions v.
  std::vector<uint64_t> liveMentioning(Var v) const;

  uint64_t propagationCount() const { return propagations_; }

 private:
  struct Rec {
    const PBConstraint* c = nullptr;
    uint64_t id = 0;
    BigInt slackInit;  // slack under the empty assignment
    BigInt maxCoef;
    BigInt slack;      // valid iff gen == engine generation
    uint32_t gen = 0;
    bool dead = false;
  };
  struct Occ {
    uint32_t rec;
    uint32_t term;
  };

  void ensureVar(Var v);
  uint32_t pushRec(uint64_t id, const PBConstraint* c);
  void popRec();
  void touch(Rec& r) {
    if (r.gen != gen_) {
      r.slack = r.slackInit;
      r.gen = gen_;
    }
  }
  bool assigned(Var v) const { return stamp_[v] == gen_; }
  bool litTrue(Lit l) const { return assigned(l.var()) && value_[l.var()] == !l.negated(); }
  // Returns false on conflict inside rec.
  bool scanAndEnqueue(Rec& r);
  void enqueue(Lit l);

  std::vector<Rec> recs_;
  std::vector<std::vector<Occ>> occs_;           // by literal code
  std::vector<uint32_t> seeds_;                  // recs propagating from empty
  std::unordered_map<uint64_t, uint32_t> recOf_;

  std::vector<uint8_t> value_;
  std::vector<uint32_t> stamp_;
  std::vector<Lit> trail_;
  size_t qhead_ = 0;
  uint32_t gen_ = 0;
  uint64_t propagations_ = 0;
};

// One-shot reference-shaped wrappers over the engine.
struct UnitPropagationResult {
  PropagationOutcome outcome;
  std::vector<Lit> trail;
};
UnitPropagationResult unitPropagate(const ConstraintDatabase& db, const Substitution& rho);
bool rupCheck(const ConstraintDatabase& db, const PBConstraint& c);

}  // namespace xorpb
