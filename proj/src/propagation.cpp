#include "xorpb/propagation.hpp"

#include <algorithm>

namespace xorpb {

BigInt slack(const PBConstraint& c, const Substitution& rho) {
  BigInt s = -c.degree();
  for (const Term& t : c.terms()) {
    const Substitution::Entry* e = rho.find(t.lit.var());
    bool falsified = false;
    if (e && e->image != Substitution::Image::ToLiteral) {
      bool value = (e->image == Substitution::Image::ToTrue);
      if (t.lit.negated()) value = !value;
      falsified = !value;
    }
    if (!falsified) s += t.coef;
  }
  return s;
}

void PropagationEngine::ensureVar(Var v) {
  size_t need = (static_cast<size_t>(v) + 1) * 2;
  if (occs_.size() < need) occs_.resize(need);
  if (value_.size() <= v) {
    value_.resize(v + 1, 0);
    stamp_.resize(v + 1, 0);
  }
}

uint32_t PropagationEngine::pushRec(uint64_t id, const PBConstraint* c) {
  uint32_t idx = static_cast<uint32_t>(recs_.size());
  Rec r;
  r.c = c;
  r.id = id;
  r.slackInit = c->coefSum() - c->degree();
  r.maxCoef = 0;
  for (const Term& t : c->terms())
    if (t.coef > r.maxCoef) r.maxCoef = t.coef;
  recs_.push_back(std::move(r));
  for (uint32_t i = 0; i < c->terms().size(); ++i) {
    Lit l = c->terms()[i].lit;
    ensureVar(l.var());
    occs_[l.code()].push_back({idx, i});
  }
  return idx;
}

void PropagationEngine::popRec() {
  const Rec& r = recs_.back();
  for (size_t i = r.c->terms().size(); i-- > 0;) {
    Lit l = r.c->terms()[i].lit;
    occs_[l.code()].pop_back();
  }
  recs_.pop_back();
}

void PropagationEngine::attach(uint64_t id, const PBConstraint* c) {
  uint32_t idx = pushRec(id, c);
  recOf_[id] = idx;
  const Rec& r = recs_[idx];
  if (r.slackInit < r.maxCoef || r.slackInit < 0) seeds_.push_back(idx);
}

void PropagationEngine::detach(uint64_t id) {
  auto it = recOf_.find(id);
  if (it == recOf_.end()) return;
  recs_[it->second].dead = true;  // occurrence lists are cleaned lazily
  recOf_.erase(it);
}

void PropagationEngine::enqueue(Lit l) {
  Var v = l.var();
  stamp_[v] = gen_;
  value_[v] = !l.negated();
  trail_.push_back(l);
  ++propagations_;
}

bool PropagationEngine::scanAndEnqueue(Rec& r) {
  if (r.slack < 0) return false;
  if (r.slack >= r.maxCoef) return true;
  for (const Term& t : r.c->terms()) {
    if (t.coef > r.slack && !assigned(t.lit.var())) enqueue(t.lit);
  }
  return true;
}

PropagationOutcome PropagationEngine::propagate(const Substitution& rho,
                                                std::span<const PBConstraint* const> extras) {
  ++gen_;
  trail_.clear();
  qhead_ = 0;

  for (const auto& [v, e] : rho) {
    if (e.image == Substitution::Image::ToLiteral) continue;
    ensureVar(v);
    enqueue(Lit::make(v, e.image == Substitution::Image::ToFalse));
  }

  size_t extraCount = 0;
  auto cleanup = [&]() {
    for (size_t i = 0; i < extraCount; ++i) popRec();
  };

  // Seed constraints that already propagate (or conflict) under rho alone.
  for (uint32_t idx : seeds_) {
    Rec& r = recs_[idx];
    if (r.dead) continue;
    touch(r);
    if (!scanAndEnqueue(r)) return {true, r.id};
  }
  // Extras are attached before the queue is processed (qhead_ is still 0),
  // so the main loop accounts every trail literal against them exactly once.
  for (const PBConstraint* c : extras) {
    uint32_t idx = pushRec(0, c);
    ++extraCount;
    Rec& r = recs_[idx];
    touch(r);
    if (!scanAndEnqueue(r)) {
      cleanup();
      return {true, 0};
    }
  }

  while (qhead_ < trail_.size()) {
    Lit l = trail_[qhead_++];
    const auto& lst = occs_[(~l).code()];
    for (size_t i = 0; i < lst.size(); ++i) {
      Occ o = lst[i];
      Rec& r = recs_[o.rec];
      if (r.dead) continue;
      touch(r);
      r.slack -= r.c->terms()[o.term].coef;
      if (!scanAndEnqueue(r)) {
        uint64_t id = r.id;
        cleanup();
        return {true, id};
      }
    }
  }
  cleanup();
  return {false, 0};
}

bool PropagationEngine::rupCheck(const PBConstraint& c) {
  PBConstraint notC = negate(c);
  const PBConstraint* extras[1] = {&notC};
  return propagate(extras).conflict;
}

std::vector<uint64_t> PropagationEngine::liveMentioning(Var v) const {
  std::vector<uint64_t> ids;
  if (static_cast<size_t>(v) * 2 + 1 < occs_.size()) {
    for (uint32_t code = v * 2; code <= v * 2 + 1; ++code) {
      for (const Occ& o : occs_[code]) {
        if (!recs_[o.rec].dead && recs_[o.rec].id != 0) ids.push_back(recs_[o.rec].id);
      }
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

UnitPropagationResult unitPropagate(const ConstraintDatabase& db, const Substitution& rho) {
  PropagationEngine eng;
  db.forEachLive([&](uint64_t id, const PBConstraint& c) { eng.attach(id, &c); });
  PropagationOutcome out = eng.propagate(rho, {});
  auto t = eng.lastTrail();
  return {out, std::vector<Lit>(t.begin(), t.end())};
}

bool rupCheck(const ConstraintDatabase& db, const PBConstraint& c) {
  PropagationEngine eng;
  db.forEachLive([&](uint64_t id, const PBConstraint& cc) { eng.attach(id, &cc); });
  return eng.rupCheck(c);
}

}  // namespace xorpb
