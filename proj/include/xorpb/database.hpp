#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "xorpb/constraint.hpp"

namespace xorpb {

// ID-indexed store of constraints. Ids are assigned consecutively from 1;
// deleted ids are never reused. Stored constraints have stable addresses.
class ConstraintDatabase {
 public:
  uint64_t add(PBConstraint c) {
    uint64_t id = nextId_++;
    slots_.push_back(std::make_unique<PBConstraint>(std::move(c)));
    index_.emplace(slots_.back()->hash(), id);
    ++live_;
    if (live_ > peakLive_) peakLive_ = live_;
    return id;
  }

  bool erase(uint64_t id) {
    PBConstraint* c = findMutable(id);
    if (!c) return false;
    auto [lo, hi] = index_.equal_range(c->hash());
    for (auto it = lo; it != hi; ++it) {
      if (it->second == id) {
        index_.erase(it);
        break;
      }
    }
    slots_[id - 1].reset();
    --live_;
    return true;
  }

  const PBConstraint* find(uint64_t id) const {
    if (id == 0 || id >= nextId_) return nullptr;
    return slots_[id - 1].get();
  }

  bool containsStructurally(const PBConstraint& c) const {
    auto [lo, hi] = index_.equal_range(c.hash());
    for (auto it = lo; it != hi; ++it) {
      const PBConstraint* d = find(it->second);
      if (d && *d == c) return true;
    }
    return false;
  }

  // Visits live constraints in ascending id order.
  template <typename F>
  void forEachLive(F&& f) const {
    for (uint64_t id = 1; id < nextId_; ++id) {
      if (const PBConstraint* c = slots_[id - 1].get()) f(id, *c);
    }
  }

  uint64_t nextId() const { return nextId_; }
  size_t liveCount() const { return live_; }
  size_t peakLiveCount() const { return peakLive_; }

 private:
  PBConstraint* findMutable(uint64_t id) {
    if (id == 0 || id >= nextId_) return nullptr;
    return slots_[id - 1].get();
  }

  std::vector<std::unique_ptr<PBConstraint>> slots_;
  std::unordered_multimap<size_t, uint64_t> index_;
  uint64_t nextId_ = 1;
  size_t live_ = 0;
  size_t peakLive_ = 0;
};

}  // namespace xorpb
