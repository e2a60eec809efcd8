#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "xorpb/errors.hpp"

namespace xorpb {

using Var = uint32_t;

// Literal over a Boolean variable: code is var*2 + (1 if negated).
class Lit {
 public:
  Lit() = default;
  static Lit pos(Var v) { return Lit(v << 1); }
  static Lit neg(Var v) { return Lit((v << 1) | 1u); }
  static Lit make(Var v, bool negated) { return Lit((v << 1) | (negated ? 1u : 0u)); }
  static Lit fromCode(uint32_t c) { return Lit(c); }

  Var var() const { return code_ >> 1; }
  bool negated() const { return (code_ & 1u) != 0; }
  Lit operator~() const { return Lit(code_ ^ 1u); }
  uint32_t code() const { return code_; }

  auto operator<=>(const Lit&) const = default;

 private:
  explicit Lit(uint32_t c) : code_(c) {}
  uint32_t code_ = 0;
};

// Interns variable names. Input and auxiliary variables share one id space,
// so ids can never collide across the two namespaces; the flag records which
// side a variable belongs to.
class VarTable {
 public:
  Var add(const std::string& name, bool aux) {
    if (index_.count(name)) throw Error("duplicate variable name: " + name);
    Var v = static_cast<Var>(names_.size());
    names_.push_back(name);
    aux_.push_back(aux);
    index_.emplace(names_.back(), v);
    return v;
  }

  Var findOrAdd(const std::string& name, bool aux = false) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    return add(name, aux);
  }

  std::optional<Var> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  const std::string& name(Var v) const { return names_.at(v); }
  bool isAux(Var v) const { return aux_.at(v); }
  size_t size() const { return names_.size(); }

  std::string litName(Lit l) const {
    return l.negated() ? "~" + name(l.var()) : name(l.var());
  }

 private:
  std::vector<std::string> names_;
  std::vector<bool> aux_;
  std::unordered_map<std::string, Var> index_;
};

}  // namespace xorpb
