#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>

namespace xorpb {

using BigInt = boost::multiprecision::cpp_int;

// Ceiling of a/b for a >= 0, b >= 1.
inline BigInt ceilDiv(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

inline size_t hashCombine(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

inline size_t hashBigInt(const BigInt& v) {
  // Values in this codebase are non-negative; low bits suffice for hashing.
  return static_cast<size_t>(static_cast<uint64_t>(v & 0xffffffffffffffffull));
}

}  // namespace xorpb
