#pragma once

#include <cstdint>
#include <string>

#include "frob/error.hpp"

namespace frob::checked {

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("64-bit overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return out;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

// Entries are unsigned; signed formulas need them as int64.
inline std::int64_t to_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) {
    throw OverflowError("entry " + std::to_string(v) + " exceeds the signed 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace frob::checked
