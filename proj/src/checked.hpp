#pragma once

#include <cstdint>

#include "stirlingb/errors.hpp"

namespace stirlingb::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* op) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(op);
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b, const char* op) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError(op);
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* op) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(op);
  return r;
}

}  // namespace stirlingb::detail
