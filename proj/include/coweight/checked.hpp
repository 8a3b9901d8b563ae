#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coweight {

/// Raised when an exact integer result does not fit in 64 bits.
class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Dimension mismatch, out-of-range index, unsupported n.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Zero determinant where a full-rank matrix is required.
class singular_matrix_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cross-check that must hold by construction failed (wrong group, broken
/// HNF, non-integral Burnside average, ...).
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
  return r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
  return r;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

// a - q*b
inline std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  return sub(a, mul(q, b));
}

/// Floor division, b != 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == -1) return neg(a);
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace checked
}  // namespace coweight
