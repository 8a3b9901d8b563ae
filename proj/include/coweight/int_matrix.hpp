/**
 * Exact square integer matrices with overflow-checked arithmetic.
 *
 * Storage is inline (no allocation) for n <= IntMatrix::kMaxDim; entries are
 * kept row-major with stride n and the unused tail zeroed, so defaulted
 * comparison is "dimension first, then row-major lexicographic".
 */
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>

#include "coweight/checked.hpp"

namespace coweight {

class IntMatrix {
 public:
  using value_type = std::int64_t;
  static constexpr int kMaxDim = 8;

  IntMatrix() = default;

  explicit IntMatrix(int n) : n_(n) {
    if (n < 1 || n > kMaxDim)
      throw dimension_error("matrix dimension must be in 1.." + std::to_string(kMaxDim) +
                            ", got " + std::to_string(n));
  }

  IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows)
      : IntMatrix(static_cast<int>(rows.size())) {
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_) throw dimension_error("matrix rows must be square");
      int j = 0;
      for (value_type v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(std::initializer_list<value_type> d) {
    IntMatrix m(static_cast<int>(d.size()));
    int i = 0;
    for (value_type v : d) {
      m(i, i) = v;
      ++i;
    }
    return m;
  }

  int dim() const noexcept { return n_; }

  value_type& operator()(int i, int j) noexcept { return data_[i * n_ + j]; }
  value_type operator()(int i, int j) const noexcept { return data_[i * n_ + j]; }

  bool is_identity() const noexcept {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

  /// Column operation: col(dst) -= q * col(src).
  void col_sub_mul(int dst, int src, value_type q) {
    if (q == 0) return;
    for (int r = 0; r < n_; ++r) (*this)(r, dst) = checked::sub_mul((*this)(r, dst), q, (*this)(r, src));
  }

  /// Row operation: row(dst) -= q * row(src).
  void row_sub_mul(int dst, int src, value_type q) {
    if (q == 0) return;
    for (int c = 0; c < n_; ++c) (*this)(dst, c) = checked::sub_mul((*this)(dst, c), q, (*this)(src, c));
  }

  void swap_cols(int a, int b) noexcept {
    for (int r = 0; r < n_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  void swap_rows(int a, int b) noexcept {
    for (int c = 0; c < n_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  void negate_col(int c) {
    for (int r = 0; r < n_; ++r) (*this)(r, c) = checked::neg((*this)(r, c));
  }

  void negate_row(int r) {
    for (int c = 0; c < n_; ++c) (*this)(r, c) = checked::neg((*this)(r, c));
  }

 private:
  int n_ = 0;
  std::array<value_type, kMaxDim * kMaxDim> data_{};
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (int i = 0; i < m.dim(); ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < m.dim(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

inline IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim())
    throw dimension_error("mul: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
  const int n = a.dim();
  IntMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const auto ail = a(i, l);
      if (ail == 0) continue;
      for (int j = 0; j < n; ++j) c(i, j) = checked::add(c(i, j), checked::mul(ail, b(l, j)));
    }
  return c;
}

inline IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) t(j, i) = m(i, j);
  return t;
}

inline IntMatrix negate(const IntMatrix& m) {
  IntMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = checked::neg(m(i, j));
  return r;
}

/// Fraction-free (Bareiss) elimination. Every intermediate is a minor of m,
/// so exactness holds and overflow is only possible if a minor overflows.
inline std::int64_t det(const IntMatrix& m) {
  const int n = m.dim();
  IntMatrix a = m;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        const auto num = checked::sub(checked::mul(a(i, j), a(k, k)), checked::mul(a(i, k), a(k, j)));
        a(i, j) = num / prev;
      }
    prev = a(k, k);
  }
  return checked::mul(sign, a(n - 1, n - 1));
}

/// Determinant of m with row r and column c removed.
inline std::int64_t minor_det(const IntMatrix& m, int r, int c) {
  const int n = m.dim();
  if (n == 1) return 1;
  IntMatrix sub(n - 1);
  for (int i = 0, si = 0; i < n; ++i) {
    if (i == r) continue;
    for (int j = 0, sj = 0; j < n; ++j) {
      if (j == c) continue;
      sub(si, sj++) = m(i, j);
    }
    ++si;
  }
  return det(sub);
}

/// Exact inverse of a unimodular matrix (adjugate times det, det = +-1).
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  const auto d = det(m);
  if (d != 1 && d != -1)
    throw dimension_error("inverse_unimodular: determinant " + std::to_string(d) + " is not +-1");
  const int n = m.dim();
  IntMatrix inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto cof = ((i + j) % 2 == 0 ? 1 : -1) * minor_det(m, j, i);
      inv(i, j) = checked::mul(cof, d);
    }
  return inv;
}

}  // namespace coweight
