/**
 * Hermite normal forms for full-rank square integer matrices.
 *
 * Right (column-operation) form, the canonical representative of
 * {m * U : U in GL_n(Z)}:
 *   lower triangular, H(i,i) >= 1, 0 <= H(i,j) < H(i,i) for j < i.
 *
 * Left (row-operation) form, the canonical representative of
 * {U * m : U in GL_n(Z)}: the transpose convention, i.e. upper triangular,
 * T(i,i) >= 1, 0 <= T(r,i) < T(i,i) for r < i.
 */
#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "coweight/checked.hpp"
#include "coweight/int_matrix.hpp"

namespace coweight {

/// IntMatrix known to be in right Hermite normal form.
class HnfBasis {
 public:
  HnfBasis() = default;

  /// Validates the canonical-form predicate.
  explicit HnfBasis(const IntMatrix& m) : m_(m) {
    if (!is_right_hnf(m)) throw std::invalid_argument("HnfBasis: matrix is not in Hermite normal form");
  }

  static HnfBasis trusted(const IntMatrix& m) noexcept {
    HnfBasis h;
    h.m_ = m;
    return h;
  }

  const IntMatrix& matrix() const noexcept { return m_; }
  int dim() const noexcept { return m_.dim(); }
  std::int64_t operator()(int i, int j) const noexcept { return m_(i, j); }

  std::int64_t index() const {
    std::int64_t p = 1;
    for (int i = 0; i < m_.dim(); ++i) p = checked::mul(p, m_(i, i));
    return p;
  }

  static bool is_right_hnf(const IntMatrix& m) noexcept {
    for (int i = 0; i < m.dim(); ++i) {
      if (m(i, i) < 1) return false;
      for (int j = 0; j < m.dim(); ++j) {
        if (j > i && m(i, j) != 0) return false;
        if (j < i && (m(i, j) < 0 || m(i, j) >= m(i, i))) return false;
      }
    }
    return true;
  }

  friend bool operator==(const HnfBasis&, const HnfBasis&) = default;
  friend auto operator<=>(const HnfBasis&, const HnfBasis&) = default;

 private:
  IntMatrix m_;
};

inline bool is_left_hnf(const IntMatrix& m) noexcept {
  for (int i = 0; i < m.dim(); ++i) {
    if (m(i, i) < 1) return false;
    for (int r = 0; r < m.dim(); ++r) {
      if (r > i && m(r, i) != 0) return false;
      if (r < i && (m(r, i) < 0 || m(r, i) >= m(i, i))) return false;
    }
  }
  return true;
}

inline HnfBasis hnf_right(const IntMatrix& m) {
  const int n = m.dim();
  IntMatrix h = m;
  for (int i = 0; i < n; ++i) {
    // Euclid on row i across columns i..n-1 until only column i is nonzero.
    for (;;) {
      int piv = -1;
      for (int j = i; j < n; ++j)
        if (h(i, j) != 0 && (piv < 0 || std::llabs(h(i, j)) < std::llabs(h(i, piv)))) piv = j;
      if (piv < 0) throw singular_matrix_error("hnf_right: matrix is singular");
      if (piv != i) h.swap_cols(i, piv);
      bool cleared = true;
      for (int j = i + 1; j < n; ++j) {
        if (h(i, j) == 0) continue;
        h.col_sub_mul(j, i, h(i, j) / h(i, i));
        if (h(i, j) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(i, i) < 0) h.negate_col(i);
    for (int j = 0; j < i; ++j) h.col_sub_mul(j, i, checked::floor_div(h(i, j), h(i, i)));
  }
  return HnfBasis::trusted(h);
}

inline IntMatrix hnf_left(const IntMatrix& m) {
  const int n = m.dim();
  IntMatrix t = m;
  for (int i = 0; i < n; ++i) {
    for (;;) {
      int piv = -1;
      for (int r = i; r < n; ++r)
        if (t(r, i) != 0 && (piv < 0 || std::llabs(t(r, i)) < std::llabs(t(piv, i)))) piv = r;
      if (piv < 0) throw singular_matrix_error("hnf_left: matrix is singular");
      if (piv != i) t.swap_rows(i, piv);
      bool cleared = true;
      for (int r = i + 1; r < n; ++r) {
        if (t(r, i) == 0) continue;
        t.row_sub_mul(r, i, t(r, i) / t(i, i));
        if (t(r, i) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (t(i, i) < 0) t.negate_row(i);
    for (int r = 0; r < i; ++r) t.row_sub_mul(r, i, checked::floor_div(t(r, i), t(i, i)));
  }
  return t;
}

/// True iff r maps the sublattice spanned by the columns of h onto itself,
/// i.e. h * X = r * h has an integral solution X. Forward substitution
/// against the lower-triangular h with a divisibility test per entry.
inline bool is_integral_conjugate(const HnfBasis& h, const IntMatrix& r) {
  const int n = h.dim();
  const IntMatrix b = mul(r, h.matrix());
  std::int64_t x[IntMatrix::kMaxDim];
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) {
      std::int64_t s = b(i, c);
      for (int l = 0; l < i; ++l) s = checked::sub_mul(s, h(i, l), x[l]);
      if (s % h(i, i) != 0) return false;
      x[i] = s / h(i, i);
    }
  }
  return true;
}

/// Simplex-side counterpart: for t in left HNF (upper triangular), true iff
/// t * r = X * t for an integral X, i.e. the reordering r maps the ordered
/// simplex t to a unimodularly equivalent one. Row-wise substitution.
inline bool is_integral_right_conjugate(const IntMatrix& t, const IntMatrix& r) {
  const int n = t.dim();
  const IntMatrix b = mul(t, r);
  std::int64_t x[IntMatrix::kMaxDim];
  for (int row = 0; row < n; ++row) {
    for (int j = 0; j < n; ++j) {
      std::int64_t s = b(row, j);
      for (int l = 0; l < j; ++l) s = checked::sub_mul(s, x[l], t(l, j));
      if (s % t(j, j) != 0) return false;
      x[j] = s / t(j, j);
    }
  }
  return true;
}

}  // namespace coweight
