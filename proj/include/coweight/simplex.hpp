/**
 * n-dimensional lattice simplices with one vertex pinned at the origin.
 *
 * An ordered simplex is the matrix T whose columns are its n non-origin
 * vertices. Unimodular maps act on the left (T -> L T), vertex relabelings
 * act on the right by elements of the transposed automorphism group
 * (T -> T R). Classes of volume-k simplices are enumerated through left
 * normal forms, which are exactly the transposes of right HNFs.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coweight/aut_group.hpp"
#include "coweight/enumerate.hpp"
#include "coweight/hnf.hpp"
#include "coweight/int_matrix.hpp"

namespace coweight {

using Point = std::vector<std::int64_t>;

/// Ordered list of n+1 vertices. Vertex 0 sits at the origin after
/// normalize().
struct VertexTuple {
  std::vector<Point> points;

  int dim() const noexcept { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
  friend bool operator==(const VertexTuple&, const VertexTuple&) = default;
};

inline VertexTuple from_matrix(const IntMatrix& t) {
  const int n = t.dim();
  VertexTuple s;
  s.points.assign(n + 1, Point(n, 0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) s.points[j + 1][i] = t(i, j);
  return s;
}

/// Translates every vertex by -points[0].
inline VertexTuple normalize(VertexTuple s) {
  if (s.points.empty()) return s;
  const Point o = s.points.front();
  for (auto& p : s.points)
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = checked::sub(p[i], o[i]);
  return s;
}

inline IntMatrix to_matrix(const VertexTuple& s) {
  const int n = s.dim();
  if (static_cast<int>(s.points.size()) != n + 1)
    throw dimension_error("to_matrix: need n+1 vertices in dimension n");
  const VertexTuple z = normalize(s);
  IntMatrix t(n);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(z.points[j + 1].size()) != n) throw dimension_error("to_matrix: ragged vertex list");
    for (int i = 0; i < n; ++i) t(i, j) = z.points[j + 1][i];
  }
  return t;
}

/// Moves vertex i (1-based) to the origin; the old origin lands in slot i as
/// -t_i. Matrix effect: T -> T * P_{n,i}^T.
inline VertexTuple reorder_vertex_to_origin(const VertexTuple& s, int i) {
  const int n = s.dim();
  if (i < 1 || i > n)
    throw dimension_error("reorder_vertex_to_origin: index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(n));
  VertexTuple out = s;
  std::swap(out.points[0], out.points[i]);
  return normalize(std::move(out));
}

/// Relabels the non-origin vertices: new slot j+1 holds old slot perm[j]+1.
/// Matrix effect: T -> T * Q with Q(perm[j], j) = 1.
inline VertexTuple permute_vertices(const VertexTuple& s, const std::vector<int>& perm) {
  const int n = s.dim();
  if (static_cast<int>(perm.size()) != n) throw dimension_error("permute_vertices: wrong permutation length");
  VertexTuple out = s;
  for (int j = 0; j < n; ++j) out.points[j + 1] = s.points[perm[j] + 1];
  return out;
}

/// min over R in right_group of hnf_left(t * R).
inline OrbitKey simplex_canonical(const IntMatrix& t, const AutGroup& right_group) {
  if (t.dim() != right_group.dim()) throw dimension_error("simplex_canonical: dimension mismatch");
  IntMatrix best;
  bool first = true;
  for (const auto& r : right_group) {
    auto c = hnf_left(mul(t, r));
    if (first || c < best) {
      best = c;
      first = false;
    }
  }
  return {best};
}

/// Right group for unordered, unoriented simplices (oriented = false) or for
/// oriented simplices (oriented = true).
inline AutGroup simplex_group(int n, bool oriented) {
  const auto g = coweight_group(n);
  return transpose_group(oriented ? proper_subgroup(g) : g);
}

/// Volume-k ordered simplices modulo T ~ L T R (L unimodular, R in
/// right_group). Objects are ranked through the transpose of their left
/// normal form, which is a right HNF.
inline Classification classify_simplices(int n, std::int64_t k, const AutGroup& right_group,
                                         unsigned workers = 1, bool track_membership = false) {
  if (right_group.dim() != n) throw dimension_error("classify_simplices: group dimension mismatch");
  const HnfIndex index(n, k);
  return classify_orbits(
      index.size(), right_group, [&](std::uint64_t r) { return transpose(index.unrank(r).matrix()); },
      [](const IntMatrix& r, const IntMatrix& t) { return hnf_left(mul(t, r)); },
      [&](const IntMatrix& t) { return index.rank(transpose(t)); }, workers, track_membership);
}

inline std::uint64_t tau(int n, std::int64_t k, bool oriented, unsigned workers = 1) {
  return classify_simplices(n, k, simplex_group(n, oriented), workers).count();
}

struct BijectionReport {
  int n = 0;
  std::int64_t k = 0;
  std::uint64_t beta = 0, tau = 0, beta_plus = 0, tau_plus = 0;
  bool same_sublattice_ok = true;  // <B1> = <B2>  <=>  simplices of B^T unimodularly equivalent
  bool isometry_map_ok = true;     // class map under ~ is a bijection
  bool proper_map_ok = true;       // class map under ~+ is a bijection
  std::vector<std::pair<IntMatrix, IntMatrix>> counterexamples;

  bool passed() const noexcept {
    return same_sublattice_ok && isometry_map_ok && proper_map_ok && beta == tau && beta_plus == tau_plus;
  }
};

namespace detail {

/// Checks that the sublattice partition and the simplex partition coincide
/// under transposition. Ranks agree by construction (rank(T) = rank(T^T)),
/// so this is a comparison of the two class_of arrays up to relabeling.
inline bool partitions_match(const Classification& sub, const Classification& simp, const HnfIndex& index,
                             std::vector<std::pair<IntMatrix, IntMatrix>>& counterexamples) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> fwd(sub.count(), kUnset), bwd(simp.count(), kUnset);
  std::vector<std::uint64_t> fwd_rank(sub.count(), 0), bwd_rank(simp.count(), 0);
  bool ok = true;
  for (std::uint64_t r = 0; r < sub.total; ++r) {
    const auto a = sub.class_of[r];
    const auto b = simp.class_of[r];
    if (fwd[a] == kUnset) {
      fwd[a] = b;
      fwd_rank[a] = r;
    } else if (fwd[a] != b) {
      ok = false;
      if (counterexamples.size() < 8)
        counterexamples.emplace_back(index.unrank(fwd_rank[a]).matrix(), index.unrank(r).matrix());
    }
    if (bwd[b] == kUnset) {
      bwd[b] = a;
      bwd_rank[b] = r;
    } else if (bwd[b] != a) {
      ok = false;
      if (counterexamples.size() < 8)
        counterexamples.emplace_back(index.unrank(bwd_rank[b]).matrix(), index.unrank(r).matrix());
    }
  }
  return ok;
}

}  // namespace detail

/// Runs the sublattice pipeline (left action of the coweight group on right
/// HNFs) and the simplex pipeline (right action of its transpose on left
/// normal forms) and checks that transposition matches them class by class.
inline BijectionReport verify_bijection(int n, std::int64_t k, unsigned workers = 1) {
  BijectionReport rep;
  rep.n = n;
  rep.k = k;
  const HnfIndex index(n, k);

  // Trivial group: B -> B^T must send each right HNF to a left normal form.
  for (std::uint64_t r = 0; r < index.size(); ++r) {
    const auto h = index.unrank(r).matrix();
    const auto t = transpose(h);
    if (hnf_left(t) != t) {
      rep.same_sublattice_ok = false;
      if (rep.counterexamples.size() < 8) rep.counterexamples.emplace_back(h, hnf_left(t));
    }
  }

  const auto g = coweight_group(n);
  const auto gp = proper_subgroup(g);
  const auto sub = classify_sublattices(n, k, g, workers, true);
  const auto sub_p = classify_sublattices(n, k, gp, workers, true);
  const auto simp = classify_simplices(n, k, transpose_group(g), workers, true);
  const auto simp_p = classify_simplices(n, k, transpose_group(gp), workers, true);

  rep.beta = sub.count();
  rep.beta_plus = sub_p.count();
  rep.tau = simp.count();
  rep.tau_plus = simp_p.count();
  rep.isometry_map_ok = detail::partitions_match(sub, simp, index, rep.counterexamples);
  rep.proper_map_ok = detail::partitions_match(sub_p, simp_p, index, rep.counterexamples);
  return rep;
}

}  // namespace coweight
