/**
 * Enumeration of index-k sublattices of Z^n as right Hermite normal forms,
 * and reduction to equivalence classes under a finite matrix group.
 *
 * Every index-k sublattice has exactly one HNF basis: a diagonal
 * (d_1, ..., d_n) with product k and, in row i, off-diagonal entries in
 * [0, d_i). HnfIndex ranks these bases densely in enumeration order
 * (diagonal tuples lexicographically, off-diagonals as an odometer with the
 * last row-major position fastest), so orbit bookkeeping needs no hashing.
 */
#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "coweight/aut_group.hpp"
#include "coweight/checked.hpp"
#include "coweight/hnf.hpp"
#include "coweight/int_matrix.hpp"
#include "coweight/parallel.hpp"

namespace coweight {

namespace detail {

inline void require_index(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("index k must be >= 1, got " + std::to_string(k));
}

inline std::vector<std::int64_t> divisors(std::int64_t k) {
  std::vector<std::int64_t> lo, hi;
  for (std::int64_t d = 1; d * d <= k; ++d)
    if (k % d == 0) {
      lo.push_back(d);
      if (d != k / d) hi.push_back(k / d);
    }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

}  // namespace detail

class HnfIndex {
 public:
  using Diagonal = std::array<std::int64_t, IntMatrix::kMaxDim>;

  HnfIndex(int n, std::int64_t k) : n_(n), k_(k) {
    if (n < 1 || n > IntMatrix::kMaxDim)
      throw dimension_error("HnfIndex: dimension must be in 1.." + std::to_string(IntMatrix::kMaxDim));
    detail::require_index(k);
    Diagonal d{};
    build(0, k, d);
    offsets_.reserve(diagonals_.size() + 1);
    std::uint64_t total = 0;
    for (const auto& diag : diagonals_) {
      offsets_.push_back(total);
      total = checked::add(total, block_size(diag));
    }
    offsets_.push_back(total);
  }

  int dim() const noexcept { return n_; }
  std::int64_t index() const noexcept { return k_; }
  std::uint64_t size() const noexcept { return offsets_.back(); }
  const std::vector<Diagonal>& diagonals() const noexcept { return diagonals_; }

  std::uint64_t rank(const IntMatrix& h) const {
    Diagonal d{};
    for (int i = 0; i < n_; ++i) d[i] = h(i, i);
    const auto it = std::lower_bound(diagonals_.begin(), diagonals_.end(), d);
    if (it == diagonals_.end() || *it != d)
      throw internal_error("HnfIndex::rank: diagonal does not belong to this index");
    std::uint64_t r = 0;
    for (int i = 1; i < n_; ++i)
      for (int j = 0; j < i; ++j)
        r = r * static_cast<std::uint64_t>(d[i]) + static_cast<std::uint64_t>(h(i, j));
    return offsets_[it - diagonals_.begin()] + r;
  }

  HnfBasis unrank(std::uint64_t r) const {
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), r);
    const auto block = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    const Diagonal& d = diagonals_[block];
    std::uint64_t rem = r - offsets_[block];
    IntMatrix h(n_);
    for (int i = 0; i < n_; ++i) h(i, i) = d[i];
    for (int i = n_ - 1; i >= 1; --i)
      for (int j = i - 1; j >= 0; --j) {
        const auto base = static_cast<std::uint64_t>(d[i]);
        h(i, j) = static_cast<std::int64_t>(rem % base);
        rem /= base;
      }
    return HnfBasis::trusted(h);
  }

 private:
  void build(int pos, std::int64_t rest, Diagonal& d) {
    if (pos == n_ - 1) {
      d[pos] = rest;
      diagonals_.push_back(d);
      return;
    }
    for (auto q : detail::divisors(rest)) {
      d[pos] = q;
      build(pos + 1, rest / q, d);
    }
  }

  std::uint64_t block_size(const Diagonal& d) const {
    std::uint64_t s = 1;
    for (int i = 1; i < n_; ++i)
      for (int j = 0; j < i; ++j) s = checked::mul(s, static_cast<std::uint64_t>(d[i]));
    return s;
  }

  int n_;
  std::int64_t k_;
  std::vector<Diagonal> diagonals_;
  std::vector<std::uint64_t> offsets_;
};

/// Streams every index-k HNF basis of Z^n, in HnfIndex order. Returns the count.
template <class Fn>
std::uint64_t for_each_hnf(int n, std::int64_t k, Fn&& fn) {
  const HnfIndex index(n, k);
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) slots.emplace_back(i, j);

  std::uint64_t count = 0;
  for (const auto& d : index.diagonals()) {
    IntMatrix h(n);
    for (int i = 0; i < n; ++i) h(i, i) = d[i];
    bool more = true;
    while (more) {
      fn(HnfBasis::trusted(h));
      ++count;
      more = false;
      for (auto s = slots.rbegin(); s != slots.rend(); ++s) {
        auto& v = h(s->first, s->second);
        if (++v < d[s->first]) {
          more = true;
          break;
        }
        v = 0;
      }
    }
  }
  return count;
}

inline std::vector<HnfBasis> enumerate_hnf(int n, std::int64_t k) {
  std::vector<HnfBasis> out;
  for_each_hnf(n, k, [&](const HnfBasis& h) { out.push_back(h); });
  return out;
}

/// Canonical label of an equivalence class: the lexicographically smallest
/// (row-major) normal form over the group orbit. For sublattices this is a
/// right HNF, for simplices a left HNF.
struct OrbitKey {
  IntMatrix canonical;

  std::int64_t index() const { return det(canonical); }
  friend bool operator==(const OrbitKey&, const OrbitKey&) = default;
  friend auto operator<=>(const OrbitKey&, const OrbitKey&) = default;
};

/// min over R in g of hnf_right(R * b).
inline OrbitKey canonical_form(const IntMatrix& b, const AutGroup& g) {
  if (b.dim() != g.dim()) throw dimension_error("canonical_form: dimension mismatch");
  IntMatrix best;
  bool first = true;
  for (const auto& r : g) {
    auto h = hnf_right(mul(r, b)).matrix();
    if (first || h < best) {
      best = h;
      first = false;
    }
  }
  return {best};
}

struct OrbitClass {
  OrbitKey key;
  std::uint64_t orbit_size = 0;
  std::vector<std::uint64_t> members;  // ranks; filled only when tracked
};

struct Classification {
  std::uint64_t total = 0;            // number of objects classified
  std::vector<OrbitClass> classes;    // sorted by key
  std::vector<std::uint32_t> class_of;  // rank -> class position; only when tracked

  std::size_t count() const noexcept { return classes.size(); }
};

/// Orbit marking over a densely ranked object set. `unrank(r)` returns the
/// object with rank r as an IntMatrix, `act(R, x)` returns the normal form of
/// the image, `rank(y)` maps a normal form back to its rank. Each orbit is
/// expanded once (workers may race on a seed; duplicates are merged), so the
/// result is independent of the worker count.
template <class Unrank, class Act, class Rank>
Classification classify_orbits(std::uint64_t total, const AutGroup& g, Unrank&& unrank, Act&& act,
                               Rank&& rank, unsigned workers, bool track_membership) {
  std::unique_ptr<std::atomic<bool>[]> visited(new std::atomic<bool>[total]());
  std::vector<std::vector<OrbitClass>> local(std::max(1u, workers));

  parallel_chunks(total, workers, 256, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
    std::vector<std::uint64_t> ranks;
    ranks.reserve(g.order());
    for (std::uint64_t i = b; i < e; ++i) {
      if (visited[i].load(std::memory_order_relaxed)) continue;
      const IntMatrix x = unrank(i);
      IntMatrix best;
      bool first = true;
      ranks.clear();
      for (const auto& r : g) {
        IntMatrix y = act(r, x);
        ranks.push_back(rank(y));
        if (first || y < best) {
          best = y;
          first = false;
        }
      }
      std::sort(ranks.begin(), ranks.end());
      ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
      for (auto q : ranks) visited[q].store(true, std::memory_order_relaxed);
      OrbitClass c{{best}, ranks.size(), {}};
      if (track_membership) c.members = ranks;
      local[w].push_back(std::move(c));
    }
  });

  Classification out;
  out.total = total;
  for (auto& v : local)
    for (auto& c : v) out.classes.push_back(std::move(c));
  std::sort(out.classes.begin(), out.classes.end(),
            [](const OrbitClass& a, const OrbitClass& b) { return a.key < b.key; });
  out.classes.erase(std::unique(out.classes.begin(), out.classes.end(),
                                [](const OrbitClass& a, const OrbitClass& b) { return a.key == b.key; }),
                    out.classes.end());

  std::uint64_t covered = 0;
  for (const auto& c : out.classes) covered += c.orbit_size;
  if (covered != total)
    throw internal_error("classify_orbits: orbit sizes sum to " + std::to_string(covered) +
                         ", expected " + std::to_string(total));

  if (track_membership) {
    out.class_of.assign(total, 0);
    for (std::size_t c = 0; c < out.classes.size(); ++c)
      for (auto q : out.classes[c].members) out.class_of[q] = static_cast<std::uint32_t>(c);
  }
  return out;
}

/// Index-k sublattices of Z^n modulo B ~ R B (R in g).
inline Classification classify_sublattices(int n, std::int64_t k, const AutGroup& g,
                                           unsigned workers = 1, bool track_membership = false) {
  if (g.dim() != n) throw dimension_error("classify_sublattices: group dimension mismatch");
  const HnfIndex index(n, k);
  return classify_orbits(
      index.size(), g, [&](std::uint64_t r) { return index.unrank(r).matrix(); },
      [](const IntMatrix& r, const IntMatrix& h) { return hnf_right(mul(r, h)).matrix(); },
      [&](const IntMatrix& h) { return index.rank(h); }, workers, track_membership);
}

inline std::uint64_t count_classes(int n, std::int64_t k, const AutGroup& g, unsigned workers = 1) {
  return classify_sublattices(n, k, g, workers).count();
}

inline std::vector<OrbitKey> list_classes(int n, std::int64_t k, const AutGroup& g,
                                          unsigned workers = 1) {
  const auto c = classify_sublattices(n, k, g, workers);
  std::vector<OrbitKey> out;
  out.reserve(c.count());
  for (const auto& cls : c.classes) out.push_back(cls.key);
  return out;
}

}  // namespace coweight
