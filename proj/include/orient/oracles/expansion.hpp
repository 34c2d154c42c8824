#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "orient/board.hpp"

namespace orient {

/// Outcome of a k-expansion check. A false verdict always carries a
/// witness: either a small set A lacking in- or out-neighbours, or a pair
/// (A, B) of disjoint k-sets with no arc from A to B.
struct ExpansionReport {
  bool expanding = true;
  std::optional<VertexSet> witness_a;
  std::optional<VertexSet> witness_b;
};

namespace detail {

inline bool next_combination(std::uint32_t& mask, std::uint32_t limit) {
  std::uint32_t c = mask & (~mask + 1);
  std::uint32_t r = mask + c;
  if (r == 0 || r >= limit) return false;
  mask = (((r ^ mask) >> 2) / c) | r;
  return mask < limit;
}

}  // namespace detail

/// Exhaustive k-expansion check (n <= 22).
inline ExpansionReport is_k_expanding(const Board& g, int k) {
  const int n = g.n();
  if (n > 22) throw Error(Errc::BudgetExceeded, "exact expansion check supports n <= 22");
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n)), in(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    out[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.out_row(v)[0]);
    in[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.in_row(v)[0]);
  }
  const std::uint32_t limit = 1U << n;
  const std::uint32_t all = limit - 1;
  auto nbr = [&](std::uint32_t a, const std::vector<std::uint32_t>& rows) {
    std::uint32_t r = 0;
    for (std::uint32_t it = a; it; it &= it - 1) r |= rows[static_cast<std::size_t>(std::countr_zero(it))];
    return r & ~a;
  };

  for (int s = 1; s <= std::min(k, n); ++s) {
    std::uint32_t a = (1U << s) - 1;
    do {
      if (nbr(a, out) == 0 || nbr(a, in) == 0) return {false, VertexSet::from_mask(n, a), std::nullopt};
    } while (detail::next_combination(a, limit));
  }

  if (2 * k <= n) {
    std::uint32_t a = (1U << k) - 1;
    do {
      std::uint32_t rest = all & ~a & ~nbr(a, out);
      if (std::popcount(rest) >= k) {
        std::uint32_t b = 0;
        for (int i = 0; i < k; ++i) {
          std::uint32_t low = rest & (~rest + 1);
          b |= low;
          rest &= rest - 1;
        }
        return {false, VertexSet::from_mask(n, a), VertexSet::from_mask(n, b)};
      }
    } while (detail::next_combination(a, limit));
  }
  return {};
}

/// Random-set k-expansion check. One-sided: a false verdict is certified by
/// its witness, a true verdict only means no sampled set failed.
inline ExpansionReport is_k_expanding_sampled(const Board& g, int k, int trials, std::uint64_t seed) {
  const int n = g.n();
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;

  auto random_set = [&](int size) {
    std::shuffle(verts.begin(), verts.end(), rng);
    VertexSet s(n);
    for (int i = 0; i < size; ++i) s.insert(verts[static_cast<std::size_t>(i)]);
    return s;
  };

  std::uniform_int_distribution<int> small(1, std::min(k, n));
  for (int t = 0; t < trials; ++t) {
    VertexSet a = random_set(small(rng));
    if (g.out_set(a).empty() || g.in_set(a).empty()) return {false, a, std::nullopt};
    if (2 * k <= n) {
      VertexSet big = random_set(k);
      VertexSet rest = VertexSet::full(n) - big - g.out_set(big);
      if (rest.size() >= k) {
        VertexSet b(n);
        auto members = rest.members();
        for (int i = 0; i < k; ++i) b.insert(members[static_cast<std::size_t>(i)]);
        return {false, big, b};
      }
    }
  }
  return {};
}

}  // namespace orient
