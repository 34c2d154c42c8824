#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orient/board.hpp"

namespace orient {

/// Partition of a tournament into at most k transitive parts, or nullopt.
/// Exact backtracking; vertex v may only open part number (parts used so far).
/// Returned parts are the non-empty ones, in order of first use.
inline std::optional<std::vector<VertexSet>> k_colorable(const Board& t, int k) {
  const int n = t.n();
  if (!t.is_tournament()) throw Error(Errc::NotATournament, "k_colorable needs a tournament");
  if (n > 15 || k > 4 || k < 1)
    throw Error(Errc::BudgetExceeded, "k_colorable supports n <= 15, 1 <= k <= 4");

  std::vector<std::uint32_t> out(static_cast<std::size_t>(n)), in(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    out[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(t.out_row(v)[0]);
    in[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(t.in_row(v)[0]);
  }
  // A tournament is transitive iff it has no cyclic triangle, so adding v to
  // a transitive part only needs the triangles through v checked.
  auto can_join = [&](std::uint32_t part, int v) {
    std::uint32_t xs = out[static_cast<std::size_t>(v)] & part;
    std::uint32_t ys = in[static_cast<std::size_t>(v)] & part;
    for (std::uint32_t it = xs; it; it &= it - 1)
      if (out[static_cast<std::size_t>(std::countr_zero(it))] & ys) return false;
    return true;
  };

  std::vector<std::uint32_t> parts(static_cast<std::size_t>(k), 0);
  auto assign = [&](auto&& self, int v, int used) -> bool {
    if (v == n) return true;
    int limit = std::min(used + 1, k);
    for (int p = 0; p < limit; ++p) {
      if (!can_join(parts[static_cast<std::size_t>(p)], v)) continue;
      parts[static_cast<std::size_t>(p)] |= 1U << v;
      if (self(self, v + 1, std::max(used, p + 1))) return true;
      parts[static_cast<std::size_t>(p)] &= ~(1U << v);
    }
    return false;
  };
  if (!assign(assign, 0, 0)) return std::nullopt;

  std::vector<VertexSet> result;
  for (auto mask : parts)
    if (mask) result.push_back(VertexSet::from_mask(n, mask));
  return result;
}

inline bool is_transitive(const Board& t) { return k_colorable(t, 1).has_value(); }

}  // namespace orient
