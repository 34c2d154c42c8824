#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "orient/pattern.hpp"

namespace orient {

/// Number of arcs (u, v) of H with sigma(u) > sigma(v).
inline int fas_with_ordering(const PatternGraph& h, const OrderingSigma& sigma) {
  if (sigma.size() != h.t()) throw Error(Errc::SizeMismatch, "ordering size differs from pattern size");
  int back = 0;
  for (const Arc& a : h.arcs())
    if (sigma.rank(a.tail) > sigma.rank(a.head)) ++back;
  return back;
}

struct FasResult {
  int value = 0;
  OrderingSigma witness;
};

/// Minimum feedback arc set by subset DP: best[S] = min over v in S placed
/// last of best[S \ v] + |arcs from v into S \ v|.
inline FasResult fas_exact(const PatternGraph& h, int max_t = 12) {
  const int t = h.t();
  if (t > max_t) throw Error(Errc::TooLarge, "fas_exact supports t <= " + std::to_string(max_t));
  std::vector<std::uint32_t> out(static_cast<std::size_t>(t), 0);
  for (const Arc& a : h.arcs()) out[static_cast<std::size_t>(a.tail)] |= 1U << a.head;

  const std::uint32_t full = (1U << t) - 1;
  std::vector<int> best(static_cast<std::size_t>(full) + 1, std::numeric_limits<int>::max());
  std::vector<std::int8_t> last(static_cast<std::size_t>(full) + 1, -1);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (std::uint32_t it = s; it; it &= it - 1) {
      int v = std::countr_zero(it);
      std::uint32_t rest = s & ~(1U << v);
      int cost = best[rest] + std::popcount(out[static_cast<std::size_t>(v)] & rest);
      if (cost < best[s]) {
        best[s] = cost;
        last[s] = static_cast<std::int8_t>(v);
      }
    }
  }
  std::vector<int> order(static_cast<std::size_t>(t));
  std::uint32_t s = full;
  for (int pos = t - 1; pos >= 0; --pos) {
    int v = last[s];
    order[static_cast<std::size_t>(pos)] = v;
    s &= ~(1U << v);
  }
  return {best[full], OrderingSigma::from_order(std::move(order))};
}

/// Completes H to a tournament H' by orienting every non-adjacent pair
/// forward along `sigma`, which must witness FAS(H) = 1.
inline PatternGraph complete_fas1(const PatternGraph& h, const OrderingSigma& sigma) {
  if (fas_with_ordering(h, sigma) != 1) throw Error(Errc::NotFas1, "ordering does not witness FAS = 1");
  if (fas_exact(h).value != 1) throw Error(Errc::NotFas1, "pattern FAS is not 1");
  Board g = h.graph();
  for (const Arc& p : g.undirected_pairs()) {
    if (sigma.before(p.tail, p.head))
      g.orient(p.tail, p.head);
    else
      g.orient(p.head, p.tail);
  }
  return PatternGraph(std::move(g));
}

inline PatternGraph complete_fas1(const PatternGraph& h) {
  FasResult f = fas_exact(h);
  if (f.value != 1) throw Error(Errc::NotFas1, "pattern FAS is " + std::to_string(f.value));
  return complete_fas1(h, f.witness);
}

}  // namespace orient
