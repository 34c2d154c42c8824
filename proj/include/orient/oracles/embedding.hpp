#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "orient/pattern.hpp"

namespace orient {

/// Injective phi with (u, v) in E(H) => phi(u) -> phi(v) on the board, found
/// by backtracking over pattern vertices in decreasing degree order.
/// Non-arcs of H are unconstrained.
inline std::optional<std::vector<int>> contains_embedding(const Board& g, const PatternGraph& h) {
  const int t = h.t();
  const int n = g.n();
  if (t > n) return std::nullopt;

  std::vector<int> hout(static_cast<std::size_t>(t), 0), hin(static_cast<std::size_t>(t), 0);
  for (const Arc& a : h.arcs()) {
    ++hout[static_cast<std::size_t>(a.tail)];
    ++hin[static_cast<std::size_t>(a.head)];
  }
  std::vector<int> order(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return hout[static_cast<std::size_t>(a)] + hin[static_cast<std::size_t>(a)] >
           hout[static_cast<std::size_t>(b)] + hin[static_cast<std::size_t>(b)];
  });

  std::vector<int> gout(static_cast<std::size_t>(n)), gin(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    gout[static_cast<std::size_t>(v)] = g.out_degree(v);
    gin[static_cast<std::size_t>(v)] = g.in_degree(v);
  }

  std::vector<int> phi(static_cast<std::size_t>(t), -1);
  VertexSet used(n);

  auto fits = [&](int hv, int gv) {
    if (gout[static_cast<std::size_t>(gv)] < hout[static_cast<std::size_t>(hv)]) return false;
    if (gin[static_cast<std::size_t>(gv)] < hin[static_cast<std::size_t>(hv)]) return false;
    for (int hw = 0; hw < t; ++hw) {
      int gw = phi[static_cast<std::size_t>(hw)];
      if (gw < 0) continue;
      if (h.has_arc(hv, hw) && !g.has_arc(gv, gw)) return false;
      if (h.has_arc(hw, hv) && !g.has_arc(gw, gv)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    int hv = order[depth];
    for (int gv = 0; gv < n; ++gv) {
      if (used.contains(gv) || !fits(hv, gv)) continue;
      phi[static_cast<std::size_t>(hv)] = gv;
      used.insert(gv);
      if (self(self, depth + 1)) return true;
      used.erase(gv);
      phi[static_cast<std::size_t>(hv)] = -1;
    }
    return false;
  };

  if (search(search, 0)) return phi;
  return std::nullopt;
}

}  // namespace orient
