#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "orient/board.hpp"

namespace orient {

/// A vertex ordering: rank[v] is the position of v (0-based).
class OrderingSigma {
 public:
  OrderingSigma() = default;

  static OrderingSigma identity(int n) {
    OrderingSigma s;
    s.rank_.resize(static_cast<std::size_t>(n));
    std::iota(s.rank_.begin(), s.rank_.end(), 0);
    return s;
  }
  /// From the vertex sequence in increasing rank.
  static OrderingSigma from_order(std::vector<int> order) {
    OrderingSigma s;
    s.rank_.assign(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
      int v = order[i];
      if (v < 0 || v >= static_cast<int>(order.size()) || s.rank_[static_cast<std::size_t>(v)] != -1)
        throw Error(Errc::InvalidArgument, "ordering is not a permutation");
      s.rank_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    return s;
  }
  static OrderingSigma from_ranks(std::vector<int> ranks) {
    std::vector<int> order(ranks.size(), -1);
    for (std::size_t v = 0; v < ranks.size(); ++v) {
      int r = ranks[v];
      if (r < 0 || r >= static_cast<int>(ranks.size()) || order[static_cast<std::size_t>(r)] != -1)
        throw Error(Errc::InvalidArgument, "ranks are not a permutation");
      order[static_cast<std::size_t>(r)] = static_cast<int>(v);
    }
    return from_order(std::move(order));
  }

  int size() const { return static_cast<int>(rank_.size()); }
  int rank(int v) const { return rank_.at(static_cast<std::size_t>(v)); }
  /// True when u precedes v.
  bool before(int u, int v) const { return rank(u) < rank(v); }

  std::vector<int> order() const {
    std::vector<int> o(rank_.size());
    for (std::size_t v = 0; v < rank_.size(); ++v) o[static_cast<std::size_t>(rank_[v])] = static_cast<int>(v);
    return o;
  }
  const std::vector<int>& ranks() const { return rank_; }

  bool operator==(const OrderingSigma&) const = default;

 private:
  std::vector<int> rank_;
};

/// A fixed oriented pattern graph H on vertices 0..t-1. Non-arcs are
/// unconstrained. Stored as a Board so the oriented invariant is enforced
/// at construction.
class PatternGraph {
 public:
  PatternGraph() = default;
  explicit PatternGraph(Board b) : g_(std::move(b)) {}
  PatternGraph(int t, const std::vector<Arc>& arcs) : g_(t) {
    for (const Arc& a : arcs) g_.orient(a);
  }

  int t() const { return g_.n(); }
  std::vector<Arc> arcs() const { return g_.arcs(); }
  std::size_t arc_count() const { return g_.oriented_count(); }
  bool has_arc(int u, int v) const { return g_.has_arc(u, v); }
  const Board& graph() const { return g_; }

  std::string to_text() const { return g_.to_text(); }
  static PatternGraph from_text(const std::string& text) { return PatternGraph(Board::from_text(text)); }

 private:
  Board g_{1};
};

/// Directed cycle 0 -> 1 -> ... -> k-1 -> 0.
inline PatternGraph cycle_pattern(int k) {
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i) arcs.push_back({i, (i + 1) % k});
  return PatternGraph(k, arcs);
}

}  // namespace orient
