#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orient/strategies/common.hpp"

namespace orient {

/// Lengths a closing back arc may produce when Maker hunts C_k: L >= k and
/// L = k + (k-2) r. A tournament holding such a cycle holds a C_k.
inline bool closable_length(int length, int k) {
  if (length < k) return false;
  return k == 3 || (length - k) % (k - 2) == 0;
}

/// Back arcs x_j -> x_i (i < j, 0-based path positions) that would close an
/// admissible cycle on an undirected pair, in pair-index order.
inline std::vector<Arc> closing_candidates(const Board& b, const std::vector<int>& path, int k) {
  std::vector<std::pair<std::size_t, Arc>> found;
  for (std::size_t i = 0; i < path.size(); ++i)
    for (std::size_t j = i + 2; j < path.size(); ++j) {
      int x = path[i], y = path[j];
      if (!b.is_undirected(x, y) || !closable_length(static_cast<int>(j - i + 1), k)) continue;
      found.push_back({b.pair_index(x, y), Arc{y, x}});
    }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
  std::vector<Arc> out;
  for (const auto& f : found) out.push_back(f.second);
  return out;
}

/// Maker hunting a cycle (k = 3) or a C_k. Keeps a directed path, closes an
/// admissible cycle over it when an undirected back pair allows, and
/// otherwise lengthens the path by one arc as in the longest-path argument:
/// for an off-path v and the last position k with no arc v -> u_k, orient
/// u_k -> v and splice v in after u_k.
class MakerCycle : public StrategyBase<MakerCycle, Role::Maker> {
 public:
  explicit MakerCycle(int k = 3) : k_(k) {
    if (k < 3) throw Error(Errc::InvalidArgument, "cycle length k must be >= 3");
  }

  std::string name() const override { return k_ == 3 ? "maker-cycle" : "maker-ck:" + std::to_string(k_); }

  void begin(const GameConfig& config, std::uint64_t seed) override {
    Strategy::begin(config, seed);
    path_.clear();
    closed_.reset();
  }

  Move next_move(const TurnContext& ctx) override {
    MoveBuilder mb(ctx.board, ctx.bias());
    while (!mb.full()) step(mb);
    return mb.take();
  }

  std::uint64_t fingerprint() const override {
    std::uint64_t h = hash_ints(static_cast<std::uint64_t>(k_), path_);
    return closed_ ? hash_ints(h ^ 0x5bd1e995ULL, *closed_) : h;
  }

  const std::vector<int>& path() const { return path_; }
  const std::optional<std::vector<int>>& closed_cycle() const { return closed_; }
  int k() const { return k_; }

 private:
  void step(MoveBuilder& mb) {
    const Board& b = mb.board();
    if (closed_) {
      mb.ensure_nonempty();
      if (!mb.full()) fallback(mb);
      return;
    }
    if (path_.empty()) path_.push_back(0);
    extend_free(b);

    auto closing = closing_candidates(b, path_, k_);
    if (!closing.empty()) {
      Arc a = closing.front();
      mb.add(a);
      auto head_pos = std::find(path_.begin(), path_.end(), a.head);
      auto tail_pos = std::find(path_.begin(), path_.end(), a.tail);
      closed_ = std::vector<int>(head_pos, tail_pos + 1);
      return;
    }

    const int n = b.n();
    std::vector<bool> on(static_cast<std::size_t>(n), false);
    for (int u : path_) on[static_cast<std::size_t>(u)] = true;
    for (int v = 0; v < n; ++v) {
      if (on[static_cast<std::size_t>(v)]) continue;
      int pos = last_without_arc_from(b, v);
      // After free extension {u_pos, v} is undirected.
      if (pos >= 0 && b.is_undirected(path_[static_cast<std::size_t>(pos)], v)) {
        mb.add(path_[static_cast<std::size_t>(pos)], v);
        path_.insert(path_.begin() + pos + 1, v);
        return;
      }
    }
    fallback(mb);
  }

  /// Last path position j with no arc v -> path[j], or -1.
  int last_without_arc_from(const Board& b, int v) const {
    for (int j = static_cast<int>(path_.size()) - 1; j >= 0; --j)
      if (!b.has_arc(v, path_[static_cast<std::size_t>(j)])) return j;
    return -1;
  }

  /// Splices in off-path vertices whose arcs already allow it.
  void extend_free(const Board& b) {
    const int n = b.n();
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<bool> on(static_cast<std::size_t>(n), false);
      for (int u : path_) on[static_cast<std::size_t>(u)] = true;
      for (int v = 0; v < n && !grew; ++v) {
        if (on[static_cast<std::size_t>(v)]) continue;
        int pos = last_without_arc_from(b, v);
        if (pos < 0) {
          path_.insert(path_.begin(), v);
          grew = true;
        } else if (b.has_arc(path_[static_cast<std::size_t>(pos)], v)) {
          path_.insert(path_.begin() + pos + 1, v);
          grew = true;
        }
      }
    }
  }

  /// Lowest undirected pair, oriented forward along the path when both ends
  /// are on it, else low -> high.
  void fallback(MoveBuilder& mb) {
    auto a = lowest_undirected(mb.board());
    if (!a) return;
    auto pu = std::find(path_.begin(), path_.end(), a->tail);
    auto pv = std::find(path_.begin(), path_.end(), a->head);
    if (pu != path_.end() && pv != path_.end() && pv < pu) std::swap(a->tail, a->head);
    mb.add(*a);
  }

  int k_;
  std::vector<int> path_;
  std::optional<std::vector<int>> closed_;
};

/// Breaker answering each Maker arc u -> v by orienting every undirected pair
/// at u away from u. With bias >= n-2 no cycle can ever appear. When Maker's
/// sources are exhausted, completes the out-star of the vertex with the
/// fewest (non-zero) undirected pairs, so every Breaker arc still leaves a
/// finished out-star behind.
class BreakerOutstar : public StrategyBase<BreakerOutstar, Role::Breaker> {
 public:
  std::string name() const override { return "breaker-outstar"; }

  Move next_move(const TurnContext& ctx) override {
    MoveBuilder mb(ctx.board, ctx.bias());
    const int n = ctx.board.n();
    for (const Arc& a : ctx.last_opponent_move())
      for (int w = 0; w < n && !mb.full(); ++w)
        if (w != a.tail) mb.add(a.tail, w);

    if (mb.left() == ctx.bias()) {
      const Board& b = mb.board();
      int best = -1;
      for (int v = 0; v < n; ++v) {
        int d = b.undirected_degree(v);
        if (d > 0 && (best < 0 || d < b.undirected_degree(best))) best = v;
      }
      if (best >= 0)
        for (int w = 0; w < n && !mb.full(); ++w)
          if (w != best) mb.add(best, w);
    }
    mb.ensure_nonempty();
    return mb.take();
  }
};

/// True when every tail of a Maker arc has no undirected pair left.
inline bool outstar_invariant_holds(const Board& b, std::span<const TranscriptEntry> transcript) {
  for (const auto& e : transcript) {
    if (e.role != Role::Maker) continue;
    for (const Arc& a : e.move)
      if (b.undirected_degree(a.tail) != 0) return false;
  }
  return true;
}

}  // namespace orient
