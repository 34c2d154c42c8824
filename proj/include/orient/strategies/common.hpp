#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orient/engine.hpp"

namespace orient {

/// Supplies role() and clone() for a concrete strategy.
template <class Derived, Role R>
class StrategyBase : public Strategy {
 public:
  Role role() const override { return R; }
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<Derived>(static_cast<const Derived&>(*this));
  }
};

/// Lowest-index undirected pair as (low, high), or nullopt on a tournament.
inline std::optional<Arc> lowest_undirected(const Board& b) {
  std::size_t i = b.first_undirected(0);
  if (i >= b.pair_count()) return std::nullopt;
  return b.pair_at(i);
}

/// Keeps a scratch copy of the board so multi-arc moves stay legal.
class MoveBuilder {
 public:
  MoveBuilder(const Board& b, int budget) : board_(b), budget_(budget) {}

  const Board& board() const { return board_; }
  int left() const { return budget_ - static_cast<int>(move_.size()); }
  bool full() const { return left() <= 0 || board_.is_tournament(); }

  bool add(int u, int v) {
    if (full() || u == v || !board_.is_undirected(u, v)) return false;
    board_.orient(u, v);
    move_.push_back({u, v});
    return true;
  }
  bool add(Arc a) { return add(a.tail, a.head); }

  /// Tops the move up to one arc with the lowest pair, low -> high.
  void ensure_nonempty() {
    if (!move_.empty()) return;
    if (auto a = lowest_undirected(board_)) add(*a);
  }

  Move take() { return std::move(move_); }

 private:
  Board board_;
  int budget_;
  Move move_;
};

/// Hash of a vertex sequence, for strategy fingerprints.
inline std::uint64_t hash_ints(std::uint64_t h, const std::vector<int>& xs) {
  for (int x : xs) h = hash_combine(h, static_cast<std::uint64_t>(x) + 1);
  return hash_combine(h, xs.size());
}

}  // namespace orient
