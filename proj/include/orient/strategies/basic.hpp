#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "orient/strategies/common.hpp"

namespace orient {

/// Orients the lowest undirected pairs low -> high, up to its bias.
template <Role R>
class LowestPairStrategy : public StrategyBase<LowestPairStrategy<R>, R> {
 public:
  std::string name() const override { return R == Role::Maker ? "maker-first" : "breaker-first"; }
  Move next_move(const TurnContext& ctx) override {
    MoveBuilder mb(ctx.board, ctx.bias());
    while (!mb.full())
      if (auto a = lowest_undirected(mb.board())) mb.add(*a);
    return mb.take();
  }
};

/// Uniformly random undirected pairs, each direction a fair coin.
template <Role R>
class RandomStrategy : public StrategyBase<RandomStrategy<R>, R> {
 public:
  std::string name() const override { return R == Role::Maker ? "maker-random" : "breaker-random"; }

  Move next_move(const TurnContext& ctx) override {
    MoveBuilder mb(ctx.board, ctx.bias());
    auto& rng = this->rng_;
    const Board& b = ctx.board;
    const std::size_t pairs = b.pair_count();
    if (b.undirected_count() * 8 >= pairs) {
      // Dense: rejection sampling over pair indices.
      std::uniform_int_distribution<std::size_t> pick(0, pairs - 1);
      while (!mb.full()) {
        Arc p = b.pair_at(pick(rng));
        if (!mb.board().is_undirected(p.tail, p.head)) continue;
        if (rng() & 1U) std::swap(p.tail, p.head);
        mb.add(p);
      }
    } else {
      auto open = b.undirected_pairs();
      std::shuffle(open.begin(), open.end(), rng);
      for (Arc p : open) {
        if (mb.full()) break;
        if (rng() & 1U) std::swap(p.tail, p.head);
        mb.add(p);
      }
    }
    return mb.take();
  }
};

/// Breaker trying to leave some vertex without in- or out-arcs. Targets the
/// (vertex, side) maximizing out - 2q*in (source side) or in - 2q*out (sink
/// side) among vertices still open, ties to the lowest vertex, source first.
class BreakerGreedyStar : public StrategyBase<BreakerGreedyStar, Role::Breaker> {
 public:
  std::string name() const override { return "breaker-greedy-star"; }

  Move next_move(const TurnContext& ctx) override {
    MoveBuilder mb(ctx.board, ctx.bias());
    const int n = ctx.board.n();
    const long long q2 = 2LL * ctx.config.q;
    while (!mb.full()) {
      const Board& b = mb.board();
      int best_v = -1;
      bool best_source = true;
      long long best = 0;
      for (int v = 0; v < n; ++v) {
        if (b.undirected_degree(v) == 0) continue;
        long long src = b.out_degree(v) - q2 * b.in_degree(v);
        long long snk = b.in_degree(v) - q2 * b.out_degree(v);
        if (best_v < 0 || src > best) {
          best_v = v;
          best_source = true;
          best = src;
        }
        if (snk > best) {
          best_v = v;
          best_source = false;
          best = snk;
        }
      }
      if (best_v < 0) break;
      for (int w = 0; w < n && !mb.full(); ++w) {
        if (w == best_v || !mb.board().is_undirected(best_v, w)) continue;
        if (best_source)
          mb.add(best_v, w);
        else
          mb.add(w, best_v);
      }
    }
    mb.ensure_nonempty();
    return mb.take();
  }
};

}  // namespace orient
