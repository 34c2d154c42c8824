#pragma once

#include <string>
#include <vector>

#include "orient/boxgame.hpp"
#include "orient/strategies/common.hpp"

namespace orient {

/// Breaker aiming for a vertex of in-degree 0. With A = {0..b-1} and B the
/// rest, box v in A holds the pairs {v, w}, w in B (real items) and the
/// pairs inside A at v (b-1 virtual items); the box dies once v receives an
/// in-arc. Breaker plays Box-Maker of the two-box game with its b arcs per
/// turn; a completed box is a vertex with out-degree n-1.
class BreakerBoxHamilton : public StrategyBase<BreakerBoxHamilton, Role::Breaker> {
 public:
  BreakerBoxHamilton(int n, int b) : n_(n), b_(b) {
    if (n < 2 || b < 1 || b >= n) throw Error(Errc::CriterionUnmet, "box strategy needs 1 <= b < n");
    if (!at_most_bias_harmonic(n, b, b))
      throw Error(Errc::CriterionUnmet, "n = " + std::to_string(n) + " exceeds b * H_b for b = " + std::to_string(b));
  }

  std::string name() const override { return "breaker-box"; }

  void begin(const GameConfig& config, std::uint64_t seed) override {
    if (config.n != n_ || config.q != b_) throw Error(Errc::BadConfig, "breaker-box built for another (n, q)");
    Strategy::begin(config, seed);
  }

  Move next_move(const TurnContext& ctx) override {
    MoveBuilder mb(ctx.board, ctx.bias());
    while (!mb.full()) {
      BoxGameState s = boxes(mb.board());
      std::vector<BoxClaim> claims;
      try {
        claims = box_maker_move(s, mb.left(), true);
      } catch (const Error& e) {
        if (e.code() != Errc::AllDestroyed) throw;
      }
      if (claims.empty() || !place(mb, claims.front())) break;
    }
    while (!mb.full()) {
      auto a = lowest_undirected(mb.board());
      if (!a) break;
      const Board& b = mb.board();
      if (b.in_degree(a->tail) > 0 && b.in_degree(a->head) == 0) std::swap(a->tail, a->head);
      mb.add(*a);
    }
    return mb.take();
  }

  /// Box state read off a board: counts are orientations out of v by anyone.
  BoxGameState boxes(const Board& board) const {
    BoxGameState s(BoxVariant::TwoBox, std::vector<int>(static_cast<std::size_t>(b_), n_ - b_), b_ - 1);
    for (int v = 0; v < b_; ++v) {
      int real = 0, virt = 0;
      for (int w = 0; w < n_; ++w) {
        if (w == v || !board.has_arc(v, w)) continue;
        (w < b_ ? virt : real) += 1;
      }
      s.set_counts(v, real, virt, board.in_degree(v) > 0);
    }
    return s;
  }

 private:
  /// Real claims take the lowest open v -> w with w in B; virtual claims
  /// take v -> x in A, preferring x whose box is already dead.
  bool place(MoveBuilder& mb, const BoxClaim& c) {
    const Board& b = mb.board();
    const int v = c.box;
    if (!c.is_virtual) {
      for (int w = b_; w < n_; ++w)
        if (b.is_undirected(v, w)) return mb.add(v, w);
    }
    int pick = -1;
    for (int x = 0; x < b_; ++x) {
      if (x == v || !b.is_undirected(v, x)) continue;
      if (pick < 0 || (b.in_degree(x) > 0 && b.in_degree(pick) == 0)) pick = x;
    }
    if (pick >= 0) return mb.add(v, pick);
    for (int w = b_; w < n_; ++w)
      if (b.is_undirected(v, w)) return mb.add(v, w);
    return false;
  }

  int n_;
  int b_;
};

/// Maker attacking Breaker's boxes: kills the live vertex of A = {0..q-1}
/// (any vertex of in-degree 0 once A is dead) closest to completion, by an
/// arc into it from the lowest vertex of B still available.
class MakerGreedyAttack : public StrategyBase<MakerGreedyAttack, Role::Maker> {
 public:
  std::string name() const override { return "maker-greedy-attack"; }

  Move next_move(const TurnContext& ctx) override {
    MoveBuilder mb(ctx.board, ctx.bias());
    const int n = ctx.board.n();
    const int a_size = std::min(ctx.config.q, n);
    while (!mb.full()) {
      const Board& b = mb.board();
      int target = -1;
      auto consider = [&](int lo, int hi) {
        for (int v = lo; v < hi; ++v) {
          if (b.in_degree(v) > 0 || b.undirected_degree(v) == 0) continue;
          if (target < 0 || b.undirected_degree(v) < b.undirected_degree(target)) target = v;
        }
      };
      consider(0, a_size);
      if (target < 0) consider(0, n);
      if (target < 0) break;
      bool done = false;
      for (int w = a_size; w < n && !done; ++w)
        if (w != target && b.is_undirected(w, target)) done = mb.add(w, target);
      for (int w = 0; w < a_size && !done; ++w)
        if (w != target && b.is_undirected(w, target)) done = mb.add(w, target);
      if (!done) break;
    }
    mb.ensure_nonempty();
    return mb.take();
  }
};

}  // namespace orient
