#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "orient/hypergraph.hpp"
#include "orient/oracles/fas.hpp"
#include "orient/strategies/common.hpp"

namespace orient {

/// Number of r-subsets of pair slots inside t-subsets of n vertices.
inline long long sigma_family_size(int n, int t, int r) {
  auto binom = [](long long a, long long b) {
    if (b < 0 || b > a) return 0LL;
    long long c = 1;
    for (long long i = 0; i < b; ++i) c = c * (a - i) / (i + 1);
    return c;
  };
  return binom(n, t) * binom(static_cast<long long>(t) * (t - 1) / 2, r);
}

/// Breaker against a copy of H: every arc it plays is forward under sigma,
/// so a copy of H needs at least r = FAS(H) backward arcs, all Maker's.
/// The blocker treats each r-set of slots inside a t-set as a winning set
/// of backward arcs and runs the potential blocker on it (n <= 10); beyond
/// that it protects the pairs touching the most backward arcs.
class BreakerSigmaPotential : public StrategyBase<BreakerSigmaPotential, Role::Breaker> {
 public:
  static constexpr int kExactLimit = 10;

  explicit BreakerSigmaPotential(PatternGraph h, std::optional<OrderingSigma> sigma = std::nullopt)
      : h_(std::move(h)), sigma_(std::move(sigma)) {
    r_ = fas_exact(h_).value;
    if (r_ < 2) throw Error(Errc::FasTooSmall, "FAS(H) = " + std::to_string(r_) + " < 2");
  }

  std::string name() const override { return "breaker-sigma"; }

  void begin(const GameConfig& config, std::uint64_t seed) override {
    Strategy::begin(config, seed);
    n_ = config.n;
    if (!sigma_ || sigma_->size() != n_) sigma_ = OrderingSigma::identity(n_);
    seen_ = Board(n_);
    state_.reset();
    if (n_ <= kExactLimit && h_.t() <= n_) build(config.p, config.q);
  }

  Move next_move(const TurnContext& ctx) override {
    sync(ctx.board);
    MoveBuilder mb(ctx.board, ctx.bias());
    if (state_) {
      if (state_->free_count() > 0)
        for (int e : potential_blocker_move(*state_, mb.left())) {
          Arc p = ctx.board.pair_at(static_cast<std::size_t>(e));
          mb.add(forward(p.tail, p.head));
        }
    } else {
      heuristic(mb);
    }
    while (!mb.full())
      if (auto a = lowest_undirected(mb.board())) mb.add(forward(a->tail, a->head));
    sync(mb.board());
    return mb.take();
  }

  int fas_value() const { return r_; }
  const OrderingSigma& sigma() const { return *sigma_; }
  bool exact() const { return state_.has_value(); }
  std::size_t set_count() const { return state_ ? state_->set_count() : 0; }

  Arc forward(int u, int v) const { return sigma_->rank(u) < sigma_->rank(v) ? Arc{u, v} : Arc{v, u}; }

 private:
  void build(int p, int q) {
    std::vector<std::vector<int>> sets;
    const int t = h_.t();
    std::vector<int> verts, slots, pick;
    auto choose_slots = [&](auto&& self, std::size_t from) -> void {
      if (static_cast<int>(pick.size()) == r_) {
        sets.push_back(pick);
        return;
      }
      for (std::size_t i = from; i < slots.size(); ++i) {
        pick.push_back(slots[i]);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    auto choose_verts = [&](auto&& self, int from) -> void {
      if (static_cast<int>(verts.size()) == t) {
        slots.clear();
        for (std::size_t i = 0; i < verts.size(); ++i)
          for (std::size_t j = i + 1; j < verts.size(); ++j)
            slots.push_back(static_cast<int>(seen_.pair_index(verts[i], verts[j])));
        choose_slots(choose_slots, 0);
        return;
      }
      for (int v = from; v < n_; ++v) {
        verts.push_back(v);
        self(self, v + 1);
        verts.pop_back();
      }
    };
    choose_verts(choose_verts, 0);
    state_.emplace(static_cast<int>(seen_.pair_count()), std::move(sets), static_cast<double>(p),
                   static_cast<double>(q));
  }

  void sync(const Board& board) {
    for (std::size_t i = 0; i < board.pair_count(); ++i) {
      if (board.state_at(i) == PairState::Undirected || seen_.state_at(i) != PairState::Undirected) continue;
      Arc p = board.pair_at(i);
      if (!board.has_arc(p.tail, p.head)) std::swap(p.tail, p.head);
      seen_.orient(p);
      if (!state_ || !state_->is_free(static_cast<int>(i))) continue;
      const bool fwd = sigma_->rank(p.tail) < sigma_->rank(p.head);
      if (fwd)
        state_->claim_blocker(static_cast<int>(i));
      else
        state_->claim_attacker(static_cast<int>(i));
    }
  }

  /// Undirected pairs scored by backward arcs at their endpoints.
  void heuristic(MoveBuilder& mb) {
    const Board& b = mb.board();
    std::vector<int> back(static_cast<std::size_t>(n_), 0);
    for (const Arc& a : b.arcs())
      if (sigma_->rank(a.tail) > sigma_->rank(a.head)) {
        ++back[static_cast<std::size_t>(a.tail)];
        ++back[static_cast<std::size_t>(a.head)];
      }
    std::vector<std::pair<int, std::size_t>> scored;
    for (std::size_t i = b.first_undirected(0); i < b.pair_count(); i = b.first_undirected(i + 1)) {
      Arc p = b.pair_at(i);
      scored.push_back({-(back[static_cast<std::size_t>(p.tail)] + back[static_cast<std::size_t>(p.head)]), i});
    }
    std::sort(scored.begin(), scored.end());
    for (const auto& [score, i] : scored) {
      if (mb.full()) break;
      Arc p = b.pair_at(i);
      mb.add(forward(p.tail, p.head));
    }
  }

  PatternGraph h_;
  std::optional<OrderingSigma> sigma_;
  int r_ = 0;
  int n_ = 0;
  Board seen_{1};
  std::optional<HypergraphState> state_;
};

/// True when H embeds in b with undirected pairs free to take any direction.
inline bool embeddable_with_wildcards(const Board& b, const PatternGraph& h, const std::vector<int>& within) {
  const int t = h.t();
  std::vector<int> phi(static_cast<std::size_t>(t), -1);
  std::vector<bool> used(within.size(), false);
  auto fits = [&](int hv, int gv) {
    for (int hu = 0; hu < hv; ++hu) {
      int gu = phi[static_cast<std::size_t>(hu)];
      if (h.has_arc(hu, hv) && b.has_arc(gv, gu)) return false;
      if (h.has_arc(hv, hu) && b.has_arc(gu, gv)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int hv) -> bool {
    if (hv == t) return true;
    for (std::size_t i = 0; i < within.size(); ++i) {
      if (used[i] || !fits(hv, within[i])) continue;
      used[i] = true;
      phi[static_cast<std::size_t>(hv)] = within[i];
      if (self(self, hv + 1)) return true;
      used[i] = false;
    }
    return false;
  };
  return search(search, 0);
}

/// Maker trying to embed H: each arc maximizes the number of t-sets in
/// which H stays embeddable, preferring arcs backward under the identity
/// order, then the lowest pair. Random play above 10 vertices.
class MakerGreedyEmbed : public StrategyBase<MakerGreedyEmbed, Role::Maker> {
 public:
  explicit MakerGreedyEmbed(PatternGraph h) : h_(std::move(h)) {}

  std::string name() const override { return "maker-greedy-embed"; }

  Move next_move(const TurnContext& ctx) override {
    MoveBuilder mb(ctx.board, ctx.bias());
    const int n = ctx.board.n();
    if (n > 10 || h_.t() > n) {
      auto open = ctx.board.undirected_pairs();
      std::shuffle(open.begin(), open.end(), rng_);
      for (Arc p : open) {
        if (rng_() & 1U) std::swap(p.tail, p.head);
        mb.add(p);
      }
      return mb.take();
    }
    while (!mb.full()) {
      const Board& b = mb.board();
      std::optional<Arc> best;
      long long best_score = -1;
      for (int backward = 1; backward >= 0; --backward)
        for (std::size_t i = b.first_undirected(0); i < b.pair_count(); i = b.first_undirected(i + 1)) {
          Arc p = b.pair_at(i);
          Arc a = backward ? Arc{p.head, p.tail} : p;
          long long s = score(b.oriented(a.tail, a.head));
          if (s > best_score) {
            best_score = s;
            best = a;
          }
        }
      if (!best) break;
      mb.add(*best);
    }
    return mb.take();
  }

 private:
  long long score(const Board& b) const {
    const int n = b.n(), t = h_.t();
    long long count = 0;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int from) -> void {
      if (static_cast<int>(subset.size()) == t) {
        count += embeddable_with_wildcards(b, h_, subset);
        return;
      }
      for (int v = from; v < n; ++v) {
        subset.push_back(v);
        self(self, v + 1);
        subset.pop_back();
      }
    };
    rec(rec, 0);
    return count;
  }

  PatternGraph h_;
};

}  // namespace orient
