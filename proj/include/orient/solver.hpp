#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "orient/engine.hpp"

namespace orient {

struct SolveOptions {
  /// Transposition table on (board, mover, budget left in the turn).
  bool memo = true;
  /// Key positions by isomorphism class (n <= 4 only).
  bool canonical = false;
  /// Allow q up to C(n, 2), for threshold scans.
  bool relax_bias = false;
  /// Root-level workers, each with a private table.
  int threads = 1;
  /// Node budget; 0 means unlimited.
  std::uint64_t max_nodes = 0;
  bool principal_variation = false;
};

struct SolveResult {
  Role winner = Role::Breaker;
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  /// One optimal line, as turns.
  std::vector<TranscriptEntry> pv;
};

namespace detail {

inline void check_solve_budget(int n, int p, int q, const Property& prop, bool relax_bias) {
  if (n < 2 || p < 1 || q < 1) throw Error(Errc::InvalidArgument, "need n >= 2, p, q >= 1");
  const int max_n = prop.kind == Property::Kind::Hamiltonicity ? 4 : 5;
  if (n > max_n)
    throw Error(Errc::BudgetExceeded, "solver supports n <= " + std::to_string(max_n) + " for " + prop.name());
  const int pairs = n * (n - 1) / 2;
  if (p > 3 || q > (relax_bias ? pairs : 3))
    throw Error(Errc::BudgetExceeded, "solver supports p <= 3 and q <= " + std::string(relax_bias ? "C(n,2)" : "3"));
}

/// Smallest key over all relabelings.
inline std::uint64_t canonical_key(const Board& b) {
  std::vector<int> perm(static_cast<std::size_t>(b.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = b.key();
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, b.relabeled(perm).key());
  return best;
}

/// Minimax over single orientations: the mover has `left` arcs of budget
/// and may end the turn once it has played at least one.
class Minimax {
 public:
  Minimax(int p, int q, const Property& prop, const SolveOptions& opts) : p_(p), q_(q), prop_(prop), opts_(opts) {}

  bool maker_wins(const Board& b, Role mover, int left) {
    if (opts_.max_nodes && nodes_ >= opts_.max_nodes) throw Error(Errc::BudgetExceeded, "solver node budget spent");
    ++nodes_;
    if (b.is_tournament()) return evaluate_property(b, prop_);
    if (auto v = forced_verdict(b, prop_)) return *v == Role::Maker;

    std::uint64_t key = 0;
    if (opts_.memo) {
      key = memo_key(b, mover, left);
      if (auto it = memo_.find(key); it != memo_.end()) {
        ++hits_;
        return it->second;
      }
    }
    const bool want = mover == Role::Maker;
    bool result = !want;
    for (const auto& [child, cm, cl] : children(b, mover, left)) {
      if (maker_wins(child, cm, cl) == want) {
        result = want;
        break;
      }
    }
    if (opts_.memo) memo_.emplace(key, result);
    return result;
  }

  struct Child {
    Board board;
    Role mover;
    int left;
  };

  /// Successors in a fixed order: every single arc (pair order, low -> high
  /// first), then ending the turn when allowed.
  std::vector<Child> children(const Board& b, Role mover, int left) const {
    std::vector<Child> out;
    const int bias = mover == Role::Maker ? p_ : q_;
    for (std::size_t i = b.first_undirected(0); i < b.pair_count(); i = b.first_undirected(i + 1)) {
      Arc a = b.pair_at(i);
      for (Arc arc : {a, Arc{a.head, a.tail}}) {
        Board c = b.oriented(arc.tail, arc.head);
        if (left > 1 && !c.is_tournament())
          out.push_back({std::move(c), mover, left - 1});
        else
          out.push_back({std::move(c), opponent(mover), mover == Role::Maker ? q_ : p_});
      }
    }
    if (left < bias) out.push_back({b, opponent(mover), mover == Role::Maker ? q_ : p_});
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t hits() const { return hits_; }

 private:
  std::uint64_t memo_key(const Board& b, Role mover, int left) const {
    std::uint64_t k = opts_.canonical ? canonical_key(b) : b.key();
    // 3^10 * 2 * 11 fits easily; the layout is exact for n <= 5.
    return (k * 2 + (mover == Role::Maker ? 0 : 1)) * 64 + static_cast<std::uint64_t>(left);
  }

  int p_, q_;
  Property prop_;
  SolveOptions opts_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::uint64_t nodes_ = 0, hits_ = 0;
};

}  // namespace detail

/// Exact winner of the (p:q) orientation game from `start`, mover to play
/// with a full turn ahead.
inline SolveResult solve_from(const Board& start, Role mover, int p, int q, const Property& prop, SolveOptions opts = {}) {
  detail::check_solve_budget(start.n(), p, q, prop, opts.relax_bias);
  if (opts.canonical && start.n() > 4) throw Error(Errc::BudgetExceeded, "isomorphism keying supports n <= 4");
  const int full = mover == Role::Maker ? p : q;
  SolveResult res;

  bool maker = false;
  const int threads = std::max(1, opts.threads);
  if (threads == 1 || start.is_tournament()) {
    detail::Minimax mm(p, q, prop, opts);
    maker = mm.maker_wins(start, mover, full);
    res.nodes = mm.nodes();
    res.memo_hits = mm.hits();
  } else {
    // Root children split round-robin; every child is solved, so the node
    // count does not depend on scheduling.
    detail::Minimax root(p, q, prop, opts);
    auto kids = root.children(start, mover, full);
    std::vector<int> value(kids.size(), 0);
    std::vector<std::uint64_t> nodes(static_cast<std::size_t>(threads), 0), hits(nodes);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        detail::Minimax mm(p, q, prop, opts);
        for (std::size_t i = static_cast<std::size_t>(w); i < kids.size(); i += static_cast<std::size_t>(threads))
          value[i] = mm.maker_wins(kids[i].board, kids[i].mover, kids[i].left) ? 1 : 0;
        nodes[static_cast<std::size_t>(w)] = mm.nodes();
        hits[static_cast<std::size_t>(w)] = mm.hits();
      });
    for (auto& t : pool) t.join();
    const int want = mover == Role::Maker ? 1 : 0;
    maker = mover == Role::Breaker;
    for (int v : value)
      if (v == want) maker = want == 1;
    res.nodes = 1 + std::accumulate(nodes.begin(), nodes.end(), std::uint64_t{0});
    res.memo_hits = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  }
  res.winner = maker ? Role::Maker : Role::Breaker;

  if (opts.principal_variation) {
    SolveOptions pv_opts = opts;
    pv_opts.max_nodes = 0;
    detail::Minimax mm(p, q, prop, pv_opts);
    Board b = start;
    Role who = mover;
    int left = full;
    const bool target = maker;
    while (!b.is_tournament() && !forced_verdict(b, prop)) {
      // The mover picks the first child that keeps the value; the loser's
      // children all do.
      std::optional<detail::Minimax::Child> next;
      for (auto& c : mm.children(b, who, left))
        if (mm.maker_wins(c.board, c.mover, c.left) == target) {
          next = std::move(c);
          break;
        }
      if (!next) throw Error(Errc::StrategyStuck, "principal variation lost the value");
      if (next->board.oriented_count() != b.oriented_count()) {
        Arc played{};
        for (std::size_t i = 0; i < b.pair_count(); ++i)
          if (b.state_at(i) != next->board.state_at(i)) {
            played = b.pair_at(i);
            if (!next->board.has_arc(played.tail, played.head)) std::swap(played.tail, played.head);
          }
        if (res.pv.empty() || res.pv.back().role != who || left == (who == Role::Maker ? p : q)) res.pv.push_back({who, {}});
        res.pv.back().move.push_back(played);
      }
      b = next->board;
      who = next->mover;
      left = next->left;
    }
  }
  return res;
}

/// Exact winner of the (p:q) game on K_n, Maker first.
inline SolveResult solve_orientation_game(int n, int p, int q, const Property& prop, SolveOptions opts = {}) {
  return solve_from(Board(n), Role::Maker, p, q, prop, opts);
}

struct ThresholdResult {
  /// Smallest b at which Breaker wins the (1:b) game; unset if Maker wins
  /// for every b <= C(n, 2).
  std::optional<int> threshold;
  /// Winner for b = 1..C(n, 2).
  std::vector<Role> winners;
  /// Breaker wins at every b >= threshold and loses at every b below it.
  bool monotone = true;
};

inline ThresholdResult threshold_scan(int n, const Property& prop, SolveOptions opts = {}) {
  opts.relax_bias = true;
  opts.principal_variation = false;
  ThresholdResult res;
  const int pairs = n * (n - 1) / 2;
  for (int b = 1; b <= pairs; ++b) {
    Role w = solve_orientation_game(n, 1, b, prop, opts).winner;
    res.winners.push_back(w);
    if (w == Role::Breaker && !res.threshold) res.threshold = b;
  }
  if (res.threshold)
    for (int b = 1; b <= pairs; ++b)
      if ((b >= *res.threshold) != (res.winners[static_cast<std::size_t>(b - 1)] == Role::Breaker)) res.monotone = false;
  return res;
}

// ---------------------------------------------------------------------------
// Exhaustive strategy verification

struct VerifyResult {
  bool ok = true;
  /// A losing line for the fixed strategy when !ok.
  std::vector<TranscriptEntry> counterexample;
  std::string reason;
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
};

namespace detail {

/// The fixed side plays its strategy; the other side plays every move,
/// one representative per reachable board (arcs in pair order).
class StrategyVerifier {
 public:
  StrategyVerifier(const GameConfig& cfg, Role fixed, std::uint64_t max_nodes)
      : cfg_(cfg), fixed_(fixed), max_nodes_(max_nodes) {}

  bool holds(const Board& b, std::vector<TranscriptEntry>& line, const Strategy& s, Role mover, VerifyResult& out) {
    if (max_nodes_ && nodes_ >= max_nodes_) throw Error(Errc::BudgetExceeded, "verification node budget spent");
    ++nodes_;
    auto goal = [&](Role winner) { return winner == fixed_; };
    if (b.is_tournament()) {
      Role w = evaluate_property(b, cfg_.property) ? Role::Maker : Role::Breaker;
      if (!goal(w)) fail(line, out, "final tournament lost");
      return goal(w);
    }
    if (auto v = forced_verdict(b, cfg_.property)) {
      if (!goal(*v)) fail(line, out, "verdict forced against the strategy");
      return goal(*v);
    }

    // Exact key: board, strategy state, mover, and the opponent's last move
    // when the strategy is about to answer it (<= 3 arcs, 12 bits each).
    std::uint64_t last = 0;
    if (mover == fixed_ && !line.empty())
      for (const Arc& a : line.back().move) last = last << 12 | static_cast<std::uint64_t>(a.tail * 64 + a.head + 1);
    Key key{b.key(), s.fingerprint(), last, mover == Role::Maker};
    if (good_.count(key)) {
      ++hits_;
      return true;
    }

    bool ok = true;
    if (mover == fixed_) {
      auto mine = s.clone();
      TurnContext ctx{b, cfg_, line, static_cast<int>(line.size() / 2) + 1, mover};
      Move move;
      std::optional<std::string> bad;
      try {
        move = mine->next_move(ctx);
        bad = check_move(b, move, cfg_.bias(mover));
      } catch (const Error& e) {
        bad = std::string("strategy failed: ") + e.what();
      }
      if (bad) {
        fail(line, out, *bad);
        return false;
      }
      Board next = b;
      for (const Arc& a : move) next.orient(a);
      line.push_back({mover, move});
      ok = holds(next, line, *mine, opponent(mover), out);
      line.pop_back();
    } else {
      std::unordered_set<std::uint64_t> reached;
      Move move;
      auto expand = [&](auto&& self, const Board& cur, std::size_t from) -> bool {
        for (std::size_t i = cur.first_undirected(from); i < cur.pair_count(); i = cur.first_undirected(i + 1)) {
          Arc a = cur.pair_at(i);
          for (Arc arc : {a, Arc{a.head, a.tail}}) {
            Board next = cur.oriented(arc.tail, arc.head);
            move.push_back(arc);
            bool fine = true;
            if (reached.insert(next.key()).second) {
              line.push_back({mover, move});
              fine = holds(next, line, s, opponent(mover), out);
              line.pop_back();
            }
            if (fine && static_cast<int>(move.size()) < cfg_.bias(mover) && !next.is_tournament())
              fine = self(self, next, i + 1);
            move.pop_back();
            if (!fine) return false;
          }
        }
        return true;
      };
      ok = expand(expand, b, 0);
    }
    if (ok) good_.insert(key);
    return ok;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t hits() const { return hits_; }

 private:
  void fail(const std::vector<TranscriptEntry>& line, VerifyResult& out, const std::string& why) {
    if (!out.ok) return;
    out.ok = false;
    out.counterexample = line;
    out.reason = why;
  }

  struct Key {
    std::uint64_t board, state, last;
    bool maker;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return hash_combine(hash_combine(hash_combine(k.board, k.state), k.last), k.maker ? 1 : 2);
    }
  };

  GameConfig cfg_;
  Role fixed_;
  std::uint64_t max_nodes_;
  std::unordered_set<Key, KeyHash> good_;
  std::uint64_t nodes_ = 0, hits_ = 0;
};

}  // namespace detail

/// True iff `strategy` reaches its side's goal against every legal line of
/// the opponent. Opponent turns are all sets of 1..bias orientations, each
/// presented in pair order. Randomized strategies are checked for the seed
/// in `config`.
inline VerifyResult verify_strategy_vs_all(const Strategy& strategy, const GameConfig& config,
                                           std::uint64_t max_nodes = 0) {
  if (config.n < 2 || config.n > 6) throw Error(Errc::BudgetExceeded, "verification supports n <= 6");
  if (config.p < 1 || config.q < 1) throw Error(Errc::BadConfig, "biases must be >= 1");
  const Role fixed = strategy.role();
  if (config.bias(opponent(fixed)) > 3) throw Error(Errc::BudgetExceeded, "opponent bias must be <= 3");
  auto s = strategy.clone();
  s->begin(config, derive_seed(config.seed, fixed));
  detail::StrategyVerifier v(config, fixed, max_nodes);
  VerifyResult out;
  std::vector<TranscriptEntry> line;
  v.holds(Board(config.n), line, *s, Role::Maker, out);
  out.nodes = v.nodes();
  out.memo_hits = v.hits();
  return out;
}

}  // namespace orient
