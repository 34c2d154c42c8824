#pragma once

// Slow, obviously-correct reference implementations used as ground truth.
// Nothing here shares code with the library's oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "orient/board.hpp"
#include "orient/pattern.hpp"

namespace brute {

using orient::Board;

inline std::vector<std::vector<bool>> adjacency(const Board& b) {
  std::vector<std::vector<bool>> a(static_cast<std::size_t>(b.n()), std::vector<bool>(static_cast<std::size_t>(b.n()), false));
  for (const auto& arc : b.arcs()) a[static_cast<std::size_t>(arc.tail)][static_cast<std::size_t>(arc.head)] = true;
  return a;
}

/// Kahn's algorithm: true iff the oriented graph is acyclic.
inline bool acyclic(const Board& b) {
  const int n = b.n();
  auto adj = adjacency(b);
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (adj[u][v]) ++indeg[static_cast<std::size_t>(v)];
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  int seen = 0;
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    ++seen;
    for (int v = 0; v < n; ++v)
      if (adj[u][v] && --indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  }
  return seen == n;
}

/// Floyd-Warshall transitive closure.
inline bool strongly_connected(const Board& b) {
  const int n = b.n();
  auto r = adjacency(b);
  for (int v = 0; v < n; ++v) r[v][v] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!r[i][j]) return false;
  return true;
}

/// Hamilton cycle by trying every permutation that starts at vertex 0.
inline bool has_hamilton_cycle(const Board& b) {
  const int n = b.n();
  if (n == 1) return true;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = b.has_arc(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>((i + 1) % n)]);
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

/// Longest simple directed path, in vertices, by exhaustive DFS.
inline int longest_path_vertices(const Board& b) {
  const int n = b.n();
  auto adj = adjacency(b);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  int best = 0;
  auto dfs = [&](auto&& self, int v, int len) -> void {
    best = std::max(best, len);
    for (int w = 0; w < n; ++w) {
      if (!adj[v][w] || used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = true;
      self(self, w, len + 1);
      used[static_cast<std::size_t>(w)] = false;
    }
  };
  for (int v = 0; v < n; ++v) {
    used[static_cast<std::size_t>(v)] = true;
    dfs(dfs, v, 1);
    used[static_cast<std::size_t>(v)] = false;
  }
  return best;
}

/// Directed simple cycle of exactly k vertices, by enumerating k-sequences.
inline bool has_cycle_of_length(const Board& b, int k) {
  const int n = b.n();
  if (k > n || k < 2) return false;
  std::vector<int> seq;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(seq.size()) == k) return b.has_arc(seq.back(), seq.front());
    for (int w = seq.front() + 1; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || !b.has_arc(seq.back(), w)) continue;
      used[static_cast<std::size_t>(w)] = true;
      seq.push_back(w);
      if (self(self)) return true;
      seq.pop_back();
      used[static_cast<std::size_t>(w)] = false;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    seq = {s};
    used.assign(static_cast<std::size_t>(n), false);
    used[static_cast<std::size_t>(s)] = true;
    if (dfs(dfs)) return true;
  }
  return false;
}

/// Minimum back-arc count over all t! orderings.
inline int fas_by_permutations(const orient::PatternGraph& h) {
  const int t = h.t();
  std::vector<int> order(static_cast<std::size_t>(t));
  std::iota(order.begin(), order.end(), 0);
  auto arcs = h.arcs();
  int best = static_cast<int>(arcs.size());
  std::vector<int> pos(static_cast<std::size_t>(t));
  do {
    for (int i = 0; i < t; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    int back = 0;
    for (const auto& a : arcs)
      if (pos[static_cast<std::size_t>(a.tail)] > pos[static_cast<std::size_t>(a.head)]) ++back;
    best = std::min(best, back);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// Every injection V(H) -> V(G), checked arc by arc.
inline bool embeds(const Board& g, const orient::PatternGraph& h) {
  const int t = h.t(), n = g.n();
  if (t > n) return false;
  auto arcs = h.arcs();
  std::vector<int> phi(static_cast<std::size_t>(t), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == t) {
      for (const auto& a : arcs)
        if (!g.has_arc(phi[static_cast<std::size_t>(a.tail)], phi[static_cast<std::size_t>(a.head)])) return false;
      return true;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      phi[static_cast<std::size_t>(i)] = v;
      if (self(self, i + 1)) return true;
      used[static_cast<std::size_t>(v)] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Subset of a tournament is transitive iff it has no cyclic triangle.
inline bool transitive_subset(const Board& t, std::uint32_t mask) {
  const int n = t.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!((mask >> a) & 1U) || !((mask >> b) & 1U) || !((mask >> c) & 1U)) continue;
        if (t.has_arc(a, b) && t.has_arc(b, c) && t.has_arc(c, a)) return false;
      }
  return true;
}

/// k-colorability by enumerating all k^n labelings.
inline bool colorable(const Board& t, int k) {
  const int n = t.n();
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= k;
  for (long long code = 0; code < total; ++code) {
    std::vector<std::uint32_t> parts(static_cast<std::size_t>(k), 0);
    long long c = code;
    for (int v = 0; v < n; ++v) {
      parts[static_cast<std::size_t>(c % k)] |= 1U << v;
      c /= k;
    }
    bool ok = true;
    for (auto p : parts) ok = ok && transitive_subset(t, p);
    if (ok) return true;
  }
  return false;
}

inline Board random_tournament(int n, std::mt19937_64& rng) {
  Board b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng() & 1U)
        b.orient(i, j);
      else
        b.orient(j, i);
    }
  return b;
}

/// Each pair oriented with probability `density`, direction a fair coin.
inline Board random_oriented(int n, double density, std::mt19937_64& rng) {
  Board b(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (u(rng) >= density) continue;
      if (rng() & 1U)
        b.orient(i, j);
      else
        b.orient(j, i);
    }
  return b;
}

inline orient::PatternGraph random_pattern(int t, double density, std::mt19937_64& rng) {
  return orient::PatternGraph(random_oriented(t, density, rng));
}

/// Winner of the orientation game by plain minimax over whole turns: every
/// set of 1..bias undirected pairs with every direction assignment. No
/// memo, no early verdicts; `maker_goal` judges the final tournament.
inline bool maker_wins_game(const Board& b, bool maker_to_move, int p, int q,
                            const std::function<bool(const Board&)>& maker_goal) {
  if (b.is_tournament()) return maker_goal(b);
  std::vector<std::pair<int, int>> open;
  for (int i = 0; i < b.n(); ++i)
    for (int j = i + 1; j < b.n(); ++j)
      if (b.is_undirected(i, j)) open.push_back({i, j});
  const int bias = maker_to_move ? p : q;
  const std::size_t m = open.size();
  for (std::uint32_t subset = 1; subset < (1U << m); ++subset) {
    const int size = __builtin_popcount(subset);
    if (size > bias) continue;
    for (std::uint32_t dirs = 0; dirs < (1U << size); ++dirs) {
      Board next = b;
      int bit = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (!(subset >> i & 1U)) continue;
        auto [u, v] = open[i];
        if (dirs >> bit++ & 1U) std::swap(u, v);
        next.orient(u, v);
      }
      bool w = maker_wins_game(next, !maker_to_move, p, q, maker_goal);
      if (w == maker_to_move) return w;
    }
  }
  return !maker_to_move;
}

/// Box game by explicit per-box states: Box-Maker spends exactly
/// min(b, items left) claims per turn in every possible distribution,
/// Box-Breaker destroys any surviving box. Goal: `goal` complete boxes.
struct BoxPosition {
  std::vector<int> claimed;
  std::vector<bool> dead;
};

inline bool box_maker_wins(const BoxPosition& s, int k, int b, int goal, bool maker_to_move) {
  int complete = 0, surviving = 0, left = 0;
  for (std::size_t i = 0; i < s.claimed.size(); ++i) {
    if (s.dead[i]) continue;
    ++surviving;
    complete += s.claimed[i] == k;
    left += k - s.claimed[i];
  }
  if (complete >= goal) return true;
  if (surviving < goal) return false;
  if (maker_to_move) {
    if (left == 0) return box_maker_wins(s, k, b, goal, false);
    // Distribute min(b, left) claims box by box.
    const int budget = std::min(b, left);
    std::function<bool(BoxPosition&, std::size_t, int)> spread = [&](BoxPosition& cur, std::size_t i, int rest) {
      if (rest == 0) return box_maker_wins(cur, k, b, goal, false);
      if (i == cur.claimed.size()) return false;
      const int room = cur.dead[i] ? 0 : k - cur.claimed[i];
      for (int take = 0; take <= std::min(room, rest); ++take) {
        cur.claimed[i] += take;
        bool w = spread(cur, i + 1, rest - take);
        cur.claimed[i] -= take;
        if (w) return true;
      }
      return false;
    };
    BoxPosition cur = s;
    return spread(cur, 0, budget);
  }
  for (std::size_t i = 0; i < s.claimed.size(); ++i) {
    if (s.dead[i]) continue;
    BoxPosition next = s;
    next.dead[i] = true;
    if (!box_maker_wins(next, k, b, goal, true)) return false;
  }
  return true;
}

/// Attacker (one element per turn, moving first) against a deterministic
/// blocker callback; true when some attacker line fills a set.
/// `owner`: 0 free, 1 attacker, 2 blocker.
inline bool attacker_can_win(std::vector<int>& owner, const std::vector<std::vector<int>>& sets,
                             const std::function<std::vector<int>(const std::vector<int>&)>& blocker) {
  for (std::size_t e = 0; e < owner.size(); ++e) {
    if (owner[e] != 0) continue;
    owner[e] = 1;
    bool won = false;
    for (const auto& s : sets)
      won = won || std::all_of(s.begin(), s.end(), [&](int x) { return owner[static_cast<std::size_t>(x)] == 1; });
    if (!won && std::count(owner.begin(), owner.end(), 0) > 0) {
      auto picks = blocker(owner);
      for (int x : picks) owner[static_cast<std::size_t>(x)] = 2;
      won = attacker_can_win(owner, sets, blocker);
      for (int x : picks) owner[static_cast<std::size_t>(x)] = 0;
    }
    owner[e] = 0;
    if (won) return true;
  }
  return false;
}

}  // namespace brute
