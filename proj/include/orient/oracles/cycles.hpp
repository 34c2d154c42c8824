#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orient/board.hpp"

namespace orient {

/// A directed cycle as its vertex sequence; the closing arc back to the
/// first vertex is implicit.
using Cycle = std::vector<int>;
using Path = std::vector<int>;

/// True when `cycle` has >= 3 distinct vertices and every consecutive arc
/// (including the closing one) is present on the board.
inline bool is_valid_cycle(const Board& b, const Cycle& cycle) {
  if (cycle.size() < 3) return false;
  VertexSet seen(b.n());
  for (int v : cycle) {
    if (v < 0 || v >= b.n() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!b.has_arc(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

inline bool is_valid_path(const Board& b, const Path& path) {
  VertexSet seen(b.n());
  for (int v : path) {
    if (v < 0 || v >= b.n() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!b.has_arc(path[i], path[i + 1])) return false;
  return true;
}

namespace detail {

// Shortens a cycle along oriented chords (c0, c2) until it is a triangle or
// the chord is undirected. On a tournament this always ends at length 3.
inline Cycle shrink_to_triangle(const Board& b, Cycle c) {
  while (c.size() > 3) {
    if (b.has_arc(c[2], c[0])) return {c[0], c[1], c[2]};
    if (b.has_arc(c[0], c[2])) {
      c.erase(c.begin() + 1);
      continue;
    }
    break;
  }
  return c;
}

}  // namespace detail

/// Some directed cycle of the oriented graph, or nullopt when acyclic.
/// On tournaments the returned cycle is a triangle.
inline std::optional<Cycle> find_cycle(const Board& b) {
  const int n = b.n();
  std::vector<std::uint8_t> color(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) succ[static_cast<std::size_t>(v)] = b.out_neighbors(v).members();

  for (int root = 0; root < n; ++root) {
    if (color[static_cast<std::size_t>(root)] != 0) continue;
    stack.push_back(root);
    color[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      auto& cur = cursor[static_cast<std::size_t>(v)];
      const auto& out = succ[static_cast<std::size_t>(v)];
      if (cur == out.size()) {
        color[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
        continue;
      }
      int w = out[cur++];
      if (color[static_cast<std::size_t>(w)] == 0) {
        color[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      } else if (color[static_cast<std::size_t>(w)] == 1) {
        Cycle c;
        for (int x = v; x != w; x = parent[static_cast<std::size_t>(x)]) c.push_back(x);
        c.push_back(w);
        std::reverse(c.begin(), c.end());
        return detail::shrink_to_triangle(b, std::move(c));
      }
    }
  }
  return std::nullopt;
}

namespace detail {

inline VertexSet reach(const Board& b, int from, bool forward, const VertexSet* within = nullptr) {
  VertexSet seen(b.n());
  seen.insert(from);
  std::vector<int> frontier{from};
  while (!frontier.empty()) {
    int v = frontier.back();
    frontier.pop_back();
    VertexSet next = forward ? b.out_neighbors(v) : b.in_neighbors(v);
    next -= seen;
    if (within) next &= *within;
    next.for_each([&](int w) {
      seen.insert(w);
      frontier.push_back(w);
    });
  }
  return seen;
}

}  // namespace detail

inline bool is_strongly_connected(const Board& b) {
  const int n = b.n();
  if (n == 1) return true;
  return detail::reach(b, 0, true).size() == n && detail::reach(b, 0, false).size() == n;
}

/// Hamilton cycle of a tournament built by repeated cycle extension from a
/// triangle: splice an outside vertex between consecutive u_k -> v -> u_{k+1},
/// or route through outside vertices when all arcs to the cycle agree.
/// nullopt when the tournament is not strongly connected. For n = 1 the
/// trivial cycle {0} is returned.
inline std::optional<Cycle> hamilton_cycle(const Board& t) {
  if (!t.is_tournament()) throw Error(Errc::NotATournament, "hamilton_cycle needs a tournament");
  const int n = t.n();
  if (!is_strongly_connected(t)) return std::nullopt;
  if (n == 1) return Cycle{0};

  Cycle c = *find_cycle(t);
  VertexSet on(n);
  for (int v : c) on.insert(v);

  while (static_cast<int>(c.size()) < n) {
    const std::size_t r = c.size();
    bool spliced = false;
    VertexSet outside = on.complement();
    outside.for_each([&](int v) {
      if (spliced) return;
      for (std::size_t k = 0; k < r; ++k) {
        if (t.has_arc(c[k], v) && t.has_arc(v, c[(k + 1) % r])) {
          c.insert(c.begin() + static_cast<std::ptrdiff_t>(k + 1), v);
          on.insert(v);
          spliced = true;
          return;
        }
      }
    });
    if (spliced) continue;

    // Every outside vertex sees the cycle in one direction only.
    int v = outside.first();
    bool cycle_into_v = t.has_arc(c[0], v);
    VertexSet region = outside;
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{v};
    VertexSet seen(n);
    seen.insert(v);
    int exit_vertex = -1;
    std::size_t attach = 0;
    for (std::size_t qi = 0; qi < queue.size() && exit_vertex < 0; ++qi) {
      int x = queue[qi];
      for (std::size_t i = 0; i < r; ++i) {
        bool hit = cycle_into_v ? t.has_arc(x, c[i]) : t.has_arc(c[i], x);
        if (hit) {
          exit_vertex = x;
          attach = i;
          break;
        }
      }
      if (exit_vertex >= 0) break;
      VertexSet next = (cycle_into_v ? t.out_neighbors(x) : t.in_neighbors(x)) & region;
      next -= seen;
      next.for_each([&](int y) {
        seen.insert(y);
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      });
    }
    if (exit_vertex < 0) throw Error(Errc::StrategyStuck, "cycle extension failed on a strongly connected tournament");

    // Route from v to exit_vertex (forward case) or exit_vertex to v (backward case).
    std::vector<int> route;
    for (int x = exit_vertex; x != -1; x = parent[static_cast<std::size_t>(x)]) route.push_back(x);
    Cycle next;
    if (cycle_into_v) {
      // u_1..u_{i-1}, v, x_1..x_t, u_i..u_r
      std::reverse(route.begin(), route.end());
      for (std::size_t i = 0; i < attach; ++i) next.push_back(c[i]);
      if (attach == 0) {
        // u_r -> v closes the cycle instead.
        next.insert(next.end(), route.begin(), route.end());
        next.insert(next.end(), c.begin(), c.end());
      } else {
        next.insert(next.end(), route.begin(), route.end());
        next.insert(next.end(), c.begin() + static_cast<std::ptrdiff_t>(attach), c.end());
      }
    } else {
      // u_1..u_i, x_1..x_t, v, u_{i+1}..u_r
      for (std::size_t i = 0; i <= attach; ++i) next.push_back(c[i]);
      next.insert(next.end(), route.begin(), route.end());
      next.insert(next.end(), c.begin() + static_cast<std::ptrdiff_t>(attach + 1), c.end());
    }
    for (int x : route) on.insert(x);
    c = std::move(next);
  }
  return c;
}

/// Given a directed cycle of length k + (k-2) r in a tournament, returns a
/// directed cycle of length exactly k by repeatedly testing the chord
/// between the k-th and first vertex.
inline Cycle extract_ck(const Board& t, const Cycle& cycle, int k) {
  if (k < 3) throw Error(Errc::BadLength, "k must be >= 3");
  const int len = static_cast<int>(cycle.size());
  if (len < k || (len - k) % (k - 2) != 0)
    throw Error(Errc::BadLength, "cycle length " + std::to_string(len) + " is not k+(k-2)r for k=" + std::to_string(k));
  if (!is_valid_cycle(t, cycle)) throw Error(Errc::InvalidCycle, "input is not a directed cycle of the board");

  Cycle c = cycle;
  while (static_cast<int>(c.size()) > k) {
    int vk = c[static_cast<std::size_t>(k - 1)];
    int v1 = c[0];
    if (t.has_arc(vk, v1)) return Cycle(c.begin(), c.begin() + k);
    if (!t.has_arc(v1, vk)) throw Error(Errc::NotATournament, "chord {v_1, v_k} is undirected");
    // v_k, ..., v_L, v_1
    Cycle next(c.begin() + (k - 1), c.end());
    next.push_back(v1);
    c = std::move(next);
  }
  return c;
}

/// Some directed cycle with exactly k vertices, or nullopt.
inline std::optional<Cycle> find_cycle_of_length(const Board& b, int k) {
  const int n = b.n();
  if (k < 3 || k > n) return std::nullopt;
  Cycle path;
  std::optional<Cycle> found;
  VertexSet used(n);

  auto dfs = [&](auto&& self, int start, int v) -> bool {
    if (static_cast<int>(path.size()) == k) {
      if (b.has_arc(v, start)) {
        found = path;
        return true;
      }
      return false;
    }
    VertexSet next = b.out_neighbors(v) - used;
    bool hit = false;
    next.for_each([&](int w) {
      if (hit || w <= start) return;
      used.insert(w);
      path.push_back(w);
      hit = self(self, start, w);
      path.pop_back();
      used.erase(w);
    });
    return hit;
  };

  for (int s = 0; s < n; ++s) {
    used.insert(s);
    path.assign(1, s);
    if (dfs(dfs, s, s)) return found;
    used.erase(s);
  }
  return std::nullopt;
}

/// Number of cyclic triples {a, b, c}.
inline long long count_cyclic_triangles(const Board& b) {
  const int n = b.n();
  long long count = 0;
  for (int a = 0; a < n; ++a)
    for (int x = a + 1; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (b.has_arc(a, x) && b.has_arc(x, y) && b.has_arc(y, a)) ++count;
        if (b.has_arc(a, y) && b.has_arc(y, x) && b.has_arc(x, a)) ++count;
      }
  return count;
}

/// A maximum-length directed path, by dynamic programming over vertex
/// subsets (n <= 20).
inline Path longest_path_exact(const Board& b) {
  const int n = b.n();
  if (n > 20) throw Error(Errc::BudgetExceeded, "longest_path_exact supports n <= 20");
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(b.out_row(v)[0]);

  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
  std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1, 0);
  for (int v = 0; v < n; ++v) ends[1U << v] = 1U << v;

  std::uint32_t best = 1;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    std::uint32_t e = ends[mask];
    if (!e) continue;
    if (std::popcount(mask) > std::popcount(best)) best = mask;
    std::uint32_t ext = 0;
    for (std::uint32_t it = e; it; it &= it - 1) ext |= out[static_cast<std::size_t>(std::countr_zero(it))];
    ext &= ~mask;
    for (; ext; ext &= ext - 1) {
      std::uint32_t w = ext & (~ext + 1);
      ends[mask | w] |= w;
    }
  }

  Path path;
  std::uint32_t mask = best;
  int end = std::countr_zero(ends[mask]);
  path.push_back(end);
  while (std::popcount(mask) > 1) {
    std::uint32_t prev = mask & ~(1U << end);
    std::uint32_t cand = ends[prev];
    int p = -1;
    for (std::uint32_t it = cand; it; it &= it - 1) {
      int v = std::countr_zero(it);
      if (out[static_cast<std::size_t>(v)] & (1U << end)) {
        p = v;
        break;
      }
    }
    path.push_back(p);
    end = p;
    mask = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace orient
