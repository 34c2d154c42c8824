#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "orient/error.hpp"
#include "orient/vertex_set.hpp"

namespace orient {

/// A directed arc tail -> head.
struct Arc {
  int tail = 0;
  int head = 0;
  bool operator==(const Arc&) const = default;
};

/// State of an unordered pair {u, v}, u < v, relative to its canonical order.
enum class PairState : std::uint8_t { Undirected = 0, Forward = 1, Backward = 2 };

/// Partial orientation of K_n. Pair states are packed two bits per pair in
/// the triangular order (0,1),(0,2),...,(0,n-1),(1,2),...; out/in adjacency
/// bit rows are kept alongside for set queries. Orientation is write-once.
class Board {
 public:
  Board() = default;
  explicit Board(int n) : n_(n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "board needs n >= 1");
    pairs_ = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    undirected_ = pairs_;
    cells_.assign((pairs_ + 31) / 32, 0);
    row_words_ = VertexSet::word_count(n);
    adj_.assign(2 * static_cast<std::size_t>(n) * row_words_, 0);
  }

  int n() const { return n_; }
  std::size_t pair_count() const { return pairs_; }
  std::size_t undirected_count() const { return undirected_; }
  std::size_t oriented_count() const { return pairs_ - undirected_; }
  bool is_tournament() const { return undirected_ == 0; }

  /// Index of the unordered pair {u, v} in canonical order.
  std::size_t pair_index(int u, int v) const {
    check_pair(u, v);
    if (u > v) std::swap(u, v);
    auto uu = static_cast<std::size_t>(u);
    return uu * (2 * static_cast<std::size_t>(n_) - uu - 1) / 2 + static_cast<std::size_t>(v - u - 1);
  }

  /// Inverse of pair_index: returns (u, v) with u < v.
  Arc pair_at(std::size_t index) const {
    int u = 0;
    std::size_t row = static_cast<std::size_t>(n_ - 1);
    while (index >= row) {
      index -= row;
      ++u;
      --row;
    }
    return {u, u + 1 + static_cast<int>(index)};
  }

  PairState state_at(std::size_t index) const {
    return static_cast<PairState>((cells_[index >> 5] >> ((index & 31) * 2)) & 3U);
  }
  PairState pair_state(int u, int v) const {
    PairState s = state_at(pair_index(u, v));
    if (u < v || s == PairState::Undirected) return s;
    return s == PairState::Forward ? PairState::Backward : PairState::Forward;
  }

  bool has_arc(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return (adj_[out_offset(u) + (static_cast<std::size_t>(v) >> 6)] >> (v & 63)) & 1U;
  }
  bool is_undirected(int u, int v) const { return state_at(pair_index(u, v)) == PairState::Undirected; }

  /// Records u -> v. Throws SelfLoop, OutOfRange or AlreadyOriented.
  void orient(int u, int v) {
    if (u == v) {
      if (u < 0 || u >= n_) throw Error(Errc::OutOfRange, "vertex " + std::to_string(u));
      throw Error(Errc::SelfLoop, "pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    std::size_t idx = pair_index(u, v);
    if (state_at(idx) != PairState::Undirected)
      throw Error(Errc::AlreadyOriented, "pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
    auto bits = static_cast<std::uint64_t>(u < v ? PairState::Forward : PairState::Backward);
    cells_[idx >> 5] |= bits << ((idx & 31) * 2);
    --undirected_;
    adj_[out_offset(u) + (static_cast<std::size_t>(v) >> 6)] |= std::uint64_t{1} << (v & 63);
    adj_[in_offset(v) + (static_cast<std::size_t>(u) >> 6)] |= std::uint64_t{1} << (u & 63);
  }
  void orient(Arc a) { orient(a.tail, a.head); }

  /// Functional form: a copy with u -> v recorded.
  Board oriented(int u, int v) const {
    Board b = *this;
    b.orient(u, v);
    return b;
  }

  std::span<const std::uint64_t> out_row(int v) const {
    return {adj_.data() + out_offset(v), row_words_};
  }
  std::span<const std::uint64_t> in_row(int v) const {
    return {adj_.data() + in_offset(v), row_words_};
  }

  VertexSet out_neighbors(int v) const { return row_set(out_row(v)); }
  VertexSet in_neighbors(int v) const { return row_set(in_row(v)); }

  int out_degree(int v) const { return row_count(out_row(v)); }
  int in_degree(int v) const { return row_count(in_row(v)); }
  int undirected_degree(int v) const { return n_ - 1 - out_degree(v) - in_degree(v); }

  /// N+(A): vertices outside A receiving an arc from A.
  VertexSet out_set(const VertexSet& a) const {
    VertexSet r(n_);
    a.for_each([&](int v) { r |= out_neighbors(v); });
    return r - a;
  }
  /// N-(A): vertices outside A sending an arc into A.
  VertexSet in_set(const VertexSet& a) const {
    VertexSet r(n_);
    a.for_each([&](int v) { r |= in_neighbors(v); });
    return r - a;
  }

  /// All undirected pairs as (u, v), u < v, in canonical order.
  std::vector<Arc> undirected_pairs() const {
    std::vector<Arc> out;
    out.reserve(undirected_);
    for (std::size_t i = first_undirected(0); i < pairs_; i = first_undirected(i + 1)) out.push_back(pair_at(i));
    return out;
  }

  /// Smallest undirected pair index >= from, or pair_count() if none.
  std::size_t first_undirected(std::size_t from) const {
    constexpr std::uint64_t kLow = 0x5555555555555555ULL;
    for (std::size_t w = from >> 5; w < cells_.size(); ++w) {
      std::uint64_t cell = cells_[w];
      std::uint64_t free = ~(cell | (cell >> 1)) & kLow;
      if (w == (from >> 5)) free &= ~std::uint64_t{0} << ((from & 31) * 2);
      if (w + 1 == cells_.size() && pairs_ % 32 != 0) free &= (std::uint64_t{1} << ((pairs_ % 32) * 2)) - 1;
      if (free) return w * 32 + static_cast<std::size_t>(std::countr_zero(free)) / 2;
    }
    return pairs_;
  }

  /// Every oriented pair as an arc, in canonical pair order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(oriented_count());
    for (std::size_t i = 0; i < pairs_; ++i) {
      PairState s = state_at(i);
      if (s == PairState::Undirected) continue;
      Arc p = pair_at(i);
      out.push_back(s == PairState::Forward ? p : Arc{p.head, p.tail});
    }
    return out;
  }

  /// Base-3 digit string of pair states in pair-index order.
  std::string encode_base3() const {
    std::string s(pairs_, '0');
    for (std::size_t i = 0; i < pairs_; ++i) s[i] = static_cast<char>('0' + static_cast<int>(state_at(i)));
    return s;
  }

  /// Base-3 value of the pair states (digit 0 most significant); n <= 9.
  std::uint64_t key() const {
    if (pairs_ > 40) throw Error(Errc::TooLarge, "base-3 key needs n <= 9");
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < pairs_; ++i) k = k * 3 + static_cast<std::uint64_t>(state_at(i));
    return k;
  }

  std::uint64_t digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(n_);
    for (auto w : cells_) {
      h ^= w;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return h;
  }

  /// Copy with every vertex v renamed perm[v].
  Board relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw Error(Errc::SizeMismatch, "relabel permutation size");
    Board b(n_);
    for (const Arc& a : arcs()) b.orient(perm[static_cast<std::size_t>(a.tail)], perm[static_cast<std::size_t>(a.head)]);
    return b;
  }

  bool operator==(const Board& o) const { return n_ == o.n_ && cells_ == o.cells_; }

  /// Text form: `n=<int>` then one `u>v` line per arc.
  std::string to_text() const {
    std::ostringstream os;
    os << "n=" << n_ << '\n';
    for (const Arc& a : arcs()) os << a.tail << '>' << a.head << '\n';
    return os.str();
  }

  static Board from_text(std::istream& in) {
    std::string line;
    std::optional<Board> board;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
                 line.end());
      if (line.empty()) continue;
      if (!board) {
        if (line.rfind("n=", 0) != 0) throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected n=<int>");
        board.emplace(parse_int(line.substr(2), lineno));
        continue;
      }
      auto gt = line.find('>');
      if (gt == std::string::npos) throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected u>v");
      Arc a{parse_int(line.substr(0, gt), lineno), parse_int(line.substr(gt + 1), lineno)};
      board->orient(a);
    }
    if (!board) throw Error(Errc::ParseError, "missing n=<int> header");
    return *board;
  }
  static Board from_text(const std::string& text) {
    std::istringstream is(text);
    return from_text(is);
  }

 private:
  static int parse_int(const std::string& s, int lineno) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": bad integer '" + s + "'");
    }
  }

  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw Error(Errc::OutOfRange, "pair (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n_));
    if (u == v) throw Error(Errc::SelfLoop, "pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  std::size_t out_offset(int v) const { return static_cast<std::size_t>(v) * row_words_; }
  std::size_t in_offset(int v) const { return (static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)) * row_words_; }
  VertexSet row_set(std::span<const std::uint64_t> row) const {
    VertexSet s(n_);
    std::copy(row.begin(), row.end(), s.words().begin());
    return s;
  }
  static int row_count(std::span<const std::uint64_t> row) {
    int c = 0;
    for (auto w : row) c += std::popcount(w);
    return c;
  }

  int n_ = 0;
  std::size_t pairs_ = 0;
  std::size_t undirected_ = 0;
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> cells_;
  std::vector<std::uint64_t> adj_;
};

/// Functional orient, for callers that keep boards as values.
inline Board orient(const Board& b, int u, int v) { return b.oriented(u, v); }

/// Tournament with every arc i -> j for i < j.
inline Board transitive_tournament(int n) {
  Board b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.orient(i, j);
  return b;
}

/// Tournament whose pair states are the bits of `mask` (bit i set => pair i backward).
inline Board tournament_from_mask(int n, std::uint64_t mask) {
  Board b(n);
  for (std::size_t i = 0; i < b.pair_count(); ++i) {
    Arc p = b.pair_at(i);
    if ((mask >> i) & 1U)
      b.orient(p.head, p.tail);
    else
      b.orient(p.tail, p.head);
  }
  return b;
}

}  // namespace orient
