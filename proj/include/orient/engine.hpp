#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "orient/board.hpp"
#include "orient/oracles.hpp"
#include "orient/pattern.hpp"

namespace orient {

inline constexpr const char* kCodeVersion = "orient-games 1.0.0";

enum class Role { Maker, Breaker };

inline const char* to_string(Role r) { return r == Role::Maker ? "maker" : "breaker"; }
inline Role opponent(Role r) { return r == Role::Maker ? Role::Breaker : Role::Maker; }

/// Maker's target property of the final tournament.
struct Property {
  enum class Kind { Cycle, Hamiltonicity, ContainsH, NonKColorable, CycleLengthK, MinInDegreePositive };

  Kind kind = Kind::Cycle;
  int k = 0;
  std::optional<PatternGraph> pattern;

  static Property cycle() { return {Kind::Cycle, 0, std::nullopt}; }
  static Property hamiltonicity() { return {Kind::Hamiltonicity, 0, std::nullopt}; }
  static Property min_in_degree_positive() { return {Kind::MinInDegreePositive, 0, std::nullopt}; }
  static Property contains(PatternGraph h) { return {Kind::ContainsH, 0, std::move(h)}; }
  static Property non_k_colorable(int k) { return {Kind::NonKColorable, k, std::nullopt}; }
  static Property cycle_length(int k) { return {Kind::CycleLengthK, k, std::nullopt}; }

  /// Short identifier; ContainsH omits its pattern.
  std::string name() const {
    switch (kind) {
      case Kind::Cycle: return "cycle";
      case Kind::Hamiltonicity: return "hamiltonicity";
      case Kind::ContainsH: return "contains-h";
      case Kind::NonKColorable: return "non-k-colorable:" + std::to_string(k);
      case Kind::CycleLengthK: return "cycle-length:" + std::to_string(k);
      case Kind::MinInDegreePositive: return "min-indegree-positive";
    }
    return "?";
  }

  /// Parses every name() form except contains-h, which needs a pattern.
  static Property parse(const std::string& s) {
    auto with_k = [&](const std::string& prefix) -> std::optional<int> {
      if (s.rfind(prefix, 0) != 0) return std::nullopt;
      try {
        return std::stoi(s.substr(prefix.size()));
      } catch (const std::exception&) {
        throw Error(Errc::BadConfig, "bad property parameter in '" + s + "'");
      }
    };
    if (s == "cycle") return cycle();
    if (s == "hamiltonicity") return hamiltonicity();
    if (s == "min-indegree-positive") return min_in_degree_positive();
    if (auto k = with_k("non-k-colorable:")) return non_k_colorable(*k);
    if (auto k = with_k("cycle-length:")) return cycle_length(*k);
    throw Error(Errc::BadConfig, "unknown property '" + s + "'");
  }
};

struct GameConfig {
  int n = 3;
  int p = 1;
  int q = 1;
  Property property = Property::cycle();
  std::uint64_t seed = 0;
  std::optional<int> max_rounds;
  /// Stop as soon as the verdict is forced (recorded as such).
  bool early_stop = true;

  int bias(Role r) const { return r == Role::Maker ? p : q; }
};

inline GameConfig game_config(int n, int p, int q, Property property, std::uint64_t seed = 0) {
  GameConfig c;
  c.n = n;
  c.p = p;
  c.q = q;
  c.property = std::move(property);
  c.seed = seed;
  return c;
}

using Move = std::vector<Arc>;

struct TranscriptEntry {
  Role role = Role::Maker;
  Move move;
};

/// Everything a strategy may look at when choosing its move.
struct TurnContext {
  const Board& board;
  const GameConfig& config;
  std::span<const TranscriptEntry> transcript;
  int round = 1;
  Role role = Role::Maker;

  int bias() const { return config.bias(role); }
  /// The opponent's most recent move (empty on Maker's first turn).
  std::span<const Arc> last_opponent_move() const {
    for (auto it = transcript.rbegin(); it != transcript.rend(); ++it)
      if (it->role != role) return it->move;
    return {};
  }
};

/// Counts engine calls so that its state is a function of (seed, calls).
class CountingRng {
 public:
  using result_type = std::uint64_t;
  CountingRng() = default;
  explicit CountingRng(std::uint64_t seed) : engine_(seed), seed_(seed) {}
  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() {
    ++calls_;
    return engine_();
  }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t calls() const { return calls_; }

 private:
  std::mt19937_64 engine_{0};
  std::uint64_t seed_ = 0;
  std::uint64_t calls_ = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) { return splitmix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6))); }

/// Independent per-role seed derived from the game seed.
inline std::uint64_t derive_seed(std::uint64_t seed, Role role) {
  return splitmix64(seed ^ (role == Role::Maker ? 0x6d616b6572ULL : 0x627265616b6572ULL));
}

/// A player. Implementations must be deterministic given the seed passed to
/// begin() and the transcript, and should never propose an illegal move.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual Role role() const = 0;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<Strategy> clone() const = 0;

  /// Called once before the first move.
  virtual void begin(const GameConfig& config, std::uint64_t seed) {
    (void)config;
    rng_ = CountingRng(seed);
  }

  virtual Move next_move(const TurnContext& ctx) = 0;

  /// Digest of private state that influences future moves; memoizing
  /// searches key on it together with the board.
  virtual std::uint64_t fingerprint() const { return hash_combine(rng_.seed(), rng_.calls()); }

 protected:
  CountingRng rng_;
};

// ---------------------------------------------------------------------------
// Property judging

/// Verdict on a complete tournament: true when Maker wins.
inline bool evaluate_property(const Board& t, const Property& prop) {
  if (!t.is_tournament()) throw Error(Errc::NotATournament, "property is judged on the final tournament");
  switch (prop.kind) {
    case Property::Kind::Cycle: return find_cycle(t).has_value();
    case Property::Kind::Hamiltonicity: return is_strongly_connected(t);
    case Property::Kind::ContainsH:
      if (!prop.pattern) throw Error(Errc::BadConfig, "contains-h without pattern");
      return contains_embedding(t, *prop.pattern).has_value();
    case Property::Kind::NonKColorable: return !k_colorable(t, prop.k).has_value();
    case Property::Kind::CycleLengthK: return find_cycle_of_length(t, prop.k).has_value();
    case Property::Kind::MinInDegreePositive:
      for (int v = 0; v < t.n(); ++v)
        if (t.in_degree(v) == 0) return false;
      return true;
  }
  return false;
}

/// Winner already determined on a partial board, for properties where that
/// can be read off cheaply; nullopt when still open.
inline std::optional<Role> forced_verdict(const Board& b, const Property& prop) {
  if (b.is_tournament()) return evaluate_property(b, prop) ? Role::Maker : Role::Breaker;
  const int n = b.n();
  auto some_vertex_decided = [&](bool need_in, bool need_out) {
    for (int v = 0; v < n; ++v) {
      if (b.undirected_degree(v) != 0) continue;
      if ((need_in && b.in_degree(v) == 0) || (need_out && b.out_degree(v) == 0)) return true;
    }
    return false;
  };
  switch (prop.kind) {
    case Property::Kind::Cycle:
      if (find_cycle(b)) return Role::Maker;
      break;
    case Property::Kind::CycleLengthK:
      if (find_cycle_of_length(b, prop.k)) return Role::Maker;
      break;
    case Property::Kind::ContainsH:
      if (prop.pattern && contains_embedding(b, *prop.pattern)) return Role::Maker;
      break;
    case Property::Kind::Hamiltonicity:
      if (is_strongly_connected(b)) return Role::Maker;
      if (some_vertex_decided(true, true)) return Role::Breaker;
      break;
    case Property::Kind::MinInDegreePositive: {
      bool all = true;
      for (int v = 0; v < n && all; ++v) all = b.in_degree(v) > 0;
      if (all) return Role::Maker;
      if (some_vertex_decided(true, false)) return Role::Breaker;
      break;
    }
    case Property::Kind::NonKColorable: break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Turn loop

enum class Outcome { Property, Forced, Forfeit, Capped };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Property: return "property";
    case Outcome::Forced: return "forced";
    case Outcome::Forfeit: return "forfeit";
    case Outcome::Capped: return "capped";
  }
  return "?";
}

struct GameRecord {
  GameConfig config;
  std::string maker_name;
  std::string breaker_name;
  std::vector<TranscriptEntry> transcript;
  std::optional<Role> winner;
  Outcome outcome = Outcome::Property;
  int rounds = 0;
  std::optional<int> forced_round;
  std::optional<Role> forfeit_role;
  std::string forfeit_reason;
  /// Board digest after each round (the H_t trace).
  std::vector<std::uint64_t> digests;
  /// Board at the end of play; not serialized (replay reconstructs it).
  Board board{1};
};

/// Checks a move against the current board; returns the reason when illegal.
inline std::optional<std::string> check_move(const Board& b, const Move& move, int bias) {
  if (move.empty()) return "empty move (each player must orient at least one edge)";
  if (static_cast<int>(move.size()) > bias)
    return "move orients " + std::to_string(move.size()) + " arcs with bias " + std::to_string(bias);
  Board scratch = b;
  for (const Arc& a : move) {
    try {
      scratch.orient(a);
    } catch (const Error& e) {
      return std::string(e.what());
    }
  }
  return std::nullopt;
}

inline GameRecord play_game(const GameConfig& config, Strategy& maker, Strategy& breaker) {
  if (maker.role() != Role::Maker || breaker.role() != Role::Breaker)
    throw Error(Errc::BadConfig, "strategies do not match their roles");
  if (config.p < 1 || config.q < 1) throw Error(Errc::BadConfig, "biases must be >= 1");

  GameRecord rec;
  rec.config = config;
  rec.maker_name = maker.name();
  rec.breaker_name = breaker.name();
  rec.board = Board(config.n);
  Board& board = rec.board;

  maker.begin(config, derive_seed(config.seed, Role::Maker));
  breaker.begin(config, derive_seed(config.seed, Role::Breaker));

  auto finish_forced = [&](Role w) {
    rec.winner = w;
    rec.outcome = board.is_tournament() ? Outcome::Property : Outcome::Forced;
    if (rec.outcome == Outcome::Forced) rec.forced_round = rec.rounds;
  };

  // Returns true when the game is over after this half-move.
  auto half_move = [&](Strategy& s, Role role) -> bool {
    TurnContext ctx{board, config, rec.transcript, rec.rounds, role};
    Move move;
    std::optional<std::string> bad;
    try {
      move = s.next_move(ctx);
      bad = check_move(board, move, config.bias(role));
    } catch (const Error& e) {
      bad = std::string("strategy failed: ") + e.what();
    }
    if (bad) {
      rec.winner = opponent(role);
      rec.outcome = Outcome::Forfeit;
      rec.forfeit_role = role;
      rec.forfeit_reason = *bad;
      return true;
    }
    for (const Arc& a : move) board.orient(a);
    rec.transcript.push_back({role, std::move(move)});
    if (board.is_tournament()) {
      finish_forced(evaluate_property(board, config.property) ? Role::Maker : Role::Breaker);
      return true;
    }
    if (config.early_stop) {
      if (auto w = forced_verdict(board, config.property)) {
        finish_forced(*w);
        return true;
      }
    }
    return false;
  };

  if (board.is_tournament()) {
    finish_forced(evaluate_property(board, config.property) ? Role::Maker : Role::Breaker);
    rec.digests.push_back(board.digest());
    return rec;
  }
  while (true) {
    if (config.max_rounds && rec.rounds >= *config.max_rounds) {
      rec.outcome = Outcome::Capped;
      break;
    }
    ++rec.rounds;
    bool over = half_move(maker, Role::Maker) || half_move(breaker, Role::Breaker);
    rec.digests.push_back(board.digest());
    if (over) break;
  }
  return rec;
}

/// Rebuilds the board from a record's transcript, checking legality and the
/// stored per-round digests.
inline Board replay(const GameRecord& rec) {
  Board b(rec.config.n);
  std::size_t digest_index = 0;
  Role expected = Role::Maker;
  for (std::size_t i = 0; i < rec.transcript.size(); ++i) {
    const auto& e = rec.transcript[i];
    if (e.role != expected) throw Error(Errc::CorruptTranscript, "turn order broken at entry " + std::to_string(i));
    if (auto bad = check_move(b, e.move, rec.config.bias(e.role)))
      throw Error(Errc::CorruptTranscript, "entry " + std::to_string(i) + ": " + *bad);
    for (const Arc& a : e.move) b.orient(a);
    bool round_end = e.role == Role::Breaker || i + 1 == rec.transcript.size();
    if (round_end && !rec.digests.empty()) {
      if (digest_index >= rec.digests.size() || rec.digests[digest_index] != b.digest())
        throw Error(Errc::CorruptTranscript, "digest mismatch after round " + std::to_string(digest_index + 1));
      ++digest_index;
    }
    expected = opponent(expected);
  }
  return b;
}

}  // namespace orient
