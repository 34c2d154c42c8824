#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orient/hypergraph.hpp"
#include "orient/oracles/cycles.hpp"
#include "orient/strategies/common.hpp"

namespace orient {

// ---------------------------------------------------------------------------
// Stage 1: minimum degree on the bipartite double cover.

/// Maker's and Breaker's graphs on K_{n,n}. Vertex x < n is the out-copy of
/// x, vertex n + j the in-copy of j; edge e(i, j) joins i and n + j and
/// stands for the arc i -> j. A Breaker arc u -> v hands e(v, u) to Breaker;
/// a real Maker arc i -> j takes e(i, j) and hands e(j, i) to Breaker.
class DangerLedger {
 public:
  enum class Edge : std::uint8_t { Free, Maker, Breaker };
  enum class Take { RealArc, ExtraTurn };

  DangerLedger(int n, int b, int target = 5)
      : n_(n), b_(b), target_(target),
        edge_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Edge::Free),
        deg_m_(static_cast<std::size_t>(2 * n), 0),
        deg_b_(static_cast<std::size_t>(2 * n), 0),
        free_(static_cast<std::size_t>(2 * n), n) {
    if (n < 2 || b < 1 || target < 1) throw Error(Errc::InvalidArgument, "bad ledger parameters");
  }

  int n() const { return n_; }
  int bias() const { return b_; }
  int target() const { return target_; }
  Edge edge(int i, int j) const { return edge_[at(i, j)]; }
  int deg_m(int x) const { return deg_m_[vx(x)]; }
  int deg_b(int x) const { return deg_b_[vx(x)]; }
  int free_degree(int x) const { return free_[vx(x)]; }
  long long danger(int x) const { return deg_b(x) - 2LL * b_ * deg_m(x); }
  bool dangerous(int x) const { return deg_m(x) < target_; }

  /// Breaker oriented u -> v on K_n.
  void breaker_arc(int u, int v) {
    if (edge(v, u) == Edge::Free) mark(v, u, Edge::Breaker);
  }

  /// Maker takes e(i, j). A real arc i -> j is due only when the mirror is
  /// still free and i != j; otherwise the claim is bookkeeping and Maker
  /// moves again.
  Take maker_take(int i, int j) {
    if (edge(i, j) != Edge::Free) throw Error(Errc::AlreadyOriented, "bipartite edge already taken");
    mark(i, j, Edge::Maker);
    if (i == j || edge(j, i) == Edge::Breaker) return Take::ExtraTurn;
    mark(j, i, Edge::Breaker);
    return Take::RealArc;
  }

  /// Dangerous vertex of largest danger with a free edge, lowest on ties.
  std::optional<int> pick_vertex() const {
    std::optional<int> best;
    for (int x = 0; x < 2 * n_; ++x) {
      if (!dangerous(x) || free_degree(x) == 0) continue;
      if (!best || danger(x) > danger(*best)) best = x;
    }
    return best;
  }

  bool complete() const { return !pick_vertex().has_value(); }

  /// Free edges at x as (i, j) with e(i, j), in index order.
  std::vector<std::pair<int, int>> free_edges(int x) const {
    std::vector<std::pair<int, int>> out;
    for (int y = 0; y < n_; ++y) {
      auto e = x < n_ ? std::pair{x, y} : std::pair{y, x - n_};
      if (edge(e.first, e.second) == Edge::Free) out.push_back(e);
    }
    return out;
  }

  int min_deg_m() const { return *std::min_element(deg_m_.begin(), deg_m_.end()); }

 private:
  std::size_t at(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw Error(Errc::OutOfRange, "bipartite edge out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }
  std::size_t vx(int x) const {
    if (x < 0 || x >= 2 * n_) throw Error(Errc::OutOfRange, "bipartite vertex out of range");
    return static_cast<std::size_t>(x);
  }
  void mark(int i, int j, Edge who) {
    edge_[at(i, j)] = who;
    auto& deg = who == Edge::Maker ? deg_m_ : deg_b_;
    ++deg[static_cast<std::size_t>(i)];
    ++deg[static_cast<std::size_t>(n_ + j)];
    --free_[static_cast<std::size_t>(i)];
    --free_[static_cast<std::size_t>(n_ + j)];
  }

  int n_, b_, target_;
  std::vector<Edge> edge_;
  std::vector<int> deg_m_, deg_b_, free_;
};

// ---------------------------------------------------------------------------
// Stage 2: the template tournament and the potential-guided blocker.

/// Expansion size for the template stage: ceil(n / (ln n)^{2/5}).
inline int template_expansion_size(int n) {
  if (n < 2) return 1;
  return std::max(1, static_cast<int>(std::ceil(n / std::pow(std::log(static_cast<double>(n)), 0.4))));
}

/// Stage-1 free-degree floor 15 / (ln n)^{1/4} (recorded, not enforced).
inline double stage1_free_degree_floor(int n) { return 15.0 / std::pow(std::log(static_cast<double>(n)), 0.25); }

/// Disjoint-set-pair size for the non-k-colorability game: floor(n / 2k).
inline int nonkcol_set_size(int n, int k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
  return n / (2 * k);
}

/// C(n, m)^2, the nominal size of the set-pair family.
inline double nonkcol_family_size(int n, int m) {
  double c = 1.0;
  for (int i = 0; i < m; ++i) c = c * (n - i) / (i + 1);
  return std::round(c) * std::round(c);
}

struct TemplateAudit {
  int trials = 0;
  int failures = 0;
  /// Smallest min(e(A,B), e(B,A)) / (|A||B|) seen.
  double min_ratio = 1.0;
  bool ok() const { return failures == 0; }
};

/// Samples disjoint k-set pairs and checks arcs both ways number at least
/// |A||B|/4 each. One-sided, like every sampled audit.
inline TemplateAudit audit_template(const Board& t, int k, int trials, std::uint64_t seed) {
  TemplateAudit audit;
  const int n = t.n();
  if (k < 1 || 2 * k > n || trials <= 0) return audit;
  std::mt19937_64 rng(seed);
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;
  const std::size_t words = static_cast<std::size_t>(VertexSet::word_count(n));
  for (int trial = 0; trial < trials; ++trial) {
    std::shuffle(verts.begin(), verts.end(), rng);
    VertexSet b(n);
    for (int i = k; i < 2 * k; ++i) b.insert(verts[static_cast<std::size_t>(i)]);
    long long forward = 0;
    for (int i = 0; i < k; ++i) {
      auto row = t.out_row(verts[static_cast<std::size_t>(i)]);
      for (std::size_t w = 0; w < words; ++w) forward += std::popcount(row[w] & b.words()[w]);
    }
    const long long total = static_cast<long long>(k) * k;
    const long long low = std::min(forward, total - forward);
    ++audit.trials;
    audit.min_ratio = std::min(audit.min_ratio, static_cast<double>(low) / static_cast<double>(total));
    if (4 * low < total) ++audit.failures;
  }
  return audit;
}

struct TemplateReport {
  Board tournament{1};
  std::uint64_t seed = 0;
  int attempts = 0;
  TemplateAudit audit;
};

/// Fair-coin tournament; regenerated from derived seeds until the audit
/// passes or `max_attempts` is spent (the best audit is then kept).
inline TemplateReport generate_template(int n, std::uint64_t seed, int k, int audit_trials = 10000, int max_attempts = 8) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be >= 1");
  TemplateReport best;
  bool have = false;
  for (int attempt = 0; attempt < std::max(1, max_attempts); ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : hash_combine(seed, static_cast<std::uint64_t>(attempt));
    std::mt19937_64 rng(s);
    Board t(n);
    for (std::size_t i = 0; i < t.pair_count(); ++i) {
      Arc p = t.pair_at(i);
      if (rng() & 1U) std::swap(p.tail, p.head);
      t.orient(p);
    }
    TemplateAudit audit = audit_template(t, k, audit_trials, hash_combine(s, 0xa0d17ULL));
    if (!have || audit.failures < best.audit.failures) {
      best = {t, s, attempt + 1, audit};
      have = true;
    }
    best.attempts = attempt + 1;
    if (audit.ok()) break;
  }
  return best;
}

/// Maker's blocker over ordered disjoint pairs (A, B) of m-sets: the set
/// for (A, B) is the template arcs from A to B. A pair oriented against the
/// template is an attacker claim, along the template a blocker claim (the
/// arc A -> B then exists and the set is dead). Maker only plays template
/// arcs. Exact mode runs the potential blocker on the full family; sampled
/// mode keeps a seeded sample of set pairs and scores candidate arcs by the
/// potential of the live sampled sets through them.
class TemplateBlocker {
 public:
  enum class Mode { Auto, Exact, Sampled };

  TemplateBlocker(Board tstar, int m, int attacker_bias, std::uint64_t seed, Mode mode = Mode::Auto,
                  int samples = 4096, int candidate_cap = 256)
      : tstar_(std::move(tstar)), m_(m), bias_(attacker_bias), seen_(tstar_.n()), candidate_cap_(candidate_cap) {
    if (!tstar_.is_tournament()) throw Error(Errc::NotATournament, "template must be a tournament");
    if (m < 1 || attacker_bias < 1) throw Error(Errc::InvalidArgument, "set size and bias must be >= 1");
    const int n = tstar_.n();
    const bool feasible = 2 * m <= n;
    if (mode == Mode::Auto) mode = n <= 12 ? Mode::Exact : Mode::Sampled;
    exact_ = mode == Mode::Exact;
    if (!feasible) return;
    if (exact_)
      build_exact();
    else
      build_sampled(seed, samples);
  }

  bool exact() const { return exact_; }
  const Board& tournament() const { return tstar_; }
  int set_size() const { return m_; }
  std::size_t set_count() const { return exact_ ? (state_ ? state_->set_count() : 0) : samples_.size(); }
  const std::optional<HypergraphState>& exact_state() const { return state_; }

  /// Template direction of pair {u, v}.
  Arc along(int u, int v) const { return tstar_.has_arc(u, v) ? Arc{u, v} : Arc{v, u}; }

  /// Folds every orientation made since the last call into the claims.
  void sync(const Board& board) {
    for (std::size_t i = 0; i < board.pair_count(); ++i) {
      if (board.state_at(i) == PairState::Undirected || seen_.state_at(i) != PairState::Undirected) continue;
      Arc p = board.pair_at(i);
      if (!board.has_arc(p.tail, p.head)) std::swap(p.tail, p.head);
      seen_.orient(p);
      record(i, tstar_.has_arc(p.tail, p.head));
    }
  }

  /// Next template arc for Maker on `board` (already synced).
  Arc choose(const Board& board) {
    if (board.is_tournament()) throw Error(Errc::NoAgreeingPair, "no undirected pair left");
    std::optional<std::size_t> pick;
    if (exact_ && state_) {
      double best = -1.0;
      for (std::size_t e = 0; e < board.pair_count(); ++e) {
        if (!state_->is_free(static_cast<int>(e))) continue;
        double s = state_->score(static_cast<int>(e));
        if (s > best) {
          best = s;
          pick = e;
        }
      }
    } else if (!samples_.empty()) {
      pick = sampled_pick(board);
    }
    if (!pick) pick = board.first_undirected(0);
    Arc p = board.pair_at(*pick);
    if (!board.is_undirected(p.tail, p.head)) throw Error(Errc::NoAgreeingPair, "chosen pair already oriented");
    return along(p.tail, p.head);
  }

  int live_sets() const {
    if (exact_ && state_) {
      int c = 0;
      for (std::size_t s = 0; s < state_->set_count(); ++s) c += !state_->dead(s);
      return c;
    }
    return static_cast<int>(std::count(sample_dead_.begin(), sample_dead_.end(), false));
  }

 private:
  struct SampledSet {
    VertexSet a, b;
    int elements = 0;
  };

  void build_exact() {
    const int n = tstar_.n();
    std::vector<std::vector<int>> sets;
    std::vector<int> a_set, b_set;
    auto combos = [&](int size, std::uint32_t banned, auto&& fn) {
      std::vector<int> pick;
      auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == size) {
          fn(pick);
          return;
        }
        for (int v = from; v < n; ++v) {
          if (banned >> v & 1U) continue;
          pick.push_back(v);
          self(self, v + 1);
          pick.pop_back();
        }
      };
      rec(rec, 0);
    };
    combos(m_, 0U, [&](const std::vector<int>& a) {
      std::uint32_t amask = 0;
      for (int v : a) amask |= 1U << v;
      combos(m_, amask, [&](const std::vector<int>& b) {
        std::vector<int> set;
        for (int u : a)
          for (int v : b)
            if (tstar_.has_arc(u, v)) set.push_back(static_cast<int>(tstar_.pair_index(u, v)));
        sets.push_back(std::move(set));
      });
    });
    state_.emplace(static_cast<int>(tstar_.pair_count()), std::move(sets), static_cast<double>(bias_), 1.0);
  }

  void build_sampled(std::uint64_t seed, int samples) {
    const int n = tstar_.n();
    std::mt19937_64 rng(seed);
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;
    const double lq = std::log(2.0) / bias_;
    for (int s = 0; s < samples; ++s) {
      std::shuffle(verts.begin(), verts.end(), rng);
      SampledSet set{VertexSet(n), VertexSet(n), 0};
      for (int i = 0; i < m_; ++i) set.a.insert(verts[static_cast<std::size_t>(i)]);
      for (int i = m_; i < 2 * m_; ++i) set.b.insert(verts[static_cast<std::size_t>(i)]);
      set.a.for_each([&](int u) {
        VertexSet out = tstar_.out_neighbors(u);
        out &= set.b;
        set.elements += out.size();
      });
      samples_.push_back(std::move(set));
    }
    sample_remaining_.resize(samples_.size());
    sample_dead_.assign(samples_.size(), false);
    for (std::size_t s = 0; s < samples_.size(); ++s) sample_remaining_[s] = samples_[s].elements;
    weight_lq_ = lq;
  }

  void record(std::size_t pair, bool agrees) {
    if (exact_ && state_) {
      const int e = static_cast<int>(pair);
      if (!state_->is_free(e)) return;
      if (agrees)
        state_->claim_blocker(e);
      else
        state_->claim_attacker(e);
      return;
    }
    Arc p = tstar_.pair_at(pair);
    Arc t = along(p.tail, p.head);
    for (std::size_t s = 0; s < samples_.size(); ++s) {
      if (sample_dead_[s] || !samples_[s].a.contains(t.tail) || !samples_[s].b.contains(t.head)) continue;
      if (agrees)
        sample_dead_[s] = true;
      else
        --sample_remaining_[s];
    }
  }

  double sample_weight(std::size_t s) const { return std::exp(-weight_lq_ * sample_remaining_[s]); }

  /// Most urgent live sample, then its best free template slot by summed
  /// potential of the live samples through it.
  std::optional<std::size_t> sampled_pick(const Board& board) const {
    std::optional<std::size_t> urgent;
    for (std::size_t s = 0; s < samples_.size(); ++s) {
      if (sample_dead_[s]) continue;
      if (!urgent || sample_remaining_[s] < sample_remaining_[*urgent]) urgent = s;
    }
    if (!urgent) return std::nullopt;
    std::vector<std::size_t> slots;
    const auto& u = samples_[*urgent];
    u.a.for_each([&](int x) {
      u.b.for_each([&](int y) {
        if (tstar_.has_arc(x, y) && board.is_undirected(x, y)) slots.push_back(board.pair_index(x, y));
      });
    });
    if (slots.empty()) return std::nullopt;
    std::sort(slots.begin(), slots.end());
    if (static_cast<int>(slots.size()) > candidate_cap_) slots.resize(static_cast<std::size_t>(candidate_cap_));
    std::optional<std::size_t> best;
    double best_score = -1.0;
    for (std::size_t slot : slots) {
      Arc t = tstar_.pair_at(slot);
      t = along(t.tail, t.head);
      double score = 0.0;
      for (std::size_t s = 0; s < samples_.size(); ++s)
        if (!sample_dead_[s] && samples_[s].a.contains(t.tail) && samples_[s].b.contains(t.head)) score += sample_weight(s);
      if (score > best_score) {
        best_score = score;
        best = slot;
      }
    }
    return best;
  }

  Board tstar_;
  int m_;
  int bias_;
  bool exact_ = false;
  Board seen_;
  std::optional<HypergraphState> state_;
  std::vector<SampledSet> samples_;
  std::vector<int> sample_remaining_;
  std::vector<bool> sample_dead_;
  double weight_lq_ = 0.0;
  int candidate_cap_;
};

struct Stage2Config {
  /// Expansion size; template_expansion_size(n) when unset.
  std::optional<int> k;
  int audit_trials = 10000;
  int template_attempts = 8;
  int samples = 4096;
  int candidate_cap = 256;
  TemplateBlocker::Mode mode = TemplateBlocker::Mode::Auto;
};

// ---------------------------------------------------------------------------
// The two-stage Hamiltonicity Maker.

/// Stage 1 raises every bipartite degree of Maker's graph to 5 by always
/// serving the most endangered vertex with a uniformly random free edge;
/// stage 2 plays template arcs chosen by the blocker.
class MakerHamilton : public StrategyBase<MakerHamilton, Role::Maker> {
 public:
  explicit MakerHamilton(Stage2Config cfg = {}) : cfg_(cfg) {}

  std::string name() const override { return "maker-hamilton"; }

  void begin(const GameConfig& config, std::uint64_t seed) override {
    Strategy::begin(config, seed);
    ledger_.emplace(config.n, config.q, 5);
    k_ = cfg_.k.value_or(template_expansion_size(config.n));
    TemplateReport t = generate_template(config.n, hash_combine(seed, 0x7e3a11ULL), k_, cfg_.audit_trials,
                                         cfg_.template_attempts);
    template_audit_ = t.audit;
    blocker_.emplace(std::move(t.tournament), k_, config.q, hash_combine(seed, 0x5a3b1eULL), cfg_.mode, cfg_.samples,
                     cfg_.candidate_cap);
    stage1_round_.reset();
    stage1_min_in_ = stage1_min_out_ = 0;
    extra_turns_ = fallbacks_ = 0;
  }

  Move next_move(const TurnContext& ctx) override {
    for (const Arc& a : ctx.last_opponent_move()) ledger_->breaker_arc(a.tail, a.head);
    MoveBuilder mb(ctx.board, ctx.bias());
    while (!mb.full()) {
      if (!stage1_round_ && stage1_step(mb)) continue;
      if (!stage1_round_) mark_stage1(mb.board(), ctx.round);
      blocker_->sync(mb.board());
      mb.add(blocker_->choose(mb.board()));
    }
    return mb.take();
  }

  const DangerLedger& ledger() const { return *ledger_; }
  const TemplateBlocker& blocker() const { return *blocker_; }
  std::optional<int> stage1_round() const { return stage1_round_; }
  int stage1_min_in() const { return stage1_min_in_; }
  int stage1_min_out() const { return stage1_min_out_; }
  int expansion_size() const { return k_; }
  const TemplateAudit& template_audit() const { return template_audit_; }
  int extra_turns() const { return extra_turns_; }
  int fallbacks() const { return fallbacks_; }

 private:
  /// One real Maker arc from stage 1; false once the stage is complete.
  bool stage1_step(MoveBuilder& mb) {
    const int n = mb.board().n();
    for (int redraw = 0; redraw <= n; ++redraw) {
      auto x = ledger_->pick_vertex();
      if (!x) return false;
      auto options = ledger_->free_edges(*x);
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      auto [i, j] = options[pick(rng_)];
      if (ledger_->maker_take(i, j) == DangerLedger::Take::RealArc) {
        if (!mb.add(i, j)) throw Error(Errc::StrategyStuck, "stage-1 pair unexpectedly oriented");
        return true;
      }
      ++extra_turns_;
    }
    // Redraws exhausted: any free real pair keeps the turn legal.
    ++fallbacks_;
    auto a = lowest_undirected(mb.board());
    if (!a) return false;
    if (ledger_->edge(a->tail, a->head) == DangerLedger::Edge::Free)
      ledger_->maker_take(a->tail, a->head);
    else
      ledger_->breaker_arc(a->tail, a->head);
    mb.add(*a);
    return true;
  }

  void mark_stage1(const Board& b, int round) {
    stage1_round_ = round;
    stage1_min_in_ = stage1_min_out_ = b.n();
    for (int v = 0; v < b.n(); ++v) {
      stage1_min_in_ = std::min(stage1_min_in_, b.in_degree(v));
      stage1_min_out_ = std::min(stage1_min_out_, b.out_degree(v));
    }
  }

  Stage2Config cfg_;
  std::optional<DangerLedger> ledger_;
  std::optional<TemplateBlocker> blocker_;
  TemplateAudit template_audit_;
  int k_ = 1;
  std::optional<int> stage1_round_;
  int stage1_min_in_ = 0, stage1_min_out_ = 0;
  int extra_turns_ = 0, fallbacks_ = 0;
};

/// Maker against k-colorability: template arcs only, blocking Breaker from
/// owning all pairs between two disjoint m-sets, m = floor(n / 2k).
class MakerNonKColorable : public StrategyBase<MakerNonKColorable, Role::Maker> {
 public:
  explicit MakerNonKColorable(int k, Stage2Config cfg = {}) : k_(k), cfg_(cfg) {
    if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
  }

  std::string name() const override { return "maker-nonkcol:" + std::to_string(k_); }

  void begin(const GameConfig& config, std::uint64_t seed) override {
    Strategy::begin(config, seed);
    const int m = nonkcol_set_size(config.n, k_);
    if (m < 1) throw Error(Errc::BadConfig, "n / 2k must be >= 1");
    TemplateReport t = generate_template(config.n, hash_combine(seed, 0x7e3a11ULL), m, cfg_.audit_trials,
                                         cfg_.template_attempts);
    blocker_.emplace(std::move(t.tournament), m, config.q, hash_combine(seed, 0x5a3b1eULL), cfg_.mode, cfg_.samples,
                     cfg_.candidate_cap);
  }

  Move next_move(const TurnContext& ctx) override {
    MoveBuilder mb(ctx.board, ctx.bias());
    while (!mb.full()) {
      blocker_->sync(mb.board());
      mb.add(blocker_->choose(mb.board()));
    }
    return mb.take();
  }

  const TemplateBlocker& blocker() const { return *blocker_; }

 private:
  int k_;
  Stage2Config cfg_;
  std::optional<TemplateBlocker> blocker_;
};

}  // namespace orient
