#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "orient/error.hpp"

namespace orient {

using Rational = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;

inline constexpr int kExactHarmonicLimit = 10000;

/// H_r = 1 + 1/2 + ... + 1/r exactly (r <= 10^4).
inline Rational harmonic_exact(int r) {
  if (r < 1) throw Error(Errc::InvalidArgument, "harmonic needs r >= 1");
  if (r > kExactHarmonicLimit) throw Error(Errc::TooLarge, "exact harmonic sums stop at r = 10^4");
  Rational h = 0;
  for (int i = 1; i <= r; ++i) h += Rational(1, i);
  return h;
}

/// H_r in 50-digit floating point, any r >= 1. Past the exact range the
/// Euler-Maclaurin series is used; its truncation error is below r^-8.
inline Float50 harmonic(long long r) {
  if (r < 1) throw Error(Errc::InvalidArgument, "harmonic needs r >= 1");
  if (r <= kExactHarmonicLimit) return static_cast<Float50>(harmonic_exact(static_cast<int>(r)));
  const Float50 x = Float50(r), x2 = x * x;
  return boost::multiprecision::log(x) + boost::math::constants::euler<Float50>() + 1 / (2 * x) - 1 / (12 * x2) +
         1 / (120 * x2 * x2) - 1 / (252 * x2 * x2 * x2);
}

/// lhs <= b * H_r, decided exactly while r <= 10^4.
inline bool at_most_bias_harmonic(long long lhs, long long b, int r) {
  if (r <= kExactHarmonicLimit) return Rational(lhs) <= Rational(b) * harmonic_exact(r);
  return Float50(lhs) <= Float50(b) * harmonic(r);
}

/// Single-box criterion: k <= b * H_r.
inline bool cz_criterion(int r, int k, int b) {
  if (r < 1 || k < 1 || b < 1) throw Error(Errc::InvalidArgument, "r, k, b must be >= 1");
  return at_most_bias_harmonic(k, b, r);
}

/// Two-box criterion: k + b <= b * H_r (harmonic sum over the r boxes).
inline bool two_box_criterion(int r, int k, int b) {
  if (r < 1 || k < 1 || b < 1) throw Error(Errc::InvalidArgument, "r, k, b must be >= 1");
  return at_most_bias_harmonic(static_cast<long long>(k) + b, b, r);
}

/// Minimal b with b * H_b >= n, i.e. the smallest Breaker bias for which the
/// box reduction on |A| = b, |X_v| = n - b applies.
inline int breaker_bias_threshold(long long n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "n must be >= 2");
  // Keeps b (about n / ln n) and the linear scan within int range.
  if (n > 10000000000LL) throw Error(Errc::TooLarge, "n must be <= 10^10");
  // Float scan to the neighbourhood, then exact confirmation of the boundary.
  double h = 0.0;
  int b = 0;
  while (true) {
    ++b;
    h += 1.0 / b;
    if (static_cast<double>(b) * h >= static_cast<double>(n) * (1.0 - 1e-12)) break;
  }
  auto holds = [&](int x) {
    if (x <= kExactHarmonicLimit) return Rational(x) * harmonic_exact(x) >= Rational(n);
    return Float50(x) * harmonic(x) >= Float50(n);
  };
  while (b > 1 && holds(b - 1)) --b;
  while (!holds(b)) ++b;
  return b;
}

// ---------------------------------------------------------------------------

enum class BoxVariant { Classic, TwoBox };

inline const char* to_string(BoxVariant v) { return v == BoxVariant::Classic ? "classic" : "twobox"; }

inline BoxVariant parse_box_variant(const std::string& s) {
  if (s == "classic") return BoxVariant::Classic;
  if (s == "twobox") return BoxVariant::TwoBox;
  throw Error(Errc::BadConfig, "variant must be classic or twobox");
}

enum class BoxRole { BoxMaker, BoxBreaker };

struct BoxClaim {
  int box = 0;
  bool is_virtual = false;
  bool operator==(const BoxClaim&) const = default;
};

/// Boxes with per-box real and virtual claim counts. In TwoBox each box
/// carries `pad` virtual items, claimed only after its real items.
class BoxGameState {
 public:
  BoxGameState(BoxVariant variant, std::vector<int> sizes, int pad = 0)
      : variant_(variant),
        size_(std::move(sizes)),
        real_(size_.size(), 0),
        virtual_(size_.size(), 0),
        destroyed_(size_.size(), false),
        pad_(variant == BoxVariant::TwoBox ? pad : 0) {
    for (int s : size_)
      if (s < 0) throw Error(Errc::InvalidArgument, "box sizes must be >= 0");
  }

  /// Uniform game: r boxes of k items; TwoBox pads each with b virtual items.
  static BoxGameState uniform(BoxVariant variant, int r, int k, int b) {
    return BoxGameState(variant, std::vector<int>(static_cast<std::size_t>(r), k), b);
  }

  BoxVariant variant() const { return variant_; }
  int box_count() const { return static_cast<int>(size_.size()); }
  int size(int i) const { return size_[idx(i)]; }
  int pad() const { return pad_; }
  int real_claimed(int i) const { return real_[idx(i)]; }
  int virtual_claimed(int i) const { return virtual_[idx(i)]; }
  bool destroyed(int i) const { return destroyed_[idx(i)]; }
  bool surviving(int i) const { return !destroyed(i); }
  int real_deficit(int i) const { return size(i) - real_claimed(i); }
  int padded_deficit(int i) const { return real_deficit(i) + pad_ - virtual_claimed(i); }
  bool real_complete(int i) const { return real_deficit(i) == 0; }

  int surviving_count() const { return static_cast<int>(std::count(destroyed_.begin(), destroyed_.end(), false)); }

  int complete_surviving() const {
    int c = 0;
    for (int i = 0; i < box_count(); ++i) c += surviving(i) && real_complete(i);
    return c;
  }

  bool maker_won() const { return complete_surviving() >= (variant_ == BoxVariant::Classic ? 1 : 2); }

  /// Box-Breaker has won once Box-Maker can no longer reach its goal count.
  bool breaker_won() const {
    if (maker_won()) return false;
    return surviving_count() < (variant_ == BoxVariant::Classic ? 1 : 2);
  }

  /// Items left to claim in surviving boxes (virtual included).
  int claimable() const {
    int c = 0;
    for (int i = 0; i < box_count(); ++i)
      if (surviving(i)) c += padded_deficit(i);
    return c;
  }

  void apply(const BoxClaim& c) {
    if (destroyed(c.box)) throw Error(Errc::InvalidArgument, "claim in a destroyed box");
    if (!c.is_virtual) {
      if (real_deficit(c.box) == 0) throw Error(Errc::InvalidArgument, "box has no real items left");
      ++real_[idx(c.box)];
      return;
    }
    if (real_deficit(c.box) != 0) throw Error(Errc::InvalidArgument, "virtual item before real items");
    if (virtual_claimed(c.box) >= pad_) throw Error(Errc::InvalidArgument, "box has no virtual items left");
    ++virtual_[idx(c.box)];
  }

  /// Overwrites box i's counts, for states read off an external board.
  void set_counts(int i, int real, int virt, bool destroyed) {
    if (real < 0 || real > size(i) || virt < 0 || virt > pad_) throw Error(Errc::OutOfRange, "box counts out of range");
    real_[idx(i)] = real;
    virtual_[idx(i)] = virt;
    destroyed_[idx(i)] = destroyed;
  }

  void destroy(int i) {
    if (destroyed(i)) throw Error(Errc::InvalidArgument, "box already destroyed");
    destroyed_[idx(i)] = true;
  }

 private:
  std::size_t idx(int i) const {
    if (i < 0 || i >= box_count()) throw Error(Errc::OutOfRange, "box index out of range");
    return static_cast<std::size_t>(i);
  }

  BoxVariant variant_;
  std::vector<int> size_;
  std::vector<int> real_;
  std::vector<int> virtual_;
  std::vector<bool> destroyed_;
  int pad_ = 0;
};

/// Box-Maker's b claims. While no surviving box can be finished with the
/// claims left this turn, claims go to the box with the largest padded
/// deficit, keeping surviving boxes level; from the moment one can be
/// finished, claims go to the smallest deficit for the rest of the turn.
/// Ties go to the lowest index. Virtual items only steer priority: they are
/// claimed once no surviving box has a real item left, or, with
/// `virtual_finish`, while finishing a box this turn.
inline std::vector<BoxClaim> box_maker_move(const BoxGameState& state, int b, bool virtual_finish = false) {
  bool any = false;
  for (int i = 0; i < state.box_count(); ++i) any = any || (state.surviving(i) && state.padded_deficit(i) > 0);
  if (!any) throw Error(Errc::AllDestroyed, "no surviving box has unclaimed items");

  BoxGameState s = state;
  std::vector<BoxClaim> claims;
  bool finishing = false;
  for (int left = b; left > 0; --left) {
    bool real_left = false;
    for (int i = 0; i < s.box_count(); ++i) real_left = real_left || (s.surviving(i) && s.real_deficit(i) > 0);
    auto open = [&](int i) {
      if (!s.surviving(i)) return false;
      if (real_left && !(finishing && virtual_finish)) return s.real_deficit(i) > 0;
      return s.padded_deficit(i) > 0;
    };
    int pick = -1;
    if (!finishing)
      for (int i = 0; i < s.box_count(); ++i)
        if ((open(i) || (virtual_finish && s.surviving(i) && s.padded_deficit(i) > 0)) && s.padded_deficit(i) <= left)
          finishing = true;
    for (int i = 0; i < s.box_count(); ++i) {
      if (!open(i)) continue;
      if (pick < 0) {
        pick = i;
        continue;
      }
      int d = s.padded_deficit(i), best = s.padded_deficit(pick);
      if (finishing ? d < best : d > best) pick = i;
    }
    if (pick < 0) break;
    BoxClaim c{pick, s.real_deficit(pick) == 0};
    s.apply(c);
    claims.push_back(c);
  }
  return claims;
}

// ---------------------------------------------------------------------------
// Exact solving

enum class BoxWinner { BoxMaker, BoxBreaker };

inline const char* to_string(BoxWinner w) { return w == BoxWinner::BoxMaker ? "box-maker" : "box-breaker"; }

namespace detail {

inline void check_box_budget(int r, int k, int b) {
  if (r < 1 || k < 1 || b < 1) throw Error(Errc::InvalidArgument, "r, k, b must be >= 1");
  if (r > 6 || k > 5 || b > 4) throw Error(Errc::BudgetExceeded, "box solver supports r <= 6, k <= 5, b <= 4");
}

/// Optimal play on the real game: surviving boxes as a sorted multiset of
/// real deficits, Box-Maker's turn split into single claims.
class BoxSolver {
 public:
  BoxSolver(BoxVariant v, int b) : variant_(v), b_(b) {}

  bool maker_wins_maker_to_move(std::vector<int> deficits, int left) {
    std::sort(deficits.begin(), deficits.end());
    if (goal_met(deficits)) return true;
    if (left == 0 || !claimable(deficits)) return maker_wins_breaker_to_move(deficits);
    auto key = encode(deficits, left, 0);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    for (std::size_t i = 0; i < deficits.size() && !result; ++i) {
      if (deficits[i] == 0 || (i > 0 && deficits[i] == deficits[i - 1])) continue;
      auto next = deficits;
      --next[i];
      result = maker_wins_maker_to_move(next, left - 1);
    }
    memo_[key] = result;
    return result;
  }

  bool maker_wins_breaker_to_move(std::vector<int> deficits) {
    std::sort(deficits.begin(), deficits.end());
    if (deficits.size() < goal()) return false;
    auto key = encode(deficits, 0, 1);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = true;
    for (std::size_t i = 0; i < deficits.size() && result; ++i) {
      if (i > 0 && deficits[i] == deficits[i - 1]) continue;
      auto next = deficits;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
      result = maker_wins_maker_to_move(next, b_);
    }
    memo_[key] = result;
    return result;
  }

  std::size_t nodes() const { return memo_.size(); }

 private:
  std::size_t goal() const { return variant_ == BoxVariant::Classic ? 1 : 2; }
  bool goal_met(const std::vector<int>& d) const {
    return static_cast<std::size_t>(std::count(d.begin(), d.end(), 0)) >= goal();
  }
  static bool claimable(const std::vector<int>& d) {
    return std::any_of(d.begin(), d.end(), [](int x) { return x > 0; });
  }
  static std::string encode(const std::vector<int>& d, int left, int mover) {
    std::string s(d.begin(), d.end());
    s.push_back(static_cast<char>(left));
    s.push_back(static_cast<char>(mover));
    return s;
  }

  BoxVariant variant_;
  int b_;
  std::map<std::string, bool> memo_;
};

}  // namespace detail

/// Exact winner of the uniform (r, k, b) box game under optimal play.
/// Classic: Box-Maker claims first; TwoBox: Box-Breaker destroys first.
inline BoxWinner solve_box_game(int r, int k, int b, BoxVariant variant) {
  detail::check_box_budget(r, k, b);
  detail::BoxSolver solver(variant, b);
  std::vector<int> d(static_cast<std::size_t>(r), k);
  bool maker = variant == BoxVariant::Classic ? solver.maker_wins_maker_to_move(d, b)
                                              : solver.maker_wins_breaker_to_move(d);
  return maker ? BoxWinner::BoxMaker : BoxWinner::BoxBreaker;
}

struct BoxStrategyReport {
  bool wins = true;
  /// Box-Breaker's destroy sequence that beats box_maker_move, when one exists.
  std::vector<int> refutation;
};

/// Does box_maker_move (with TwoBox padding b) win against every Box-Breaker?
inline BoxStrategyReport box_strategy_wins(int r, int k, int b, BoxVariant variant) {
  detail::check_box_budget(r, k, b);
  std::vector<int> line;
  BoxStrategyReport report;

  auto maker_turn = [&](auto&& breaker_turn, BoxGameState s) -> bool {
    if (s.maker_won()) return true;
    if (s.breaker_won() || s.claimable() == 0) return false;
    for (const auto& c : box_maker_move(s, b)) {
      s.apply(c);
      if (s.maker_won()) return true;
    }
    return breaker_turn(breaker_turn, s);
  };
  auto breaker_turn = [&](auto&& self, const BoxGameState& s) -> bool {
    if (s.breaker_won()) return false;
    for (int i = 0; i < s.box_count(); ++i) {
      if (!s.surviving(i)) continue;
      BoxGameState next = s;
      next.destroy(i);
      line.push_back(i);
      if (!maker_turn(self, next)) return false;
      line.pop_back();
    }
    return true;
  };

  BoxGameState start = BoxGameState::uniform(variant, r, k, b);
  report.wins = variant == BoxVariant::Classic ? maker_turn(breaker_turn, start) : breaker_turn(breaker_turn, start);
  if (!report.wins) report.refutation = line;
  return report;
}

}  // namespace orient
