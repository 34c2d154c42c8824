#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "orient/error.hpp"

namespace orient {

/// Winning sets over elements 0..m-1 for a potential-guided blocker.
/// The attacker claims up to p elements per turn, the blocker up to q.
/// A live set with r unclaimed-by-blocker elements has potential
/// (q+1)^(-(r - attacker claims)/p); a set holding a blocker element is dead.
class HypergraphState {
 public:
  enum class Owner : std::uint8_t { Free, Attacker, Blocker };

  HypergraphState(int elements, std::vector<std::vector<int>> sets, double p, double q)
      : owner_(static_cast<std::size_t>(elements), Owner::Free),
        sets_(std::move(sets)),
        element_sets_(static_cast<std::size_t>(elements)),
        attacker_count_(sets_.size(), 0),
        dead_(sets_.size(), false),
        p_(p),
        q_(q) {
    if (elements < 0 || p <= 0 || q <= 0) throw Error(Errc::InvalidArgument, "bad hypergraph parameters");
    std::size_t longest = 0;
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      auto& set = sets_[s];
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      for (int e : set) {
        if (e < 0 || e >= elements) throw Error(Errc::OutOfRange, "set element out of range");
        element_sets_[static_cast<std::size_t>(e)].push_back(static_cast<int>(s));
      }
      longest = std::max(longest, set.size());
    }
    // weight_[r] = (q+1)^(-r/p); indexing by integer r keeps incremental and
    // from-scratch potentials bit-identical.
    weight_.resize(longest + 1);
    for (std::size_t r = 0; r <= longest; ++r)
      weight_[r] = std::exp(-static_cast<double>(r) * std::log(q_ + 1.0) / p_);
  }

  int element_count() const { return static_cast<int>(owner_.size()); }
  std::size_t set_count() const { return sets_.size(); }
  const std::vector<int>& set(std::size_t s) const { return sets_[s]; }
  const std::vector<int>& sets_of(int e) const { return element_sets_[static_cast<std::size_t>(e)]; }
  Owner owner(int e) const { return owner_[static_cast<std::size_t>(e)]; }
  bool is_free(int e) const { return owner(e) == Owner::Free; }
  bool dead(std::size_t s) const { return dead_[s]; }
  double p() const { return p_; }
  double q() const { return q_; }

  int free_count() const {
    return static_cast<int>(std::count(owner_.begin(), owner_.end(), Owner::Free));
  }

  /// Elements of set s the attacker still needs.
  int remaining(std::size_t s) const { return static_cast<int>(sets_[s].size()) - attacker_count_[s]; }

  /// True once the attacker owns every element of some set.
  bool attacker_won() const {
    for (std::size_t s = 0; s < sets_.size(); ++s)
      if (!dead_[s] && remaining(s) == 0) return true;
    return false;
  }

  double potential(std::size_t s) const { return dead_[s] ? 0.0 : weight_[static_cast<std::size_t>(remaining(s))]; }

  /// Potential removed if the blocker takes e: sum over live sets through e.
  double score(int e) const {
    double total = 0.0;
    for (int s : sets_of(e)) total += potential(static_cast<std::size_t>(s));
    return total;
  }

  double total_potential() const {
    double total = 0.0;
    for (std::size_t s = 0; s < sets_.size(); ++s) total += potential(s);
    return total;
  }

  /// Potentials rebuilt from the owner marks alone.
  std::vector<double> recomputed_potentials() const {
    std::vector<double> out(sets_.size());
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      int mine = 0;
      bool blocked = false;
      for (int e : sets_[s]) {
        mine += owner(e) == Owner::Attacker;
        blocked = blocked || owner(e) == Owner::Blocker;
      }
      out[s] = blocked ? 0.0 : weight_[sets_[s].size() - static_cast<std::size_t>(mine)];
    }
    return out;
  }

  void claim_attacker(int e) {
    take(e, Owner::Attacker);
    for (int s : sets_of(e)) ++attacker_count_[static_cast<std::size_t>(s)];
  }

  void claim_blocker(int e) {
    take(e, Owner::Blocker);
    for (int s : sets_of(e)) dead_[static_cast<std::size_t>(s)] = true;
  }

  void release(int e) {
    Owner o = owner(e);
    if (o == Owner::Free) return;
    owner_[static_cast<std::size_t>(e)] = Owner::Free;
    if (o == Owner::Attacker) {
      for (int s : sets_of(e)) --attacker_count_[static_cast<std::size_t>(s)];
      return;
    }
    for (int s : sets_of(e)) {
      bool blocked = false;
      for (int x : sets_[static_cast<std::size_t>(s)]) blocked = blocked || owner(x) == Owner::Blocker;
      dead_[static_cast<std::size_t>(s)] = blocked;
    }
  }

 private:
  void take(int e, Owner who) {
    if (e < 0 || e >= element_count()) throw Error(Errc::OutOfRange, "element out of range");
    if (!is_free(e)) throw Error(Errc::AlreadyOriented, "element already claimed");
    owner_[static_cast<std::size_t>(e)] = who;
  }

  std::vector<Owner> owner_;
  std::vector<std::vector<int>> sets_;
  std::vector<std::vector<int>> element_sets_;
  std::vector<int> attacker_count_;
  std::vector<bool> dead_;
  std::vector<double> weight_;
  double p_;
  double q_;
};

/// Greedy potential blocker: up to `budget` claims, each the free element of
/// largest score (lowest index on ties), rescoring after every claim.
inline std::vector<int> potential_blocker_move(HypergraphState& state, int budget) {
  if (state.free_count() == 0) throw Error(Errc::NoFreeElements, "no free elements left");
  std::vector<int> picks;
  for (int i = 0; i < budget; ++i) {
    int best = -1;
    double best_score = -1.0;
    for (int e = 0; e < state.element_count(); ++e) {
      if (!state.is_free(e)) continue;
      double s = state.score(e);
      if (s > best_score) {
        best = e;
        best_score = s;
      }
    }
    if (best < 0) break;
    state.claim_blocker(best);
    picks.push_back(best);
  }
  return picks;
}

namespace detail {

using Float50 = boost::multiprecision::cpp_bin_float_50;

/// log(sum exp(x_i)) over (value, multiplicity) terms.
inline Float50 log_sum_exp(const std::vector<std::pair<Float50, Float50>>& terms) {
  if (terms.empty()) return -std::numeric_limits<Float50>::infinity();
  Float50 top = terms.front().first;
  for (const auto& t : terms) top = std::max(top, t.first);
  Float50 acc = 0;
  for (const auto& t : terms) acc += t.second * boost::multiprecision::exp(t.first - top);
  return top + boost::multiprecision::log(acc);
}

}  // namespace detail

/// sum_A (q+1)^(-|A|/p) < 1/(q+1), given the multiset of set sizes.
/// Exact rational arithmetic when p = 1 and sets are short, log space otherwise.
inline bool es_condition(const std::vector<std::size_t>& set_sizes, int p, int q) {
  if (p < 1 || q < 1) throw Error(Errc::InvalidArgument, "p, q must be >= 1");
  std::map<std::size_t, long long> by_size;
  for (auto s : set_sizes) ++by_size[s];
  if (by_size.empty()) return true;

  if (p == 1 && by_size.rbegin()->first <= 4096) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    cpp_rational sum = 0;
    const cpp_int base = q + 1;
    for (auto [size, count] : by_size) sum += cpp_rational(count, boost::multiprecision::pow(base, static_cast<unsigned>(size)));
    return sum < cpp_rational(1, q + 1);
  }
  using detail::Float50;
  const Float50 lq = boost::multiprecision::log(Float50(q + 1));
  std::vector<std::pair<Float50, Float50>> terms;
  for (auto [size, count] : by_size) terms.push_back({-Float50(size) * lq / p, Float50(count)});
  return detail::log_sum_exp(terms) < -lq;
}

inline bool es_condition(const HypergraphState& state, int p, int q) {
  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s < state.set_count(); ++s) sizes.push_back(state.set(s).size());
  return es_condition(sizes, p, q);
}

/// Uniform family of exp(log_count) sets of size `size`: log-space criterion
/// with real-valued biases, for asymptotic instances.
inline bool es_condition_uniform(double log_count, double size, double p, double q) {
  const double lq = std::log(q + 1.0);
  return log_count - size * lq / p < -lq;
}

/// ln C(n, k) for real arguments; Stirling form for large n, where the
/// lgamma difference would cancel catastrophically.
inline double log_binomial(double n, double k) {
  if (k <= 0.0 || k >= n) return 0.0;
  if (n < 1e6) return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  const double m = n - k;
  return k * std::log(n / k) + m * std::log1p(k / m) - 0.5 * std::log(2.0 * M_PI * k * m / n);
}

/// The two-set-family instance blocking Breaker between k-sets at bias
/// n/ln n: C(n,k)^2 sets of size 0.99 n^2 / (2 (ln n)^{4/5}), blocker bias 1.
inline bool stage2_es_instance_holds(double ln_n) {
  const double n = std::exp(ln_n);
  const double k = n / std::pow(ln_n, 0.4);
  // size / b computed directly: n^2 overflows a double long before n does.
  const double size_over_b = 0.99 * n * std::pow(ln_n, 0.2) / 2.0;
  return es_condition_uniform(2.0 * log_binomial(n, k), size_over_b, 1.0, 1.0);
}

/// Smallest integer ln n (scanning upward) at which the instance holds, with
/// the verdict then stable for the rest of the scan window.
inline int stage2_es_threshold_ln(int max_ln = 690) {
  int first = -1;
  for (int l = 2; l <= max_ln; ++l) {
    bool ok = stage2_es_instance_holds(static_cast<double>(l));
    if (ok && first < 0) first = l;
    if (!ok) first = -1;
  }
  return first;
}

}  // namespace orient
