#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "orient/strategies/basic.hpp"
#include "orient/strategies/box_hamilton.hpp"
#include "orient/strategies/cycle.hpp"
#include "orient/strategies/hamilton.hpp"
#include "orient/strategies/sigma.hpp"

namespace orient {

/// Identifiers accepted by make_strategy, with <..> marking a parameter.
inline const std::vector<std::string>& strategy_ids() {
  static const std::vector<std::string> ids = {
      "maker-cycle",       "maker-ck:<k>",        "maker-hamilton",       "maker-nonkcol:<k>",
      "maker-random",      "maker-greedy-attack", "maker-greedy-embed:<patternfile>",
      "maker-first",       "breaker-outstar",     "breaker-box",          "breaker-sigma:<patternfile>",
      "breaker-random",    "breaker-greedy-star", "breaker-first"};
  return ids;
}

namespace detail {

inline int parse_strategy_int(const std::string& id, const std::string& arg) {
  try {
    std::size_t used = 0;
    int v = std::stoi(arg, &used);
    if (used == arg.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::UnknownStrategy, "bad integer parameter in '" + id + "'");
}

inline PatternGraph load_pattern(const std::string& id, const std::string& path) {
  std::ifstream in(path);
  if (path.empty() || !in) throw Error(Errc::UnknownStrategy, "'" + id + "': cannot read pattern file '" + path + "'");
  std::stringstream text;
  text << in.rdbuf();
  return PatternGraph::from_text(text.str());
}

}  // namespace detail

/// Builds a strategy from its identifier; `config` supplies n and the biases
/// for strategies that are fixed at construction.
inline std::unique_ptr<Strategy> make_strategy(const std::string& id, const GameConfig& config) {
  const auto colon = id.find(':');
  const std::string head = id.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : id.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;
  auto no_arg = [&] {
    if (has_arg) throw Error(Errc::UnknownStrategy, "'" + head + "' takes no parameter");
  };

  if (head == "maker-cycle") return no_arg(), std::make_unique<MakerCycle>(3);
  if (head == "maker-ck") return std::make_unique<MakerCycle>(detail::parse_strategy_int(id, arg));
  if (head == "maker-hamilton") return no_arg(), std::make_unique<MakerHamilton>();
  if (head == "maker-nonkcol") return std::make_unique<MakerNonKColorable>(detail::parse_strategy_int(id, arg));
  if (head == "maker-random") return no_arg(), std::make_unique<RandomStrategy<Role::Maker>>();
  if (head == "maker-greedy-attack") return no_arg(), std::make_unique<MakerGreedyAttack>();
  if (head == "maker-greedy-embed") return std::make_unique<MakerGreedyEmbed>(detail::load_pattern(id, arg));
  if (head == "maker-first") return no_arg(), std::make_unique<LowestPairStrategy<Role::Maker>>();
  if (head == "breaker-outstar") return no_arg(), std::make_unique<BreakerOutstar>();
  if (head == "breaker-box") {
    no_arg();
    try {
      return std::make_unique<BreakerBoxHamilton>(config.n, config.q);
    } catch (const Error& e) {
      if (e.code() != Errc::CriterionUnmet) throw;
      throw Error(Errc::BadConfig, "breaker-box needs n <= q * H_q; for n = " + std::to_string(config.n) +
                                       " the smallest such q is " + std::to_string(breaker_bias_threshold(config.n)));
    }
  }
  if (head == "breaker-sigma") return std::make_unique<BreakerSigmaPotential>(detail::load_pattern(id, arg));
  if (head == "breaker-random") return no_arg(), std::make_unique<RandomStrategy<Role::Breaker>>();
  if (head == "breaker-greedy-star") return no_arg(), std::make_unique<BreakerGreedyStar>();
  if (head == "breaker-first") return no_arg(), std::make_unique<LowestPairStrategy<Role::Breaker>>();
  throw Error(Errc::UnknownStrategy, "unknown strategy '" + id + "'");
}

}  // namespace orient
