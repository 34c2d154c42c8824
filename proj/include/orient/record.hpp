#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "orient/engine.hpp"

namespace orient {

inline constexpr int kRecordVersion = 1;

namespace detail {

inline std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline std::uint64_t parse_hex64(const std::string& s) {
  if (s.empty() || s.size() > 16 || s.find_first_not_of("0123456789abcdef") != std::string::npos)
    throw Error(Errc::ParseError, "bad digest '" + s + "'");
  return std::stoull(s, nullptr, 16);
}

inline std::string arc_text(const Arc& a) { return std::to_string(a.tail) + ">" + std::to_string(a.head); }

inline Arc parse_arc_text(const std::string& s) {
  auto gt = s.find('>');
  try {
    if (gt == std::string::npos) throw std::invalid_argument(s);
    std::size_t u = 0, v = 0;
    int tail = std::stoi(s.substr(0, gt), &u);
    int head = std::stoi(s.substr(gt + 1), &v);
    if (u != gt || v != s.size() - gt - 1) throw std::invalid_argument(s);
    return {tail, head};
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad arc '" + s + "'");
  }
}

inline Role parse_role(const std::string& s) {
  if (s == "maker") return Role::Maker;
  if (s == "breaker") return Role::Breaker;
  throw Error(Errc::ParseError, "bad role '" + s + "'");
}

inline Outcome parse_outcome(const std::string& s) {
  for (Outcome o : {Outcome::Property, Outcome::Forced, Outcome::Forfeit, Outcome::Capped})
    if (s == to_string(o)) return o;
  throw Error(Errc::ParseError, "bad outcome '" + s + "'");
}

}  // namespace detail

/// Archival form of a game: code version, full configuration, the
/// transcript as "u>v" arcs, verdict and per-round digests.
inline nlohmann::ordered_json record_to_json(const GameRecord& rec) {
  nlohmann::ordered_json j;
  j["version"] = kRecordVersion;
  j["code_version"] = kCodeVersion;
  j["n"] = rec.config.n;
  j["p"] = rec.config.p;
  j["q"] = rec.config.q;
  j["property"] = rec.config.property.name();
  if (rec.config.property.pattern) j["pattern"] = rec.config.property.pattern->to_text();
  j["seed"] = rec.config.seed;
  j["max_rounds"] = rec.config.max_rounds ? nlohmann::ordered_json(*rec.config.max_rounds) : nlohmann::ordered_json();
  j["early_stop"] = rec.config.early_stop;
  j["maker"] = rec.maker_name;
  j["breaker"] = rec.breaker_name;
  auto moves = nlohmann::ordered_json::array();
  for (const auto& e : rec.transcript) {
    auto arcs = nlohmann::ordered_json::array();
    for (const Arc& a : e.move) arcs.push_back(detail::arc_text(a));
    moves.push_back({{"role", to_string(e.role)}, {"arcs", arcs}});
  }
  j["moves"] = moves;
  j["winner"] = rec.winner ? nlohmann::ordered_json(to_string(*rec.winner)) : nlohmann::ordered_json();
  j["outcome"] = to_string(rec.outcome);
  j["rounds"] = rec.rounds;
  j["forced_round"] = rec.forced_round ? nlohmann::ordered_json(*rec.forced_round) : nlohmann::ordered_json();
  if (rec.forfeit_role) {
    j["forfeit_role"] = to_string(*rec.forfeit_role);
    j["forfeit_reason"] = rec.forfeit_reason;
  }
  auto digests = nlohmann::ordered_json::array();
  for (auto d : rec.digests) digests.push_back(detail::hex64(d));
  j["digests"] = digests;
  return j;
}

/// Inverse of record_to_json; the board is rebuilt by replay.
inline GameRecord record_from_json(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != kRecordVersion) throw Error(Errc::ParseError, "unsupported record version");
    GameRecord rec;
    rec.config.n = j.at("n").get<int>();
    rec.config.p = j.at("p").get<int>();
    rec.config.q = j.at("q").get<int>();
    const auto prop = j.at("property").get<std::string>();
    if (prop == "contains-h")
      rec.config.property = Property::contains(PatternGraph::from_text(j.at("pattern").get<std::string>()));
    else
      rec.config.property = Property::parse(prop);
    rec.config.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("max_rounds").is_null()) rec.config.max_rounds = j.at("max_rounds").get<int>();
    rec.config.early_stop = j.at("early_stop").get<bool>();
    rec.maker_name = j.at("maker").get<std::string>();
    rec.breaker_name = j.at("breaker").get<std::string>();
    for (const auto& m : j.at("moves")) {
      TranscriptEntry e;
      e.role = detail::parse_role(m.at("role").get<std::string>());
      for (const auto& a : m.at("arcs")) e.move.push_back(detail::parse_arc_text(a.get<std::string>()));
      rec.transcript.push_back(std::move(e));
    }
    if (!j.at("winner").is_null()) rec.winner = detail::parse_role(j.at("winner").get<std::string>());
    rec.outcome = detail::parse_outcome(j.at("outcome").get<std::string>());
    rec.rounds = j.at("rounds").get<int>();
    if (!j.at("forced_round").is_null()) rec.forced_round = j.at("forced_round").get<int>();
    if (j.contains("forfeit_role")) {
      rec.forfeit_role = detail::parse_role(j.at("forfeit_role").get<std::string>());
      rec.forfeit_reason = j.at("forfeit_reason").get<std::string>();
    }
    for (const auto& d : j.at("digests")) rec.digests.push_back(detail::parse_hex64(d.get<std::string>()));
    rec.board = replay(rec);
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("record: ") + e.what());
  }
}

}  // namespace orient
