#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orient/boxgame.hpp"
#include "orient/oracles.hpp"
#include "orient/record.hpp"
#include "orient/solver.hpp"
#include "orient/strategies.hpp"

namespace orient::cli {

enum Exit { kOk = 0, kBadInput = 2, kBudget = 3 };

inline int exit_code(Errc c) {
  return c == Errc::BudgetExceeded || c == Errc::TooLarge ? kBudget : kBadInput;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read '" + path + "'");
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::BadConfig, "cannot write '" + path + "'");
  out << text;
}

inline Property property_from(const std::string& name, const std::string& pattern_file) {
  if (name == "contains-h") {
    if (pattern_file.empty()) throw Error(Errc::BadConfig, "contains-h needs --pattern");
    return Property::contains(PatternGraph::from_text(read_file(pattern_file)));
  }
  return Property::parse(name);
}

/// q = floor(c * n / ln n), at least 1.
inline int bias_from_formula(double c, int n) {
  if (n < 2) throw Error(Errc::BadConfig, "bias formula needs n >= 2");
  return std::max(1, static_cast<int>(std::floor(c * n / std::log(static_cast<double>(n)))));
}

inline std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

// ---------------------------------------------------------------------------

struct PlayArgs {
  int n = 0, p = 1, q = 1;
  std::string maker, breaker, property = "cycle", pattern, out;
  std::uint64_t seed = 0;
  int max_rounds = 0;
  bool no_early_stop = false;
};

inline GameRecord run_game(const GameConfig& cfg, const std::string& maker_id, const std::string& breaker_id) {
  auto maker = make_strategy(maker_id, cfg);
  auto breaker = make_strategy(breaker_id, cfg);
  if (maker->role() != Role::Maker) throw Error(Errc::UnknownStrategy, "'" + maker_id + "' is not a Maker strategy");
  if (breaker->role() != Role::Breaker)
    throw Error(Errc::UnknownStrategy, "'" + breaker_id + "' is not a Breaker strategy");
  return play_game(cfg, *maker, *breaker);
}

inline int cmd_play(const PlayArgs& a, std::ostream& out) {
  GameConfig cfg = game_config(a.n, a.p, a.q, property_from(a.property, a.pattern), a.seed);
  if (a.max_rounds > 0) cfg.max_rounds = a.max_rounds;
  cfg.early_stop = !a.no_early_stop;
  GameRecord rec = run_game(cfg, a.maker, a.breaker);
  if (!a.out.empty()) write_file(a.out, record_to_json(rec).dump(2) + "\n");
  out << "winner: " << (rec.winner ? to_string(*rec.winner) : "none") << "\n";
  out << "rounds: " << rec.rounds << "\n";
  out << "outcome: " << to_string(rec.outcome) << "\n";
  if (rec.forfeit_role) out << "forfeit: " << to_string(*rec.forfeit_role) << " (" << rec.forfeit_reason << ")\n";
  return kOk;
}

// ---------------------------------------------------------------------------

inline constexpr int kCsvVersion = 1;

struct SweepArgs {
  std::vector<int> ns, biases;
  std::vector<double> bias_c;
  int p = 1;
  std::string maker, breaker, property = "cycle", pattern, out;
  int seeds = 10;
  std::uint64_t seed_base = 0;
  int threads = 1;
  bool timing = false;
  bool no_early_stop = false;
};

struct SweepRow {
  int n = 0, q = 0;
  std::uint64_t seed = 0;
  std::string winner, outcome, error;
  int rounds = 0;
  double wall_ms = 0;
};

inline std::string csv_header(bool timing) {
  return std::string("version,kind,n,p,q,property,maker,breaker,seed,winner,outcome,rounds,maker_win_rate,games,error") +
         (timing ? ",wall_ms" : "") + "\n";
}

/// Quotes a field when it holds a comma, quote or newline.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (a.ns.empty()) throw Error(Errc::BadConfig, "empty n list");
  if (a.biases.empty() && a.bias_c.empty()) throw Error(Errc::BadConfig, "empty bias list");
  if (!a.biases.empty() && !a.bias_c.empty()) throw Error(Errc::BadConfig, "give --bias or --bias-c, not both");
  if (a.seeds < 1) throw Error(Errc::BadConfig, "seeds per cell must be >= 1");
  const Property prop = property_from(a.property, a.pattern);
  struct Cell {
    int n, q;
  };
  std::vector<Cell> cells;
  for (int n : a.ns) {
    if (!a.biases.empty())
      for (int q : a.biases) cells.push_back({n, q});
    else
      for (double c : a.bias_c) cells.push_back({n, bias_from_formula(c, n)});
  }
  for (const auto& c : cells)
    if (c.n < 2 || c.q < 1) throw Error(Errc::BadConfig, "cells need n >= 2 and q >= 1");
  // Unknown ids fail the whole sweep; per-cell construction failures only
  // mark their rows.
  for (const auto& id : {a.maker, a.breaker}) {
    try {
      make_strategy(id, game_config(cells.front().n, a.p, cells.front().q, prop));
    } catch (const Error& e) {
      if (e.code() == Errc::UnknownStrategy) throw;
    }
  }

  const std::size_t per = static_cast<std::size_t>(a.seeds);
  std::vector<SweepRow> rows(cells.size() * per);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < rows.size(); job = next++) {
      const Cell& cell = cells[job / per];
      SweepRow& row = rows[job];
      row.n = cell.n;
      row.q = cell.q;
      row.seed = a.seed_base + job % per;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        GameConfig cfg = game_config(cell.n, a.p, cell.q, prop, row.seed);
        cfg.early_stop = !a.no_early_stop;
        GameRecord rec = run_game(cfg, a.maker, a.breaker);
        row.winner = rec.winner ? to_string(*rec.winner) : "none";
        row.outcome = to_string(rec.outcome);
        row.rounds = rec.rounds;
      } catch (const Error& e) {
        row.error = e.what();
      }
      row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, a.threads); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << csv_header(a.timing);
  const std::string fixed = csv_field(prop.name()) + "," + csv_field(a.maker) + "," + csv_field(a.breaker);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    int games = 0, wins = 0;
    double wall = 0;
    for (std::size_t i = 0; i < per; ++i) {
      const SweepRow& r = rows[c * per + i];
      csv << kCsvVersion << ",game," << r.n << "," << a.p << "," << r.q << "," << fixed << "," << r.seed << ","
          << r.winner << "," << r.outcome << "," << (r.error.empty() ? std::to_string(r.rounds) : "") << ",,,"
          << csv_field(r.error);
      if (a.timing) csv << "," << std::fixed << std::setprecision(3) << r.wall_ms;
      csv << "\n";
      if (r.error.empty()) {
        ++games;
        wins += r.winner == "maker";
      }
      wall += r.wall_ms;
    }
    csv << kCsvVersion << ",aggregate," << cells[c].n << "," << a.p << "," << cells[c].q << "," << fixed << ",,,,,";
    if (games > 0)
      csv << std::fixed << std::setprecision(6) << static_cast<double>(wins) / games;
    csv << "," << games << ",";
    if (a.timing) csv << "," << std::fixed << std::setprecision(3) << wall;
    csv << "\n";
  }
  if (a.out.empty())
    out << csv.str();
  else
    write_file(a.out, csv.str());
  return kOk;
}

// ---------------------------------------------------------------------------

inline constexpr int kSolveCacheVersion = 1;

struct SolveArgs {
  int n = 0, p = 1, q = 1;
  std::string property = "cycle", pattern, cache;
  bool pv = false, canonical = false;
  int threads = 1;
};

inline int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Property prop = property_from(a.property, a.pattern);
  const std::string key =
      std::to_string(a.n) + "," + std::to_string(a.p) + "," + std::to_string(a.q) + "," + prop.name();
  nlohmann::ordered_json cache = {{"version", kSolveCacheVersion}, {"code_version", kCodeVersion},
                                  {"entries", nlohmann::ordered_json::object()}};
  const bool cacheable = !a.cache.empty() && prop.kind != Property::Kind::ContainsH;
  if (cacheable) {
    std::ifstream probe(a.cache);
    if (probe) {
      auto loaded = nlohmann::ordered_json::parse(read_file(a.cache), nullptr, false);
      // A stale or foreign table is rebuilt rather than trusted.
      if (!loaded.is_discarded() && loaded.value("version", 0) == kSolveCacheVersion &&
          loaded.value("code_version", std::string()) == kCodeVersion && loaded.contains("entries"))
        cache = loaded;
    }
    if (!a.pv && cache["entries"].contains(key)) {
      const auto& e = cache["entries"][key];
      out << "winner: " << e["winner"].get<std::string>() << "\n";
      out << "nodes: " << e["nodes"].get<std::uint64_t>() << "\n";
      out << "cached: yes\n";
      return kOk;
    }
  }
  SolveOptions opts;
  opts.principal_variation = a.pv;
  opts.canonical = a.canonical;
  opts.threads = a.threads;
  SolveResult r = solve_orientation_game(a.n, a.p, a.q, prop, opts);
  out << "winner: " << to_string(r.winner) << "\n";
  out << "nodes: " << r.nodes << "\n";
  out << "memo_hits: " << r.memo_hits << "\n";
  if (a.pv)
    for (const auto& t : r.pv) {
      out << "pv: " << to_string(t.role);
      for (const Arc& arc : t.move) out << " " << arc.tail << ">" << arc.head;
      out << "\n";
    }
  if (cacheable) {
    cache["entries"][key] = {{"winner", to_string(r.winner)}, {"nodes", r.nodes}};
    write_file(a.cache, cache.dump(2) + "\n");
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct BoxArgs {
  int boxes = 0, size = 0, bias = 0;
  std::string variant = "classic";
};

inline int cmd_boxgame_solve(const BoxArgs& a, std::ostream& out) {
  const BoxVariant v = parse_box_variant(a.variant);
  BoxWinner w = solve_box_game(a.boxes, a.size, a.bias, v);
  out << "winner: " << to_string(w) << "\n";
  out << "criterion: "
      << ((v == BoxVariant::Classic ? cz_criterion(a.boxes, a.size, a.bias) : two_box_criterion(a.boxes, a.size, a.bias))
              ? "holds"
              : "fails")
      << "\n";
  BoxStrategyReport s = box_strategy_wins(a.boxes, a.size, a.bias, v);
  out << "box_maker_move: " << (s.wins ? "wins" : "loses") << "\n";
  if (!s.wins) out << "refutation: " << join(s.refutation) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

/// Every field is attempted; a field that fails reports its error and the
/// exit code reflects the worst failure.
inline int cmd_analyze(const std::string& file, std::ostream& out) {
  const Board t = Board::from_text(read_file(file));
  int code = kOk;
  auto field = [&](const char* name, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      out << name << ": unavailable (" << e.what() << ")\n";
      code = std::max(code, exit_code(e.code()));
    }
  };
  out << "n: " << t.n() << "\n";
  out << "tournament: " << (t.is_tournament() ? "yes" : "no") << "\n";
  field("fas", [&] {
    FasResult f = fas_exact(PatternGraph(t));
    out << "fas: " << f.value << "\n";
    out << "fas_ordering: " << join(f.witness.order()) << "\n";
  });
  field("strongly_connected", [&] { out << "strongly_connected: " << (is_strongly_connected(t) ? "yes" : "no") << "\n"; });
  field("hamilton_cycle", [&] {
    auto c = hamilton_cycle(t);
    out << "hamilton_cycle: " << (c ? join(*c) : std::string("none")) << "\n";
  });
  for (int k = 1; k <= 3; ++k) {
    const std::string name = "colorable_" + std::to_string(k);
    field(name.c_str(), [&] { out << name << ": " << (k_colorable(t, k) ? "yes" : "no") << "\n"; });
  }
  field("c3_count", [&] { out << "c3_count: " << count_cyclic_triangles(t) << "\n"; });
  return code;
}

// ---------------------------------------------------------------------------

struct TemplateArgs {
  int n = 0, k = 0, trials = 10000, attempts = 8;
  std::uint64_t seed = 0;
  std::string file;
};

inline int cmd_template_generate(const TemplateArgs& a, std::ostream& out) {
  const int k = a.k > 0 ? a.k : template_expansion_size(a.n);
  TemplateReport r = generate_template(a.n, a.seed, k, a.trials, a.attempts);
  if (!a.file.empty()) write_file(a.file, r.tournament.to_text());
  out << "n: " << a.n << "\nk: " << k << "\nseed_used: " << r.seed << "\nattempts: " << r.attempts << "\n";
  out << "audit_trials: " << r.audit.trials << "\naudit_failures: " << r.audit.failures << "\n";
  out << "min_ratio: " << std::fixed << std::setprecision(6) << r.audit.min_ratio << "\n";
  return kOk;
}

inline int cmd_template_verify(const TemplateArgs& a, std::ostream& out) {
  const Board t = Board::from_text(read_file(a.file));
  if (!t.is_tournament()) throw Error(Errc::NotATournament, "template file is not a tournament");
  const int k = a.k > 0 ? a.k : template_expansion_size(t.n());
  TemplateAudit audit = audit_template(t, k, a.trials, a.seed);
  out << "k: " << k << "\naudit_trials: " << audit.trials << "\naudit_failures: " << audit.failures << "\n";
  out << "min_ratio: " << std::fixed << std::setprecision(6) << audit.min_ratio << "\n";
  out << "verdict: " << (audit.ok() ? "pass" : "fail") << "\n";
  return audit.ok() ? kOk : kBadInput;
}

// ---------------------------------------------------------------------------

namespace detail {

/// `key = value` lines of a sweep spec file become flags that the command
/// line has not already set.
inline std::vector<std::string> spec_tokens(const std::string& path, const std::vector<std::string>& given) {
  std::vector<std::string> tokens;
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw Error(Errc::ParseError, path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string flag = "--" + trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    bool set = false;
    for (const auto& g : given) set = set || g == flag || g.rfind(flag + "=", 0) == 0;
    if (set) continue;
    if (value == "true")
      tokens.push_back(flag);
    else if (value != "false")
      tokens.push_back(flag + "=" + value);
  }
  return tokens;
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  for (std::size_t i = 0; i < args.size(); ++i)
    if ((args[i] == "--spec" && i + 1 < args.size()) || args[i].rfind("--spec=", 0) == 0) {
      const bool inline_value = args[i] != "--spec";
      const std::string path = inline_value ? args[i].substr(7) : args[i + 1];
      try {
        auto extra = detail::spec_tokens(path, args);
        args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + (inline_value ? 1 : 2));
        args.insert(args.end(), extra.begin(), extra.end());
      } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.code());
      }
      break;
    }

  CLI::App app{"Biased orientation games on K_n: play, sweep, solve, analyze.", "orient"};
  app.require_subcommand(1);

  PlayArgs play;
  auto* p = app.add_subcommand("play", "Play one game and write its record");
  p->add_option("--n", play.n, "Number of vertices")->required()->check(CLI::Range(1, 100000));
  p->add_option("--p", play.p, "Maker bias");
  p->add_option("--q", play.q, "Breaker bias")->required();
  p->add_option("--maker", play.maker, "Maker strategy id")->required();
  p->add_option("--breaker", play.breaker, "Breaker strategy id")->required();
  p->add_option("--property", play.property, "Maker's property");
  p->add_option("--pattern", play.pattern, "Pattern file for contains-h");
  p->add_option("--seed", play.seed, "Game seed");
  p->add_option("--max-rounds", play.max_rounds, "Round cap (0 = none)");
  p->add_flag("--no-early-stop", play.no_early_stop, "Play on after the verdict is forced");
  p->add_option("--out", play.out, "Record file (JSON)");

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Monte-Carlo sweep over n and bias, CSV output");
  s->add_option("--n", sweep.ns, "Comma-separated n values")->delimiter(',');
  s->add_option("--bias", sweep.biases, "Comma-separated Breaker biases")->delimiter(',');
  s->add_option("--bias-c", sweep.bias_c, "Comma-separated c for q = floor(c n / ln n)")->delimiter(',');
  s->add_option("--p", sweep.p, "Maker bias");
  s->add_option("--maker", sweep.maker, "Maker strategy id")->required();
  s->add_option("--breaker", sweep.breaker, "Breaker strategy id")->required();
  s->add_option("--property", sweep.property, "Maker's property");
  s->add_option("--pattern", sweep.pattern, "Pattern file for contains-h");
  s->add_option("--seeds", sweep.seeds, "Seeds per cell");
  s->add_option("--seed-base", sweep.seed_base, "First seed of every cell");
  s->add_option("--threads", sweep.threads, "Worker threads")->check(CLI::Range(1, 256));
  s->add_flag("--timing", sweep.timing, "Add a wall_ms column (not reproducible)");
  s->add_flag("--no-early-stop", sweep.no_early_stop, "Play on after the verdict is forced");
  s->add_option("--out", sweep.out, "CSV file (default stdout)");
  s->add_option("--spec", "Key = value file mirroring these flags");

  SolveArgs solve;
  auto* v = app.add_subcommand("solve", "Exact winner of a small game");
  v->add_option("--n", solve.n, "Number of vertices")->required();
  v->add_option("--p", solve.p, "Maker bias");
  v->add_option("--q", solve.q, "Breaker bias")->required();
  v->add_option("--property", solve.property, "Maker's property");
  v->add_option("--pattern", solve.pattern, "Pattern file for contains-h");
  v->add_flag("--pv", solve.pv, "Print a principal variation");
  v->add_flag("--canonical", solve.canonical, "Key positions by isomorphism class (n <= 4)");
  v->add_option("--threads", solve.threads, "Root-level workers")->check(CLI::Range(1, 256));
  v->add_option("--cache", solve.cache, "Versioned result table (JSON)");

  BoxArgs box;
  auto* b = app.add_subcommand("boxgame", "Box game tools");
  b->require_subcommand(1);
  auto* bs = b->add_subcommand("solve", "Exact winner of a uniform box game");
  bs->add_option("--boxes", box.boxes, "Box count r")->required();
  bs->add_option("--size", box.size, "Box size k")->required();
  bs->add_option("--bias", box.bias, "Box-Maker bias b")->required();
  bs->add_option("--variant", box.variant, "classic or twobox");

  std::string analyze_file;
  auto* an = app.add_subcommand("analyze", "Report FAS, connectivity, Hamiltonicity, colorability");
  an->add_option("file", analyze_file, "Tournament file")->required();

  TemplateArgs tmpl;
  auto* t = app.add_subcommand("template", "Template tournament tools");
  t->require_subcommand(1);
  auto* tg = t->add_subcommand("generate", "Generate and audit a template tournament");
  tg->add_option("--n", tmpl.n, "Number of vertices")->required();
  tg->add_option("--seed", tmpl.seed, "Seed");
  tg->add_option("--k", tmpl.k, "Set size (default ceil(n / (ln n)^0.4))");
  tg->add_option("--trials", tmpl.trials, "Sampled set pairs");
  tg->add_option("--attempts", tmpl.attempts, "Regeneration attempts");
  tg->add_option("--out", tmpl.file, "Output file");
  auto* tv = t->add_subcommand("verify", "Audit a template tournament file");
  tv->add_option("file", tmpl.file, "Tournament file")->required();
  tv->add_option("--k", tmpl.k, "Set size");
  tv->add_option("--trials", tmpl.trials, "Sampled set pairs");
  tv->add_option("--seed", tmpl.seed, "Sampling seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*p) return cmd_play(play, out);
    if (*s) return cmd_sweep(sweep, out);
    if (*v) return cmd_solve(solve, out);
    if (*bs) return cmd_boxgame_solve(box, out);
    if (*an) return cmd_analyze(analyze_file, out);
    if (*tg) return cmd_template_generate(tmpl, out);
    if (*tv) return cmd_template_verify(tmpl, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return kBadInput;
}

}  // namespace orient::cli
