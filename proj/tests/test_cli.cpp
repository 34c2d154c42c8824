#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "orient/cli.hpp"

using namespace orient;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = cli::run(std::move(args), out, err);
  return {rc, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + "orient_cli_" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = temp_path(name);
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += c;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

const std::vector<std::string> kSweep = {"sweep", "--n",     "8,10",   "--bias",  "1,2,3",         "--maker",
                                         "maker-cycle", "--breaker", "breaker-random", "--seeds", "6", "--no-early-stop"};

}  // namespace

TEST(CliPlay, PrintsSummaryAndRecord) {
  auto path = temp_path("play.json");
  auto r = run_cli({"play", "--n", "8", "--q", "2", "--maker", "maker-cycle", "--breaker", "breaker-random", "--seed", "4",
                "--out", path});
  ASSERT_EQ(r.rc, 0) << r.err;
  EXPECT_EQ(r.out.rfind("winner: maker\nrounds: ", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("outcome: "), std::string::npos);
  GameRecord rec = record_from_json(nlohmann::json::parse(slurp(path)));
  EXPECT_EQ(rec.config.n, 8);
  EXPECT_EQ(rec.maker_name, "maker-cycle");
  EXPECT_EQ(rec.winner, Role::Maker);
  std::remove(path.c_str());
}

TEST(CliPlay, RepeatIsByteIdentical) {
  auto a = temp_path("a.json"), b = temp_path("b.json");
  std::vector<std::string> base = {"play",    "--n",           "30",      "--q",     "4", "--maker", "maker-hamilton",
                                   "--breaker", "breaker-greedy-star", "--property", "hamiltonicity", "--seed", "11",
                                   "--no-early-stop", "--out"};
  auto args_a = base, args_b = base;
  args_a.push_back(a);
  args_b.push_back(b);
  auto ra = run_cli(args_a), rb = run_cli(args_b);
  ASSERT_EQ(ra.rc, 0) << ra.err;
  EXPECT_EQ(ra.out, rb.out);
  EXPECT_EQ(slurp(a), slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST(CliPlay, Errors) {
  EXPECT_EQ(run_cli({"play", "--n", "5", "--q", "1", "--maker", "nobody", "--breaker", "breaker-random"}).rc, 2);
  auto wrong_side = run_cli({"play", "--n", "5", "--q", "1", "--maker", "breaker-random", "--breaker", "breaker-random"});
  EXPECT_EQ(wrong_side.rc, 2);
  EXPECT_NE(wrong_side.err.find("UnknownStrategy"), std::string::npos);
  EXPECT_EQ(run_cli({"play", "--n", "5", "--maker", "maker-cycle", "--breaker", "breaker-random"}).rc, 2);
  EXPECT_EQ(run_cli({"play", "--n", "5", "--q", "1", "--maker", "maker-cycle", "--breaker", "breaker-random", "--property",
                 "contains-h"})
                .rc,
            2);
  EXPECT_EQ(run_cli({"frobnicate"}).rc, 2);
  EXPECT_EQ(run_cli({}).rc, 2);
}

TEST(CliPlay, MaxRoundsCaps) {
  auto r = run_cli({"play", "--n", "10", "--q", "1", "--maker", "maker-random", "--breaker", "breaker-random", "--property",
                "hamiltonicity", "--max-rounds", "2", "--no-early-stop"});
  ASSERT_EQ(r.rc, 0);
  EXPECT_EQ(r.out, "winner: none\nrounds: 2\noutcome: capped\n");
}

TEST(CliSweep, ShapeAndAggregates) {
  auto r = run_cli(kSweep);
  ASSERT_EQ(r.rc, 0) << r.err;
  auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 1u + 6u * 7u);
  EXPECT_EQ(rows[0].size(), 15u);
  EXPECT_EQ(rows[0][0], "version");
  std::map<std::pair<std::string, std::string>, std::pair<int, int>> tally;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    ASSERT_EQ(row.size(), 15u);
    EXPECT_EQ(row[0], "1");
    auto key = std::make_pair(row[2], row[4]);
    if (row[1] == "game") {
      tally[key].first += 1;
      tally[key].second += row[9] == "maker";
      EXPECT_TRUE(row[14].empty());
    } else {
      ASSERT_EQ(row[1], "aggregate");
      auto [games, wins] = tally[key];
      EXPECT_EQ(std::stoi(row[13]), games);
      EXPECT_NEAR(std::stod(row[12]), static_cast<double>(wins) / games, 1e-6);
    }
  }
  // Seeds run from seed_base within every cell.
  EXPECT_EQ(rows[1][8], "0");
  EXPECT_EQ(rows[6][8], "5");
}

TEST(CliSweep, ThreadCountDoesNotChangeOutput) {
  auto one = run_cli(kSweep);
  for (std::string t : {"2", "4"}) {
    auto args = kSweep;
    args.insert(args.end(), {"--threads", t});
    auto many = run_cli(args);
    ASSERT_EQ(many.rc, 0);
    EXPECT_EQ(one.out, many.out) << "threads " << t;
  }
  EXPECT_EQ(one.out, run_cli(kSweep).out);
}

TEST(CliSweep, BiasFormulaUsesFloor) {
  auto r = run_cli({"sweep", "--n", "50", "--bias-c", "0.5,1", "--maker", "maker-random", "--breaker", "breaker-random",
                "--seeds", "1"});
  ASSERT_EQ(r.rc, 0) << r.err;
  auto rows = csv_rows(r.out);
  // floor(0.5 * 50 / ln 50) = 6, floor(50 / ln 50) = 12.
  EXPECT_EQ(rows[1][4], "6");
  EXPECT_EQ(rows[3][4], "12");
}

TEST(CliSweep, ErrorRowsDoNotStopTheSweep) {
  auto r = run_cli({"sweep", "--n", "12,200", "--bias", "6", "--maker", "maker-greedy-attack", "--breaker", "breaker-box",
                "--seeds", "2", "--property", "hamiltonicity"});
  ASSERT_EQ(r.rc, 0) << r.err;
  auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_TRUE(rows[1][14].empty());
  EXPECT_NE(rows[4][14].find("BadConfig"), std::string::npos);
  EXPECT_EQ(rows[6][13], "0");
}

TEST(CliSweep, BadInput) {
  EXPECT_EQ(run_cli({"sweep", "--n", "8", "--maker", "maker-cycle", "--breaker", "breaker-random"}).rc, 2);
  EXPECT_EQ(run_cli({"sweep", "--n", "8", "--bias", "1", "--maker", "maker-nope", "--breaker", "breaker-random"}).rc, 2);
  EXPECT_EQ(run_cli({"sweep", "--n", "8", "--bias", "1", "--bias-c", "1", "--maker", "maker-cycle", "--breaker",
                 "breaker-random"})
                .rc,
            2);
}

TEST(CliSweep, SpecFileFillsMissingFlags) {
  auto spec = write_temp("sweep.spec", "# sweep\nn = 8,10\nbias = 1,2,3\nmaker = maker-cycle\nbreaker = breaker-random\n"
                                       "seeds = 6\nno-early-stop = true\n");
  auto r = run_cli({"sweep", "--spec", spec});
  ASSERT_EQ(r.rc, 0) << r.err;
  EXPECT_EQ(r.out, run_cli(kSweep).out);
  // Command-line flags win over the file.
  auto over = run_cli({"sweep", "--seeds", "1", "--spec=" + spec});
  EXPECT_EQ(csv_rows(over.out).size(), 1u + 6u * 2u);
  auto bad = write_temp("bad.spec", "n 8\n");
  EXPECT_EQ(run_cli({"sweep", "--spec", bad}).rc, 2);
  std::remove(spec.c_str());
  std::remove(bad.c_str());
}

TEST(CliSolve, WinnerPvAndCache) {
  auto r = run_cli({"solve", "--n", "4", "--q", "2", "--pv"});
  ASSERT_EQ(r.rc, 0) << r.err;
  EXPECT_EQ(r.out.rfind("winner: breaker\n", 0), 0u);
  EXPECT_NE(r.out.find("pv: maker "), std::string::npos);
  EXPECT_NE(r.out.find("pv: breaker "), std::string::npos);

  auto cache = temp_path("cache.json");
  std::remove(cache.c_str());
  auto first = run_cli({"solve", "--n", "4", "--q", "1", "--cache", cache});
  ASSERT_EQ(first.rc, 0);
  EXPECT_EQ(first.out.find("cached"), std::string::npos);
  auto second = run_cli({"solve", "--n", "4", "--q", "1", "--cache", cache});
  EXPECT_NE(second.out.find("cached: yes"), std::string::npos);
  EXPECT_EQ(first.out.substr(0, first.out.find("memo_hits")), second.out.substr(0, second.out.find("cached")));
  // A table from another code version is ignored.
  auto j = nlohmann::json::parse(slurp(cache));
  j["code_version"] = "older";
  std::ofstream(cache) << j.dump();
  EXPECT_EQ(run_cli({"solve", "--n", "4", "--q", "1", "--cache", cache}).out.find("cached"), std::string::npos);
  std::remove(cache.c_str());
}

TEST(CliSolve, ThreadsAgreeAndBudget) {
  auto a = run_cli({"solve", "--n", "5", "--q", "2"});
  auto b = run_cli({"solve", "--n", "5", "--q", "2", "--threads", "3"});
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), b.out.substr(0, b.out.find('\n')));
  auto big = run_cli({"solve", "--n", "6", "--q", "1"});
  EXPECT_EQ(big.rc, 3);
  EXPECT_NE(big.err.find("BudgetExceeded"), std::string::npos);
}

TEST(CliBoxgame, Solve) {
  auto r = run_cli({"boxgame", "solve", "--boxes", "4", "--size", "2", "--bias", "1"});
  ASSERT_EQ(r.rc, 0) << r.err;
  // The criterion holds here, yet optimal Breaker play wins and refutes the fixed strategy.
  EXPECT_EQ(r.out, "winner: box-breaker\ncriterion: holds\nbox_maker_move: loses\nrefutation: 0 1 2 3\n");
  auto easy = run_cli({"boxgame", "solve", "--boxes", "4", "--size", "1", "--bias", "1"});
  EXPECT_EQ(easy.out, "winner: box-maker\ncriterion: holds\nbox_maker_move: wins\n");
  auto two = run_cli({"boxgame", "solve", "--boxes", "2", "--size", "2", "--bias", "1", "--variant", "twobox"});
  EXPECT_EQ(two.rc, 0);
  EXPECT_NE(two.out.find("criterion: fails"), std::string::npos);
  EXPECT_EQ(run_cli({"boxgame", "solve", "--boxes", "9", "--size", "2", "--bias", "1"}).rc, 3);
  EXPECT_EQ(run_cli({"boxgame", "solve", "--boxes", "2", "--size", "2", "--bias", "1", "--variant", "x"}).rc, 2);
}

TEST(CliAnalyze, Triangle) {
  auto f = write_temp("tri.txt", "n=3\n0>1\n1>2\n2>0\n");
  auto r = run_cli({"analyze", f});
  ASSERT_EQ(r.rc, 0) << r.err;
  EXPECT_NE(r.out.find("tournament: yes\n"), std::string::npos);
  EXPECT_NE(r.out.find("fas: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("strongly_connected: yes\n"), std::string::npos);
  EXPECT_NE(r.out.find("colorable_1: no\n"), std::string::npos);
  EXPECT_NE(r.out.find("colorable_2: yes\n"), std::string::npos);
  EXPECT_NE(r.out.find("c3_count: 1\n"), std::string::npos);
  std::remove(f.c_str());
}

TEST(CliAnalyze, PartialBoardReportsPerField) {
  auto f = write_temp("part.txt", "n=3\n0>1\n");
  auto r = run_cli({"analyze", f});
  EXPECT_EQ(r.rc, 2);
  EXPECT_NE(r.out.find("tournament: no\n"), std::string::npos);
  EXPECT_NE(r.out.find("unavailable"), std::string::npos);
  EXPECT_EQ(run_cli({"analyze", temp_path("missing.txt")}).rc, 2);
  std::remove(f.c_str());
}

TEST(CliTemplate, GenerateThenVerify) {
  auto f = temp_path("tstar.txt");
  auto g = run_cli({"template", "generate", "--n", "40", "--seed", "3", "--k", "8", "--trials", "300", "--out", f});
  ASSERT_EQ(g.rc, 0) << g.err;
  EXPECT_NE(g.out.find("audit_failures: 0\n"), std::string::npos);
  auto v = run_cli({"template", "verify", f, "--k", "8", "--trials", "300"});
  ASSERT_EQ(v.rc, 0) << v.err;
  EXPECT_NE(v.out.find("verdict: pass\n"), std::string::npos);
  auto again = temp_path("tstar2.txt");
  run_cli({"template", "generate", "--n", "40", "--seed", "3", "--k", "8", "--trials", "300", "--out", again});
  EXPECT_EQ(slurp(f), slurp(again));
  std::remove(f.c_str());
  std::remove(again.c_str());
}
