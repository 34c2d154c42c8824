#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "orient/board.hpp"

using namespace orient;

TEST(Board, NewBoardCounts) {
  EXPECT_EQ(Board(3).undirected_count(), 3u);
  EXPECT_EQ(Board(1).pair_count(), 0u);
  EXPECT_TRUE(Board(1).is_tournament());
  EXPECT_EQ(Board(5).undirected_count(), 10u);
  EXPECT_FALSE(Board(3).is_tournament());
}

TEST(Board, RejectsEmpty) {
  try {
    Board b(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidArgument);
  }
}

TEST(Board, OrientIsWriteOnce) {
  Board b(3);
  b.orient(0, 1);
  EXPECT_EQ(b.pair_state(0, 1), PairState::Forward);
  EXPECT_EQ(b.undirected_count(), 2u);
  auto code_of = [&](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  EXPECT_EQ(code_of([&] { b.orient(0, 1); }), Errc::AlreadyOriented);
  EXPECT_EQ(code_of([&] { b.orient(1, 0); }), Errc::AlreadyOriented);
  EXPECT_EQ(code_of([&] { b.orient(2, 2); }), Errc::SelfLoop);
  EXPECT_EQ(code_of([&] { b.orient(0, 3); }), Errc::OutOfRange);
  EXPECT_EQ(b.pair_state(0, 1), PairState::Forward);
  EXPECT_EQ(b.pair_state(1, 0), PairState::Backward);
}

TEST(Board, Neighbourhoods) {
  Board cyc(3);
  cyc.orient(0, 1);
  cyc.orient(1, 2);
  cyc.orient(2, 0);
  VertexSet a(3, {0});
  EXPECT_EQ(cyc.out_set(a), VertexSet(3, {1}));
  EXPECT_EQ(cyc.in_set(a), VertexSet(3, {2}));
  EXPECT_TRUE(cyc.out_set(VertexSet::full(3)).empty());

  Board tr = transitive_tournament(3);
  VertexSet sink(3, {2});
  EXPECT_TRUE(tr.out_set(sink).empty());
  EXPECT_EQ(tr.in_set(sink), VertexSet(3, {0, 1}));
}

TEST(Board, UndirectedPairsCanonicalOrder) {
  auto pairs = Board(4).undirected_pairs();
  ASSERT_EQ(pairs.size(), 6u);
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    EXPECT_LT(pairs[i].tail, pairs[i].head);
    EXPECT_TRUE(std::make_pair(pairs[i - 1].tail, pairs[i - 1].head) < std::make_pair(pairs[i].tail, pairs[i].head));
  }
  EXPECT_TRUE(transitive_tournament(4).undirected_pairs().empty());
}

TEST(Board, RandomInvariants) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 70);
    Board b = brute::random_oriented(n, 0.5, rng);
    std::size_t undirected = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (b.is_undirected(u, v)) ++undirected;
    ASSERT_EQ(undirected, b.undirected_count());
    ASSERT_EQ(b.undirected_pairs().size(), undirected);

    int deg_sum = 0;
    for (int v = 0; v < n; ++v) deg_sum += b.in_degree(v) + b.out_degree(v);
    ASSERT_EQ(deg_sum, 2 * static_cast<int>(b.oriented_count()));

    // Arcs from A to B counted from both ends.
    VertexSet a(n), bs(n);
    for (int v = 0; v < n; ++v) {
      auto r = rng() % 3;
      if (r == 0) a.insert(v);
      if (r == 1) bs.insert(v);
    }
    int via_out = 0, via_in = 0;
    a.for_each([&](int u) { via_out += (b.out_neighbors(u) & bs).size(); });
    bs.for_each([&](int v) { via_in += (b.in_neighbors(v) & a).size(); });
    ASSERT_EQ(via_out, via_in);

    VertexSet expect_out(n);
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w)
        if (a.contains(u) && !a.contains(w) && b.has_arc(u, w)) expect_out.insert(w);
    ASSERT_EQ(b.out_set(a), expect_out);
  }
}

TEST(Board, TournamentDegreeSum) {
  std::mt19937_64 rng(3);
  for (int n = 1; n < 40; ++n) {
    Board t = brute::random_tournament(n, rng);
    ASSERT_TRUE(t.is_tournament());
    for (int v = 0; v < n; ++v) ASSERT_EQ(t.in_degree(v) + t.out_degree(v), n - 1);
  }
}

TEST(Board, ReplayIsBitIdentical) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 30);
    Board a(n), b(n);
    auto pairs = a.undirected_pairs();
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(pairs.size() / 2);
    for (auto& p : pairs)
      if (rng() & 1U) std::swap(p.tail, p.head);
    for (const auto& p : pairs) a.orient(p);
    for (const auto& p : pairs) b.orient(p);
    ASSERT_TRUE(a == b);
    ASSERT_EQ(a.digest(), b.digest());
    ASSERT_EQ(a.encode_base3(), b.encode_base3());
  }
}

TEST(Board, Base3KeyIsInjective) {
  // All 3^6 boards on n=4 get distinct keys.
  std::vector<std::uint64_t> keys;
  for (int code = 0; code < 729; ++code) {
    Board b(4);
    int c = code;
    for (std::size_t i = 0; i < 6; ++i, c /= 3) {
      Arc p = b.pair_at(i);
      if (c % 3 == 1) b.orient(p.tail, p.head);
      if (c % 3 == 2) b.orient(p.head, p.tail);
    }
    keys.push_back(b.key());
  }
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(std::unique(keys.begin(), keys.end()), keys.end());
}

TEST(Board, TextRoundTrip) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 15);
    Board b = brute::random_oriented(n, 0.6, rng);
    Board back = Board::from_text(b.to_text());
    ASSERT_TRUE(b == back);
  }
  EXPECT_EQ(Board::from_text("n=3\n# comment\n0>1\n1>2\n").arcs().size(), 2u);
  EXPECT_THROW(Board::from_text("n=3\n0>0\n"), Error);
  EXPECT_THROW(Board::from_text("m=3\n"), Error);
  EXPECT_THROW(Board::from_text("n=3\n0-1\n"), Error);
}

TEST(Board, Relabel) {
  Board b(3);
  b.orient(0, 1);
  std::vector<int> perm{2, 0, 1};
  Board r = b.relabeled(perm);
  EXPECT_TRUE(r.has_arc(2, 0));
  EXPECT_EQ(r.oriented_count(), 1u);
}

TEST(VertexSetOps, Basics) {
  VertexSet s(130, {0, 64, 129});
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.complement().size(), 127);
  VertexSet t(130, {64});
  EXPECT_TRUE(t.is_subset_of(s));
  EXPECT_EQ((s - t).size(), 2);
  EXPECT_TRUE(s.intersects(t));
  EXPECT_EQ(s.members(), (std::vector<int>{0, 64, 129}));
}
