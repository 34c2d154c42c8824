#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "orient/oracles.hpp"

using namespace orient;

namespace {

Board cyclic_triangle() {
  Board b(3);
  b.orient(0, 1);
  b.orient(1, 2);
  b.orient(2, 0);
  return b;
}

bool cycle_is_simple_in(const Board& b, const Cycle& c) { return is_valid_cycle(b, c); }

}  // namespace

TEST(FindCycle, Basics) {
  auto c = find_cycle(cyclic_triangle());
  ASSERT_TRUE(c);
  EXPECT_EQ(c->size(), 3u);
  for (int n = 1; n <= 9; ++n) EXPECT_FALSE(find_cycle(transitive_tournament(n)));
}

TEST(FindCycle, UniqueCyclicTripleOnFive) {
  // Transitive order with one reversed arc 0<-2 produces exactly one cyclic triple.
  Board b(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      if (i == 0 && j == 2)
        b.orient(2, 0);
      else if (!(i == 1 && j == 2) && !(i == 0 && j == 1))
        b.orient(i, j);
    }
  b.orient(0, 1);
  b.orient(1, 2);
  // Find the unique cyclic triple by brute force over all C(5,3) triples.
  int count = 0;
  std::vector<int> unique;
  for (int a = 0; a < 5; ++a)
    for (int x = a + 1; x < 5; ++x)
      for (int y = x + 1; y < 5; ++y) {
        bool cyc = (b.has_arc(a, x) && b.has_arc(x, y) && b.has_arc(y, a)) ||
                   (b.has_arc(a, y) && b.has_arc(y, x) && b.has_arc(x, a));
        if (cyc) {
          ++count;
          unique = {a, x, y};
        }
      }
  ASSERT_EQ(count, 1);
  auto c = find_cycle(b);
  ASSERT_TRUE(c);
  std::vector<int> got = *c;
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, unique);
}

TEST(FindCycle, AgreesWithKahn) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Board b = brute::random_oriented(n, 0.2 + 0.1 * static_cast<double>(trial % 8), rng);
    auto c = find_cycle(b);
    ASSERT_EQ(!c.has_value(), brute::acyclic(b)) << b.to_text();
    if (c) {
      ASSERT_TRUE(cycle_is_simple_in(b, *c));
      if (b.is_tournament()) {
        ASSERT_EQ(c->size(), 3u);
      }
    }
  }
}

TEST(StrongConnectivity, Basics) {
  EXPECT_TRUE(is_strongly_connected(cyclic_triangle()));
  EXPECT_TRUE(is_strongly_connected(Board(1)));
  for (int n = 2; n < 8; ++n) EXPECT_FALSE(is_strongly_connected(transitive_tournament(n)));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    Board b = brute::random_oriented(1 + static_cast<int>(rng() % 9), 0.7, rng);
    ASSERT_EQ(is_strongly_connected(b), brute::strongly_connected(b));
  }
}

TEST(HamiltonCycle, ExhaustiveSmall) {
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t total = 1ULL << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < total; ++m) {
      Board t = tournament_from_mask(n, m);
      auto h = hamilton_cycle(t);
      bool strong = brute::strongly_connected(t);
      ASSERT_EQ(h.has_value(), strong);
      ASSERT_EQ(brute::has_hamilton_cycle(t), strong);
      if (h) {
        ASSERT_EQ(static_cast<int>(h->size()), n);
        ASSERT_TRUE(n == 1 || is_valid_cycle(t, *h));
      }
    }
  }
}

TEST(HamiltonCycle, RandomSixSeven) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 6 + trial % 2;
    Board t = brute::random_tournament(n, rng);
    auto h = hamilton_cycle(t);
    ASSERT_EQ(h.has_value(), brute::has_hamilton_cycle(t));
    if (h) {
      ASSERT_TRUE(is_valid_cycle(t, *h) && static_cast<int>(h->size()) == n);
    }
  }
}

TEST(HamiltonCycle, LargeStrong) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    Board t = brute::random_tournament(150, rng);
    auto h = hamilton_cycle(t);
    ASSERT_EQ(h.has_value(), is_strongly_connected(t));
    if (h) {
      ASSERT_TRUE(is_valid_cycle(t, *h) && h->size() == 150u);
    }
  }
}

TEST(HamiltonCycle, RejectsPartial) { EXPECT_THROW(hamilton_cycle(Board(3)), Error); }

TEST(ExtractCk, Basics) {
  Board t = cyclic_triangle();
  EXPECT_EQ(extract_ck(t, {0, 1, 2}, 3), (Cycle{0, 1, 2}));

  // 5-cycle v1..v5 = 0..4 with chord v3 -> v1.
  Board b(5);
  for (int i = 0; i < 5; ++i) b.orient(i, (i + 1) % 5);
  b.orient(2, 0);
  b.orient(1, 3);
  b.orient(4, 1);
  b.orient(2, 4);
  b.orient(3, 0);
  ASSERT_TRUE(b.is_tournament());
  EXPECT_EQ(extract_ck(b, {0, 1, 2, 3, 4}, 3), (Cycle{0, 1, 2}));
}

TEST(ExtractCk, Errors) {
  Board b(5);
  for (int i = 0; i < 5; ++i) b.orient(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (b.is_undirected(i, j)) b.orient(i, j);
  auto code = [&](const Cycle& c, int k) {
    try {
      extract_ck(b, c, k);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  EXPECT_EQ(code({0, 1, 2, 3, 4}, 4), Errc::BadLength);
  EXPECT_EQ(code({0, 2, 1, 3, 4}, 3), Errc::InvalidCycle);
}

TEST(ExtractCk, RandomFourFromSix) {
  std::mt19937_64 rng(6);
  int done = 0;
  while (done < 200) {
    Board t = brute::random_tournament(8, rng);
    auto six = find_cycle_of_length(t, 6);
    if (!six) continue;
    ++done;
    Cycle c4 = extract_ck(t, *six, 4);
    ASSERT_EQ(c4.size(), 4u);
    ASSERT_TRUE(is_valid_cycle(t, c4));
    ASSERT_TRUE(brute::has_cycle_of_length(t, 4));
  }
}

TEST(FindCycleOfLength, AgreesWithBrute) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    Board b = brute::random_oriented(n, 0.8, rng);
    int k = 3 + static_cast<int>(rng() % (n - 2));
    auto c = find_cycle_of_length(b, k);
    ASSERT_EQ(c.has_value(), brute::has_cycle_of_length(b, k));
    if (c) {
      ASSERT_TRUE(is_valid_cycle(b, *c) && static_cast<int>(c->size()) == k);
    }
  }
}

TEST(LongestPath, Basics) {
  Board b(3);
  b.orient(0, 1);
  EXPECT_EQ(longest_path_exact(b), (Path{0, 1}));
  EXPECT_EQ(longest_path_exact(transitive_tournament(5)), (Path{0, 1, 2, 3, 4}));
  EXPECT_THROW(longest_path_exact(Board(21)), Error);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    Board g = brute::random_oriented(1 + static_cast<int>(rng() % 8), 0.5, rng);
    Path p = longest_path_exact(g);
    ASSERT_TRUE(is_valid_path(g, p));
    ASSERT_EQ(static_cast<int>(p.size()), brute::longest_path_vertices(g));
  }
}

TEST(Fas, WithOrdering) {
  // Rotations of 0->1->2 leave one back arc, reversed rotations two.
  PatternGraph c3 = cycle_pattern(3);
  std::vector<int> order{0, 1, 2};
  int ones = 0, twos = 0;
  do {
    int back = fas_with_ordering(c3, OrderingSigma::from_order(order));
    ones += back == 1;
    twos += back == 2;
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(ones, 3);
  EXPECT_EQ(twos, 3);
  EXPECT_EQ(fas_with_ordering(PatternGraph(transitive_tournament(5)), OrderingSigma::identity(5)), 0);
  EXPECT_THROW(PatternGraph(2, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(fas_with_ordering(c3, OrderingSigma::identity(4)), Error);
}

TEST(Fas, ExactBasics) {
  auto r = fas_exact(cycle_pattern(3));
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(fas_with_ordering(cycle_pattern(3), r.witness), 1);
  PatternGraph dag(4, {{2, 0}, {0, 3}, {2, 1}});
  auto d = fas_exact(dag);
  EXPECT_EQ(d.value, 0);
  EXPECT_EQ(fas_with_ordering(dag, d.witness), 0);
  EXPECT_THROW(fas_exact(PatternGraph(Board(13))), Error);
}

TEST(Fas, ExhaustiveTournamentsUpToFive) {
  for (int t = 1; t <= 5; ++t) {
    std::uint64_t total = 1ULL << (t * (t - 1) / 2);
    for (std::uint64_t m = 0; m < total; ++m) {
      PatternGraph h(tournament_from_mask(t, m));
      auto r = fas_exact(h);
      ASSERT_EQ(r.value, brute::fas_by_permutations(h));
      ASSERT_EQ(fas_with_ordering(h, r.witness), r.value);
      ASSERT_LE(r.value, t * (t - 1) / 4);
    }
  }
}

TEST(Fas, RandomPatterns) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    PatternGraph h = brute::random_pattern(7, 0.7, rng);
    ASSERT_EQ(fas_exact(h).value, brute::fas_by_permutations(h));
  }
}

TEST(Fas, CompleteFas1) {
  PatternGraph c3 = cycle_pattern(3);
  PatternGraph done = complete_fas1(c3);
  EXPECT_TRUE(done.graph().is_tournament());
  EXPECT_EQ(done.arc_count(), 3u);

  PatternGraph with_d(4, {{0, 1}, {1, 2}, {2, 0}});
  PatternGraph h2 = complete_fas1(with_d, OrderingSigma::identity(4));
  EXPECT_TRUE(h2.has_arc(0, 3) && h2.has_arc(1, 3) && h2.has_arc(2, 3));
  EXPECT_EQ(fas_exact(h2).value, 1);

  EXPECT_THROW(complete_fas1(PatternGraph(transitive_tournament(3))), Error);

  std::mt19937_64 rng(15);
  int seen = 0;
  while (seen < 100) {
    PatternGraph h = brute::random_pattern(3 + static_cast<int>(rng() % 4), 0.6, rng);
    if (fas_exact(h).value != 1) continue;
    ++seen;
    PatternGraph full = complete_fas1(h);
    ASSERT_TRUE(full.graph().is_tournament());
    ASSERT_EQ(brute::fas_by_permutations(full), 1);
    for (const Arc& a : h.arcs()) ASSERT_TRUE(full.has_arc(a.tail, a.head));
  }
}

TEST(Embedding, Basics) {
  EXPECT_TRUE(contains_embedding(cyclic_triangle(), cycle_pattern(3)));
  EXPECT_FALSE(contains_embedding(transitive_tournament(6), cycle_pattern(3)));
  EXPECT_FALSE(contains_embedding(Board(2), cycle_pattern(3)));
}

TEST(Embedding, AgreesWithInjectionEnumeration) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 800; ++trial) {
    PatternGraph h = brute::random_pattern(4, 0.4 + 0.1 * static_cast<double>(trial % 6), rng);
    Board t = brute::random_tournament(6, rng);
    auto phi = contains_embedding(t, h);
    ASSERT_EQ(phi.has_value(), brute::embeds(t, h));
    if (!phi) continue;
    for (const Arc& a : h.arcs()) {
      ASSERT_TRUE(t.has_arc((*phi)[static_cast<std::size_t>(a.tail)], (*phi)[static_cast<std::size_t>(a.head)]));
    }
  }
}

TEST(Embedding, MonotoneUnderArcDeletion) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    PatternGraph big = brute::random_pattern(5, 0.7, rng);
    auto arcs = big.arcs();
    std::vector<Arc> kept;
    for (const Arc& a : arcs)
      if (rng() & 1U) kept.push_back(a);
    PatternGraph small(5, kept);
    Board t = brute::random_tournament(7, rng);
    if (contains_embedding(t, big)) {
      ASSERT_TRUE(contains_embedding(t, small));
    }
  }
}

TEST(Coloring, Basics) {
  EXPECT_FALSE(k_colorable(cyclic_triangle(), 1));
  auto parts = k_colorable(cyclic_triangle(), 2);
  ASSERT_TRUE(parts);
  ASSERT_EQ(parts->size(), 2u);
  EXPECT_EQ((*parts)[0], VertexSet(3, {0, 1}));
  EXPECT_EQ((*parts)[1], VertexSet(3, {2}));
  EXPECT_TRUE(is_transitive(transitive_tournament(7)));
  EXPECT_THROW(k_colorable(Board(3), 1), Error);
  EXPECT_THROW(k_colorable(transitive_tournament(16), 2), Error);
}

TEST(Coloring, ExhaustiveAgreement) {
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t total = 1ULL << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < total; ++m) {
      Board t = tournament_from_mask(n, m);
      for (int k = 1; k <= 2; ++k) {
        auto parts = k_colorable(t, k);
        ASSERT_EQ(parts.has_value(), brute::colorable(t, k));
        if (!parts) continue;
        VertexSet all(n);
        for (const auto& p : *parts) {
          ASSERT_FALSE(all.intersects(p));
          all |= p;
          std::uint32_t mask = 0;
          p.for_each([&](int v) { mask |= 1U << v; });
          ASSERT_TRUE(brute::transitive_subset(t, mask));
        }
        ASSERT_EQ(all.size(), n);
      }
    }
  }
}

TEST(Expansion, Basics) {
  // Degrees are fine but {0} -> {2} has no arc, so the pair condition fails.
  auto tri = is_k_expanding(cyclic_triangle(), 1);
  EXPECT_FALSE(tri.expanding);
  ASSERT_TRUE(tri.witness_b);
  EXPECT_EQ(*tri.witness_a, VertexSet(3, {0}));
  EXPECT_EQ(*tri.witness_b, VertexSet(3, {2}));
  Board c5(5);
  for (int i = 0; i < 5; ++i) {
    c5.orient(i, (i + 1) % 5);
    c5.orient(i, (i + 2) % 5);
  }
  EXPECT_FALSE(is_k_expanding(c5, 1).expanding);  // singletons see one direction only
  EXPECT_TRUE(is_k_expanding(c5, 2).expanding);
  auto r = is_k_expanding(transitive_tournament(4), 1);
  EXPECT_FALSE(r.expanding);
  ASSERT_TRUE(r.witness_a);
  EXPECT_EQ(*r.witness_a, VertexSet(4, {0}));
}

TEST(Expansion, ImpliesStrongConnectivity) {
  std::mt19937_64 rng(18);
  int expanding = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Board b = brute::random_oriented(n, 0.75 + 0.05 * static_cast<double>(trial % 5), rng);
    for (int k = 1; k <= n / 2 + 1; ++k) {
      auto r = is_k_expanding(b, k);
      if (!r.expanding) continue;
      ++expanding;
      ASSERT_TRUE(brute::strongly_connected(b)) << b.to_text() << " k=" << k;
    }
  }
  EXPECT_GT(expanding, 100);
}

TEST(Expansion, WitnessesAreGenuine) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 4 + static_cast<int>(rng() % 8);
    Board b = brute::random_tournament(n, rng);
    int k = 1 + static_cast<int>(rng() % (n / 2));
    for (auto r : {is_k_expanding(b, k), is_k_expanding_sampled(b, k, 200, trial)}) {
      if (r.expanding) continue;
      ASSERT_TRUE(r.witness_a);
      if (r.witness_b) {
        ASSERT_FALSE(r.witness_a->intersects(*r.witness_b));
        r.witness_a->for_each([&](int u) { r.witness_b->for_each([&](int v) { ASSERT_FALSE(b.has_arc(u, v)); }); });
      } else {
        ASSERT_TRUE(b.out_set(*r.witness_a).empty() || b.in_set(*r.witness_a).empty());
      }
    }
    // One-sided: sampled false implies exact false.
    if (!is_k_expanding_sampled(b, k, 100, trial).expanding) {
      ASSERT_FALSE(is_k_expanding(b, k).expanding);
    }
  }
}
