#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace hyperlab;

namespace {

using HT = Topology<HyperSet>;
using PT = Topology<PointSet>;

// Fixture A's hyperspace on member indices m0 = {0}, m1 = {1}, m01 = {0,1}.
HT fixture_a_hyper() { return generate_topology(3, std::vector<HyperSet>{{0, 2}, {1, 2}}); }

// Fixture C's hyperspace: nested opens ∅ ⊂ {X} ⊂ {X,{1,2}} ⊂ M.
HT fixture_c_hyper() { return generate_topology(3, std::vector<HyperSet>{{2}, {1, 2}}); }

PT random_topology(std::mt19937_64& rng, unsigned n) {
  std::vector<PointSet> sb;
  std::uniform_int_distribution<int> count(0, 5);
  for (int i = count(rng); i > 0; --i) sb.push_back(fixtures::random_subset(rng, n));
  return generate_topology(n, sb);
}

}  // namespace

TEST(GenerateTopology, Examples) {
  EXPECT_EQ(generate_topology(2, std::vector<PointSet>{{0}, {1}}).opens().size(), 4U);
  EXPECT_EQ(fixture_a_hyper().opens(), (Family<HyperSet>{{}, {2}, {0, 2}, {1, 2}, {0, 1, 2}}));
  EXPECT_EQ(generate_topology(3, std::vector<PointSet>{}).opens(), (SetFamily{{}, {0, 1, 2}}));
}

TEST(GenerateTopology, MatchesOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + trial % 5;
    std::vector<PointSet> sb;
    for (int i = 0; i < trial % 6; ++i) sb.push_back(fixtures::random_subset(rng, n));
    std::vector<oracle::Set> osb;
    for (PointSet s : sb) osb.push_back(oracle::to_set(s));
    const PT t = generate_topology(n, sb);
    const oracle::Fam want = oracle::generate(static_cast<int>(n), osb);
    ASSERT_EQ(oracle::to_fam(t.opens()), want);
    ASSERT_TRUE(oracle::is_topology(oracle::to_fam(t.opens()), static_cast<int>(n)));
    for (PointSet b : t.base()) ASSERT_TRUE(t.is_open(b));
    for (PointSet o : t.opens()) {
      PointSet u;
      for (PointSet b : t.base()) {
        if (b.subset_of(o)) u |= b;
      }
      ASSERT_EQ(u, o);
    }
    // Regenerating from the minimal base gives the same opens.
    ASSERT_EQ(generate_topology(n, minimal_base(t)), t);
  }
}

TEST(FromOpens, RejectsNonTopologies) {
  EXPECT_THROW(PT::from_opens(2, SetFamily{{0}, {0, 1}}), Error);
  EXPECT_THROW(PT::from_opens(2, SetFamily{{}, {0}, {1}}), Error);
  EXPECT_NO_THROW(PT::from_opens(2, SetFamily{{}, {0}, {0, 1}}));
}

TEST(Closure, Examples) {
  const HT a = fixture_a_hyper();
  EXPECT_EQ(a.closure(HyperSet{2}), (HyperSet{0, 1, 2}));
  EXPECT_EQ(a.closure(HyperSet{}), HyperSet{});
  EXPECT_EQ(a.closure(HyperSet{0}), HyperSet{0});
  EXPECT_EQ(a.interior(HyperSet{0, 2}), (HyperSet{0, 2}));
  EXPECT_EQ(a.interior(HyperSet{0, 1}), HyperSet{});
}

// Kuratowski laws and agreement with the oracle, exhaustive on carriers ≤ 4.
TEST(Closure, KuratowskiLawsExhaustive) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const PT& t : enumerate_topologies<PointSet>(n)) {
      const oracle::Fam opens = oracle::to_fam(t.opens());
      ASSERT_EQ(closure(t, PointSet{}), PointSet{});
      for_each_subset(t.carrier(), [&](PointSet a) {
        const PointSet ca = t.closure(a);
        ASSERT_EQ(oracle::to_set(ca), oracle::closure(opens, static_cast<int>(n), oracle::to_set(a)));
        ASSERT_EQ(oracle::to_set(interior(t, a)), oracle::interior(opens, oracle::to_set(a)));
        ASSERT_TRUE(a.subset_of(ca));
        ASSERT_EQ(t.closure(ca), ca);
        ASSERT_TRUE(t.is_closed(ca));
        for_each_subset(t.carrier(), [&](PointSet b) {
          ASSERT_EQ(t.closure(a | b), ca | t.closure(b));
          if (a.subset_of(b)) { ASSERT_TRUE(ca.subset_of(t.closure(b))); }
        });
      });
    }
  }
}

TEST(Separation, Examples) {
  EXPECT_EQ(separation(discrete_topology<PointSet>(2)), (Separation{true, true, true}));
  EXPECT_EQ(separation(indiscrete_topology<PointSet>(2)), (Separation{false, false, false}));
  EXPECT_EQ(separation(fixture_c_hyper()), (Separation{true, false, false}));
}

TEST(Separation, MatchesOracle) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const PT& t : enumerate_topologies<PointSet>(n)) {
      const oracle::Fam opens = oracle::to_fam(t.opens());
      const int k = static_cast<int>(n);
      const Separation s = separation(t);
      ASSERT_EQ(s.t0, oracle::t0(opens, k));
      ASSERT_EQ(s.t1, oracle::t1(opens, k));
      ASSERT_EQ(s.t2, oracle::t2(opens, k));
      ASSERT_EQ(is_connected(t), oracle::connected(opens, k));
    }
  }
}

TEST(Connected, Examples) {
  EXPECT_TRUE(is_connected(indiscrete_topology<PointSet>(3)));
  EXPECT_FALSE(is_connected(discrete_topology<PointSet>(2)));
  EXPECT_TRUE(is_connected(fixture_a_hyper()));
}

TEST(Dense, Examples) {
  const PT d = discrete_topology<PointSet>(3);
  EXPECT_TRUE(is_dense(d, d.carrier()));
  EXPECT_TRUE(is_dense(fixture_a_hyper(), HyperSet{2}));
  EXPECT_FALSE(is_dense(d, PointSet{0, 1}));
}

TEST(Weight, Examples) {
  EXPECT_EQ(minimal_base(discrete_topology<PointSet>(3)), (SetFamily{{0}, {1}, {2}}));
  EXPECT_EQ(weight(discrete_topology<PointSet>(4)), 4U);
  EXPECT_EQ(minimal_base(fixture_a_hyper()), (Family<HyperSet>{{2}, {0, 2}, {1, 2}}));
  EXPECT_EQ(weight(fixture_a_hyper()), 3U);
  EXPECT_EQ(minimal_base(indiscrete_topology<PointSet>(3)), (SetFamily{{0, 1, 2}}));
  EXPECT_EQ(weight(indiscrete_topology<PointSet>(3)), 1U);
}

// No base is smaller than the minimal base (search over all subfamilies).
TEST(Weight, MinimalAgainstSearch) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const PT& t : enumerate_topologies<PointSet>(n)) {
      ASSERT_EQ(weight(t), oracle::weight(oracle::to_fam(t.opens())));
    }
  }
}

TEST(Compact, Examples) {
  const auto d = is_compact_certified(discrete_topology<PointSet>(3));
  EXPECT_TRUE(d.compact);
  EXPECT_EQ(SetFamily(d.subcover), (SetFamily{{0}, {1}, {2}}));
  const HT a = fixture_a_hyper();
  const auto c = is_compact_certified(a);
  EXPECT_TRUE(c.compact);
  EXPECT_TRUE(Family<HyperSet>(c.subcover).subset_of(minimal_base(a)));
  EXPECT_EQ(Family<HyperSet>(c.subcover).union_all(), a.carrier());
}

TEST(DenseIntersection, Examples) {
  EXPECT_TRUE(dense_intersection_holds(fixture_a_hyper()));
  EXPECT_TRUE(dense_intersection_holds(discrete_topology<PointSet>(3)));
  EXPECT_TRUE(dense_intersection_holds(fixture_c_hyper()));
}

TEST(EnumerateTopologies, CountsMatchOracle) {
  EXPECT_EQ(enumerate_topologies<PointSet>(1).size(), oracle::count_topologies(1));
  EXPECT_EQ(enumerate_topologies<PointSet>(2).size(), oracle::count_topologies(2));
  EXPECT_EQ(enumerate_topologies<PointSet>(3).size(), oracle::count_topologies(3));
  EXPECT_EQ(enumerate_topologies<PointSet>(4).size(), oracle::count_topologies(4));
  EXPECT_EQ(enumerate_topologies<PointSet>(3).size(), 29U);
  EXPECT_EQ(enumerate_topologies<PointSet>(4).size(), 355U);
  EXPECT_THROW(enumerate_topologies<PointSet>(6), Error);
}

TEST(Continuity, MatchesOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned n = 1 + trial % 4;
    const PT s = random_topology(rng, n);
    const PT t = random_topology(rng, n);
    std::vector<std::size_t> table(n);
    std::vector<int> otable(n);
    std::uniform_int_distribution<unsigned> pick(0, n - 1);
    for (unsigned x = 0; x < n; ++x) otable[x] = static_cast<int>(table[x] = pick(rng));
    ASSERT_EQ(maps_continuously(s, t, table),
              oracle::continuous(otable, oracle::to_fam(s.opens()), oracle::to_fam(t.opens())));
  }
}

TEST(Embedding, Examples) {
  const PT d2 = discrete_topology<PointSet>(2);
  const PT d3 = discrete_topology<PointSet>(3);
  EXPECT_TRUE(is_embedding(d2, d3, {0, 2}));
  EXPECT_FALSE(is_embedding(d2, d3, {1, 1}));
  // Discrete into indiscrete is continuous and injective but not open onto its image.
  EXPECT_FALSE(is_embedding(d2, indiscrete_topology<PointSet>(3), {0, 1}));
}
