#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace hyperlab;

namespace {

const SetFamily kVB{{0, 1}, {1, 2}};

SetFamily random_family(std::mt19937_64& rng, unsigned n, int max_size, bool allow_empty) {
  std::uniform_int_distribution<int> count(0, max_size);
  std::uniform_int_distribution<std::uint32_t> bits(allow_empty ? 0 : 1, (1U << n) - 1);
  std::vector<PointSet> out;
  for (int i = count(rng); i > 0; --i) out.emplace_back(bits(rng));
  return SetFamily(std::move(out));
}

void expect_valid_witness(const CoverWitness& w, const Model& m) {
  PointSet reached;
  for (const SetFamily& t : w.tuples) {
    ASSERT_FALSE(t.empty());
    PointSet meet = m.ground();
    HyperSet hits = m.all_members();
    for (PointSet f : t) {
      meet &= f;
      hits &= lower_hit(f, m);
    }
    ASSERT_TRUE(meet.subset_of(w.target));
    ASSERT_TRUE(hits.subset_of(lower_hit(w.target, m)));
    reached |= meet;
  }
  ASSERT_EQ(reached, w.target);
}

}  // namespace

TEST(AdmissibleTuples, Examples) {
  const Model b = fixtures::b();
  EXPECT_TRUE(admissible_tuples(PointSet{1}, kVB, b).empty());
  const Model a = fixtures::a();
  EXPECT_EQ(admissible_tuples(PointSet{0, 1}, SetFamily{{0}, {1}}, a).size(), 3U);
  EXPECT_TRUE(admissible_tuples(PointSet{}, kVB, b).empty());
}

TEST(IsMCovered, Examples) {
  const Model b = fixtures::b();
  EXPECT_FALSE(is_m_covered(PointSet{1}, kVB, b).covered);
  const CoverResult x = is_m_covered(b.ground(), kVB, b);
  ASSERT_TRUE(x.covered);
  expect_valid_witness(*x.witness, b);
  EXPECT_EQ(x.witness->tuples, (std::vector<SetFamily>{SetFamily{{0, 1}}, SetFamily{{1, 2}}}));
  EXPECT_TRUE(is_m_covered(PointSet{}, kVB, b).covered);
  EXPECT_TRUE(is_m_covered(PointSet{}, SetFamily{}, b).covered);
  EXPECT_FALSE(is_m_covered(PointSet{}, kVB, b, EmptyConvention::StrictNonempty).covered);
}

TEST(IsMClosed, Examples) {
  const Model b = fixtures::b();
  EXPECT_TRUE(is_m_closed(SetFamily{{}, {0, 1}, {1, 2}, {0, 1, 2}}, b).closed);
  const ClosedCheck a = is_m_closed(SetFamily{{0}, {1}}, fixtures::a());
  EXPECT_FALSE(a.closed);
  EXPECT_EQ(a.violator, (PointSet{0, 1}));
  EXPECT_TRUE(is_m_closed(power_set(3), b).closed);
}

TEST(MClosure, Examples) {
  const Model b = fixtures::b();
  EXPECT_EQ(m_closure(kVB, b), (SetFamily{{}, {0, 1}, {1, 2}, {0, 1, 2}}));
  const ClosureTrace trace = m_closure_trace(kVB, b);
  ASSERT_EQ(trace.steps.size(), 2U);
  EXPECT_EQ(trace.steps[0].round, 1U);
  EXPECT_EQ(trace.steps[1].round, 1U);
  EXPECT_EQ(m_closure(SetFamily{{0}, {1}}, fixtures::a()), power_set(2));
  EXPECT_EQ(m_closure(SetFamily{}, b), SetFamily{{}});
}

TEST(MClosure, StrictNonempty) {
  const Model b = fixtures::b();
  EXPECT_EQ(m_closure(kVB, b, EmptyConvention::StrictNonempty), (SetFamily{{0, 1}, {1, 2}, {0, 1, 2}}));
  EXPECT_EQ(m_closure(SetFamily{}, b, EmptyConvention::StrictNonempty), SetFamily{});
  // With disjoint factors and no member meeting both, ∅ is covered strictly.
  const Model two(2, SetFamily{{0}, {1}}, SetFamily{{0}, {1}});
  EXPECT_TRUE(is_m_covered(PointSet{}, SetFamily{{0}, {1}}, two, EmptyConvention::StrictNonempty).covered);
}

TEST(EquivalenceByClosure, Examples) {
  const Model d(3, fin_family(3), SetFamily{});
  const auto discrete = discrete_topology<PointSet>(3);
  EXPECT_TRUE(equivalence_by_closure(minimal_base(discrete), nonempty_part(discrete.opens()), d));
  const Model b = fixtures::b();
  EXPECT_FALSE(equivalence_by_closure(kVB, kVB.with(PointSet{1}), b));
  EXPECT_TRUE(equivalence_by_closure(kVB, kVB, b));
  EXPECT_THROW(equivalence_by_closure(SetFamily{{0}}, kVB, b), Error);
}

TEST(VerifyPOIdentity, Examples) {
  EXPECT_TRUE(verify_PO_identity(fixtures::a()));
  EXPECT_TRUE(verify_PO_identity(fixtures::b()));
  const Model x_only(3, fin_family(3), SetFamily{{0, 1, 2}});
  EXPECT_TRUE(verify_PO_identity(x_only));
  EXPECT_EQ(m_closure(x_only.gen_family(), x_only), (SetFamily{{}, {0, 1, 2}}));
  EXPECT_THROW(verify_PO_identity(Model(2, SetFamily{{0}}, SetFamily{{0}})), Error);
}

// The admissible-subset decision against the literal representation oracle.
TEST(MClosureProperty, CoverageMatchesLiteralOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 3000; ++trial) {
    const unsigned n = 1 + trial % 3;
    const Model m(n, random_family(rng, n, 7, false), SetFamily{});
    const SetFamily v = random_family(rng, n, 4, true);
    const oracle::Space sp = oracle::to_space(m);
    const auto ov = oracle::to_vec(v);
    for_each_subset(m.ground(), [&](PointSet u) {
      const CoverResult r = is_m_covered(u, v, m);
      ASSERT_EQ(r.covered, oracle::covered(oracle::to_set(u), ov, sp, static_cast<int>(v.size())))
          << "U=" << oracle::to_set(u).size() << " trial " << trial;
      if (r.covered) expect_valid_witness(*r.witness, m);
    });
  }
}

TEST(MClosureProperty, Monotone) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned n = 1 + trial % 4;
    const Model m(n, random_family(rng, n, 8, false), SetFamily{});
    const SetFamily v = random_family(rng, n, 4, true);
    const SetFamily w = united(v, random_family(rng, n, 3, true));
    for_each_subset(m.ground(), [&](PointSet u) {
      if (is_m_covered(u, v, m).covered) { ASSERT_TRUE(is_m_covered(u, w, m).covered); }
    });
    ASSERT_TRUE(m_closure(v, m).subset_of(m_closure(w, m)));
  }
}

// The fixpoint against the oracle's own fixpoint, and intersections of
// closed families staying closed, on |X| ≤ 4.
TEST(MClosureProperty, ClosureAndIntersections) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const unsigned n = 1 + trial % 4;
    const Model m(n, random_family(rng, n, 10, false), SetFamily{});
    const SetFamily v = random_family(rng, n, 4, false);
    const SetFamily w = random_family(rng, n, 4, false);
    const SetFamily cv = m_closure(v, m);
    const SetFamily cw = m_closure(w, m);
    const oracle::Space sp = oracle::to_space(m);
    ASSERT_EQ(oracle::to_fam(cv), oracle::m_closure(oracle::to_fam(v), sp, 3));
    ASSERT_TRUE(is_m_closed(cv, m).closed);
    ASSERT_TRUE(v.subset_of(cv));
    ASSERT_TRUE(is_m_closed(intersection(cv, cw), m).closed);
  }
}
