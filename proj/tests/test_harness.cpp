#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace hyperlab;

namespace {

// Natural models counted directly: M ranges over families of nonempty sets
// holding every singleton, S over all families of nonempty sets.
std::size_t natural_model_count(unsigned max_points) {
  std::size_t total = 0;
  for (unsigned n = 1; n <= max_points; ++n) {
    const std::size_t nonempty = (std::size_t{1} << n) - 1;
    const std::size_t non_singletons = nonempty - n;
    total += (std::size_t{1} << non_singletons) * (std::size_t{1} << nonempty);
  }
  return total;
}

}  // namespace

TEST(Enumerate, NaturalCount) {
  ModelBounds b;
  b.max_points = 2;
  b.filter.natural = true;
  const auto models = enumerate_models(b);
  EXPECT_EQ(models.size(), natural_model_count(2));
  EXPECT_EQ(models.size(), 18U);
  for (const Model& m : models) EXPECT_TRUE(is_natural(m));
  b.max_points = 3;
  EXPECT_EQ(enumerate_models(b).size(), natural_model_count(3));
}

TEST(Enumerate, FiltersAndOrder) {
  ModelBounds b;
  b.max_points = 3;
  b.max_family = 3;
  b.filter.x_in_m = true;
  b.filter.covers = true;
  unsigned last_n = 0;
  for_each_model(b, [&](const Model& m) {
    ASSERT_GE(m.point_count(), last_n);
    last_n = m.point_count();
    ASSERT_LE(m.member_count(), 3U);
    ASSERT_TRUE(m.m_family().contains(m.ground()));
    ASSERT_EQ(m.gen_family().union_all(), m.ground());
  });
  EXPECT_EQ(last_n, 3U);
}

TEST(Enumerate, RandomIsReproducible) {
  ModelBounds b;
  b.mode = EnumerationMode::Random;
  b.max_points = 4;
  b.seed = 7;
  b.count = 100;
  b.filter.natural = true;
  const auto first = enumerate_models(b);
  const auto second = enumerate_models(b);
  ASSERT_EQ(first.size(), 100U);
  EXPECT_EQ(first, second);
  for (const Model& m : first) EXPECT_TRUE(is_natural(m));
  b.seed = 8;
  EXPECT_NE(enumerate_models(b), first);
}

TEST(Enumerate, Budget) {
  ModelBounds b;
  b.max_points = 5;
  EXPECT_THROW(enumerate_models(b), Error);
  b.max_points = 4;
  b.budget = 1000;
  try {
    enumerate_models(b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(Registry, Complete) {
  const std::vector<std::string> ids{
      "F2.2",  "R2.3",  "F2.6",  "P2.8",  "P2.9",        "F2.11", "P2.12", "P2.13", "C-KUR",
      "P-T0",  "P-T1",  "P2.16", "P2.18", "C2.19",       "P2.20", "C2.21", "C2.22", "A2.23-finite",
      "P2.24", "P2.26", "P2.27", "P3.1",  "P3.2",        "P3.3",  "T3.4",  "P-compact", "P-weight",
      "P5.4",  "T5.5",  "C5.8",  "C5.9",  "C5.10",       "P5.1-dense-point"};
  ASSERT_EQ(registry().size(), ids.size());
  for (const std::string& id : ids) {
    EXPECT_EQ(find_property(id).id, id);
    EXPECT_FALSE(find_property(id).statement.empty());
  }
  try {
    find_property("P9.9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownProperty);
  }
}

TEST(RunProperty, Fixtures) {
  EXPECT_EQ(run_property("P2.20", fixtures::b()).verdict, Verdict::Pass);
  EXPECT_EQ(run_property("A2.23-finite", fixtures::b()).verdict, Verdict::Pass);
  PropertyContext ctx;
  ctx.hyper_map = fixtures::c_psi();
  const Report r = run_property("T5.5", fixtures::c(), ctx);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  EXPECT_EQ(r.witness.dump().find("\"2\"") != std::string::npos, true);
}

TEST(RunProperty, VacuousOnFailedHypothesis) {
  const Model no_x(2, SetFamily{{0}, {1}}, SetFamily{{0}, {1}});
  const Report r = run_property("T5.5", no_x);
  EXPECT_EQ(r.verdict, Verdict::Vacuous);
  EXPECT_EQ(r.witness.at("failed_hypothesis"), "X in M");
  EXPECT_THROW(run_property("T5.5", no_x, {}, std::string("no such hypothesis")), Error);
}

TEST(Search, PassesWithinBounds) {
  ModelBounds b;
  b.max_points = 3;
  b.max_family = 4;
  for (const char* id : {"P2.20", "C2.21"}) {
    const Report r = search_counterexample(id, b);
    EXPECT_EQ(r.verdict, Verdict::Pass) << id << " " << r.to_json().dump();
    EXPECT_GT(r.models_checked, 0U);
  }
}

// Without X ∈ M a continuous self-map of M may have no fixed point.
TEST(Search, DroppingXInMRefutesT55) {
  ModelBounds b;
  b.max_points = 2;
  const Report r = search_counterexample("T5.5", b, std::string("X in M"));
  ASSERT_EQ(r.verdict, Verdict::Counterexample);
  EXPECT_EQ(r.witness.at("dropped_hypothesis"), "X in M");
  const Report json_form = Report(r);
  EXPECT_EQ(json_form.to_json().at("verdict"), "counterexample");
}

TEST(Sweep, ThreadCountDoesNotChangeResult) {
  ModelBounds b;
  b.max_points = 2;
  const Report one = sweep("P2.12", b, std::nullopt, 1);
  const Report four = sweep("P2.12", b, std::nullopt, 4);
  EXPECT_EQ(one.to_json(), four.to_json());
}
