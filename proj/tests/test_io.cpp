#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace hyperlab;
using nlohmann::json;

namespace {

Model parse(const char* text, std::vector<std::string>& warnings) {
  return io::model_from_json(json::parse(text), warnings);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::EngineBug;
}

}  // namespace

TEST(ModelJson, ReadsLabelledModel) {
  std::vector<std::string> warnings;
  const Model m = parse(R"({"points": ["a","b"], "family": [["a"],["b"],["a","b"]], "subbase": [["a"],["b"]]})",
                        warnings);
  EXPECT_TRUE(warnings.empty());
  EXPECT_EQ(m.point_names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(m.m_family(), fixtures::a().m_family());
  EXPECT_EQ(m.gen_family(), fixtures::a().gen_family());
}

TEST(ModelJson, DuplicatesWarn) {
  std::vector<std::string> warnings;
  const Model m = parse(R"({"points": [0,1], "family": [[0],[1,0],[0,1]], "subbase": [[1],[1]]})", warnings);
  EXPECT_EQ(warnings.size(), 2U);
  EXPECT_EQ(m.member_count(), 2U);
  EXPECT_EQ(m.gen_family().size(), 1U);
}

TEST(ModelJson, Errors) {
  std::vector<std::string> w;
  EXPECT_EQ(kind_of([&] { parse(R"({"points": ["a"], "family": [[]], "subbase": []})", w); }),
            ErrorKind::EmptyMember);
  EXPECT_EQ(kind_of([&] { parse(R"({"points": ["a"], "family": [["b"]], "subbase": []})", w); }),
            ErrorKind::UnknownLabel);
  EXPECT_EQ(kind_of([&] { parse(R"({"points": ["a"], "family": [["a"]]})", w); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { parse(R"([1,2])", w); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { parse(R"({"points": [true], "family": [], "subbase": []})", w); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { io::read_json_file("/nonexistent/model.json"); }), ErrorKind::InvalidInput);
}

TEST(ModelJson, RoundTrip) {
  for (const Model& m : {fixtures::a(), fixtures::b(), fixtures::c()}) {
    std::vector<std::string> w;
    EXPECT_EQ(io::model_from_json(io::model_to_json(m), w), m);
  }
}

TEST(ModelJson, SampleFilesMatchFixtures) {
  std::vector<std::string> w;
  EXPECT_EQ(io::load_model(HYPERLAB_MODELS "/fixture_a.json", w), fixtures::a());
  EXPECT_EQ(io::load_model(HYPERLAB_MODELS "/fixture_b.json", w), fixtures::b());
  EXPECT_EQ(io::load_model(HYPERLAB_MODELS "/fixture_c.json", w), fixtures::c());
  EXPECT_TRUE(w.empty());
}

TEST(MapJson, PointMap) {
  const Model c = fixtures::c();
  EXPECT_EQ(io::point_map_from_json(json::parse(R"({"map": {"0": "1", "1": "2", "2": "2"}})"), c).table,
            (std::vector<std::size_t>{1, 2, 2}));
  EXPECT_EQ(kind_of([&] { io::point_map_from_json(json::parse(R"({"map": {"0": "1"}})"), c); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { io::point_map_from_json(json::parse(R"({"map": {"0": "9", "1": "0", "2": "0"}})"), c); }),
            ErrorKind::UnknownLabel);
}

TEST(MapJson, HyperMap) {
  const Model c = fixtures::c();
  std::vector<std::string> w;
  const json j = io::read_json_file(HYPERLAB_MODELS "/fixture_c_psi.json");
  EXPECT_EQ(io::hyper_map_from_json(j, c), fixtures::c_psi());
  EXPECT_EQ(kind_of([&] { io::hyper_map_from_json(json::parse(R"({"hypermap": [[["0"], ["2"]]]})"), c); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { io::hyper_map_from_json(json::parse(R"({"hypermap": [[["2"], ["2"]]]})"), c); }),
            ErrorKind::InvalidInput);
}

TEST(TopologyJson, SortedIndexLists) {
  EXPECT_EQ(io::topology_to_json(discrete_topology<PointSet>(2)).dump(), "[[],[0],[0,1],[1]]");
}

TEST(CoverWitnessJson, Labels) {
  const Model b = fixtures::b();
  const CoverResult r = is_m_covered(b.ground(), b.gen_family(), b);
  EXPECT_EQ(io::cover_witness_to_json(*r.witness, b).dump(),
            R"({"set":["0","1","2"],"tuples":[[["0","1"]],[["1","2"]]]})");
}
