#pragma once

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperlab/error.hpp"
#include "hyperlab/hypermaps.hpp"
#include "hyperlab/hyperspace.hpp"
#include "hyperlab/mclosure.hpp"
#include "hyperlab/setcore.hpp"
#include "hyperlab/topology.hpp"

namespace hyperlab::io {

using nlohmann::json;

namespace detail {

inline std::string label_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorKind::InvalidInput, "point labels must be strings or integers");
}

inline std::vector<std::vector<std::string>> read_family(const json& j, const char* key,
                                                         std::vector<std::string>& warnings) {
  if (!j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing key '") + key + "'");
  if (!j.at(key).is_array()) throw Error(ErrorKind::InvalidInput, std::string(key) + " must be a list");
  std::vector<std::vector<std::string>> out;
  std::set<std::set<std::string>> seen;
  for (const json& member : j.at(key)) {
    if (!member.is_array()) throw Error(ErrorKind::InvalidInput, std::string(key) + " members must be lists");
    std::vector<std::string> labels;
    for (const json& l : member) labels.push_back(label_of(l));
    std::set<std::string> as_set(labels.begin(), labels.end());
    if (!seen.insert(as_set).second) {
      warnings.push_back(std::string("duplicate member in '") + key + "' ignored");
      continue;
    }
    out.push_back(std::move(labels));
  }
  return out;
}

}  // namespace detail

/// Reads `{"points": [...], "family": [[...]], "subbase": [[...]]}`.
/// Duplicate members are dropped and reported through `warnings`.
inline Model model_from_json(const json& j, std::vector<std::string>& warnings) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "model must be a JSON object");
  if (!j.contains("points") || !j.at("points").is_array()) {
    throw Error(ErrorKind::InvalidInput, "missing list 'points'");
  }
  std::vector<std::string> names;
  for (const json& p : j.at("points")) names.push_back(detail::label_of(p));
  auto family = detail::read_family(j, "family", warnings);
  auto subbase = detail::read_family(j, "subbase", warnings);
  return make_model(names, family, subbase);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

inline Model load_model(const std::string& path, std::vector<std::string>& warnings) {
  return model_from_json(read_json_file(path), warnings);
}

inline json labels(PointSet s, const Model& model) {
  json out = json::array();
  s.for_each([&](unsigned x) { out.push_back(model.point_names()[x]); });
  return out;
}

inline json family_labels(const SetFamily& f, const Model& model) {
  json out = json::array();
  for (PointSet s : f) out.push_back(labels(s, model));
  return out;
}

inline json model_to_json(const Model& model) {
  return {{"points", model.point_names()},
          {"family", family_labels(model.m_family(), model)},
          {"subbase", family_labels(model.gen_family(), model)}};
}

template <class Set>
json index_list(Set s) {
  return s.elements();
}

/// Opens as a sorted list of sorted index lists.
template <class Set>
json topology_to_json(const Topology<Set>& t) {
  json opens = json::array();
  std::vector<std::vector<unsigned>> lists;
  for (Set o : t.opens()) lists.push_back(o.elements());
  std::sort(lists.begin(), lists.end());
  for (auto& l : lists) opens.push_back(l);
  return opens;
}

inline json hypertopology_to_json(const HyperTopology& h, const Model& model) {
  return {{"members", family_labels(model.m_family(), model)},
          {"kind", to_string(h.kind)},
          {"generators", family_labels(h.generators, model)},
          {"opens", topology_to_json(h.topology)},
          {"minimal_base", [&] {
             json b = json::array();
             for (HyperSet s : minimal_base(h.topology)) b.push_back(s.elements());
             return b;
           }()}};
}

namespace detail {

inline unsigned point_index(const std::string& label, const Model& model) {
  const auto& names = model.point_names();
  for (unsigned i = 0; i < names.size(); ++i) {
    if (names[i] == label) return i;
  }
  throw Error(ErrorKind::UnknownLabel, "'" + label + "'");
}

inline std::size_t member_index(const json& j, const Model& model) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "members must be label lists");
  PointSet s;
  for (const json& l : j) s.insert(point_index(label_of(l), model));
  auto idx = model.m_family().index_of(s);
  if (!idx) throw Error(ErrorKind::InvalidInput, "hypermap mentions a set outside M");
  return *idx;
}

}  // namespace detail

/// `{"map": {"0": "1", ...}}`, a total self-map of the model's points.
inline PointMap point_map_from_json(const json& j, const Model& model) {
  if (!j.contains("map") || !j.at("map").is_object()) {
    throw Error(ErrorKind::InvalidInput, "missing object 'map'");
  }
  const unsigned n = model.point_count();
  std::vector<int> table(n, -1);
  for (auto it = j.at("map").begin(); it != j.at("map").end(); ++it) {
    const unsigned from = detail::point_index(it.key(), model);
    table[from] = static_cast<int>(detail::point_index(detail::label_of(it.value()), model));
  }
  PointMap out;
  for (unsigned x = 0; x < n; ++x) {
    if (table[x] < 0) throw Error(ErrorKind::InvalidInput, "map is not total");
    out.table.push_back(static_cast<std::size_t>(table[x]));
  }
  return out;
}

/// `{"hypermap": [[[source labels], [target labels]], ...]}`, total on M.
inline HyperMap hyper_map_from_json(const json& j, const Model& model) {
  if (!j.contains("hypermap") || !j.at("hypermap").is_array()) {
    throw Error(ErrorKind::InvalidInput, "missing list 'hypermap'");
  }
  std::vector<long> table(model.member_count(), -1);
  for (const json& pair : j.at("hypermap")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorKind::InvalidInput, "hypermap entries are [source, target] pairs");
    }
    table[detail::member_index(pair[0], model)] = static_cast<long>(detail::member_index(pair[1], model));
  }
  HyperMap out;
  for (long v : table) {
    if (v < 0) throw Error(ErrorKind::InvalidInput, "hypermap is not total on M");
    out.table.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

inline json cover_witness_to_json(const CoverWitness& w, const Model& model) {
  json tuples = json::array();
  for (const SetFamily& t : w.tuples) tuples.push_back(family_labels(t, model));
  return {{"set", labels(w.target, model)}, {"tuples", tuples}};
}

}  // namespace hyperlab::io
