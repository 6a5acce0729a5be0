#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperlab/error.hpp"
#include "hyperlab/hypermaps.hpp"
#include "hyperlab/hyperspace.hpp"
#include "hyperlab/io.hpp"
#include "hyperlab/mclosure.hpp"
#include "hyperlab/naive.hpp"
#include "hyperlab/setcore.hpp"
#include "hyperlab/topology.hpp"

namespace hyperlab {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Model enumeration

enum class EnumerationMode { Exhaustive, Random };

struct ModelFilter {
  bool natural = false;  // every singleton in M
  bool x_in_m = false;   // X ∈ M
  bool covers = false;   // ⋃S = X
};

struct ModelBounds {
  unsigned max_points = 3;
  std::size_t max_family = kMaxMembers;  // bound on |M|
  EnumerationMode mode = EnumerationMode::Exhaustive;
  std::uint64_t seed = 0;
  std::size_t count = 0;  // random mode only
  ModelFilter filter;
  std::size_t budget = std::size_t{1} << 22;  // exhaustive mode only
};

namespace harness_detail {

inline std::vector<PointSet> nonempty_subsets(unsigned n) {
  std::vector<PointSet> out;
  for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits) out.emplace_back(bits);
  return out;
}

inline bool member_choice_ok(const SetFamily& m, unsigned n, const ModelBounds& b) {
  if (m.size() > b.max_family || m.size() > kMaxMembers) return false;
  if (b.filter.natural) {
    for (unsigned x = 0; x < n; ++x) {
      if (!m.contains(PointSet::singleton(x))) return false;
    }
  }
  if (b.filter.x_in_m && !m.contains(PointSet::full(n))) return false;
  return true;
}

inline SetFamily family_from_mask(const std::vector<PointSet>& pool, std::uint64_t mask) {
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if ((mask >> i) & 1U) out.push_back(pool[i]);
  }
  return SetFamily(std::move(out));
}

}  // namespace harness_detail

/// Calls fn(model) for every model within the bounds. Exhaustive mode visits
/// ground sets 1..max_points, then member families, then generating families,
/// both in increasing bit-mask order; random mode is reproducible from the
/// seed. Filters are enforced in both modes.
template <class F>
void for_each_model(const ModelBounds& b, F&& fn) {
  using namespace harness_detail;
  if (b.max_points == 0) throw Error(ErrorKind::InvalidInput, "max_points must be positive");
  if (b.mode == EnumerationMode::Exhaustive) {
    if (b.max_points > 4) {
      throw Error(ErrorKind::BudgetExceeded, "exhaustive enumeration needs max_points ≤ 4");
    }
    std::size_t total = 0;
    std::vector<std::vector<SetFamily>> ms(b.max_points + 1), ss(b.max_points + 1);
    for (unsigned n = 1; n <= b.max_points; ++n) {
      const auto pool = nonempty_subsets(n);
      const std::uint64_t masks = std::uint64_t{1} << pool.size();
      std::size_t m_count = 0;
      std::size_t s_count = 0;
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= b.max_family) {
          SetFamily m = family_from_mask(pool, mask);
          if (member_choice_ok(m, n, b)) {
            ++m_count;
            if (m_count * s_count <= b.budget || s_count == 0) ms[n].push_back(std::move(m));
          }
        }
        SetFamily s = family_from_mask(pool, mask);
        if (!b.filter.covers || covers(s, PointSet::full(n))) {
          ++s_count;
          if (ss[n].size() <= b.budget) ss[n].push_back(std::move(s));
        }
      }
      total += m_count * s_count;
      if (total > b.budget) {
        throw Error(ErrorKind::BudgetExceeded,
                    "exhaustive enumeration would visit " + std::to_string(total) + " models");
      }
    }
    for (unsigned n = 1; n <= b.max_points; ++n) {
      for (const SetFamily& m : ms[n]) {
        for (const SetFamily& s : ss[n]) fn(Model(n, m, s));
      }
    }
    return;
  }

  if (b.max_points > kMaxPoints) throw Error(ErrorKind::TooLarge, "max_points exceeds 16");
  std::mt19937_64 rng(b.seed);
  auto random_set = [&](unsigned n) {
    std::uniform_int_distribution<std::uint32_t> bits(1, (std::uint32_t{1} << n) - 1);
    return PointSet(bits(rng));
  };
  std::uniform_int_distribution<unsigned> points(1, b.max_points);
  for (std::size_t i = 0; i < b.count; ++i) {
    const unsigned n = points(rng);
    const std::size_t candidates = (std::size_t{1} << n) - 1;
    std::vector<PointSet> forced;
    if (b.filter.natural) {
      for (unsigned x = 0; x < n; ++x) forced.push_back(PointSet::singleton(x));
    }
    if (b.filter.x_in_m) forced.push_back(PointSet::full(n));
    const std::size_t cap = std::min<std::size_t>(b.max_family, kMaxMembers);
    if (SetFamily(forced).size() > cap) {
      throw Error(ErrorKind::BudgetExceeded, "filters force more members than max_family allows");
    }
    const std::size_t room = std::min(cap, candidates) - SetFamily(forced).size();
    std::uniform_int_distribution<std::size_t> m_size(0, room);
    std::vector<PointSet> m = forced;
    const std::size_t m_target = SetFamily(forced).size() + m_size(rng);
    while (SetFamily(m).size() < m_target) m.push_back(random_set(n));
    std::uniform_int_distribution<std::size_t> s_size(0, std::min<std::size_t>(candidates, 16));
    std::vector<PointSet> s;
    const std::size_t s_target = s_size(rng);
    while (SetFamily(s).size() < s_target) s.push_back(random_set(n));
    if (b.filter.covers) {
      const PointSet missing = PointSet::full(n) - SetFamily(s).union_all();
      missing.for_each([&](unsigned x) { s.push_back(PointSet::singleton(x)); });
    }
    fn(Model(n, SetFamily(std::move(m)), SetFamily(std::move(s))));
  }
}

inline std::vector<Model> enumerate_models(const ModelBounds& b) {
  std::vector<Model> out;
  for_each_model(b, [&](const Model& m) { out.push_back(m); });
  return out;
}

// ---------------------------------------------------------------------------
// Registry

enum class Verdict { Pass, Counterexample, Vacuous, EngineBug };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::Vacuous: return "vacuous";
    case Verdict::EngineBug: return "engine-bug";
  }
  return "?";
}

/// Optional data supplied with a single check: a point map (for the map
/// properties) or a self-map of M (for the fixed-point properties).
struct PropertyContext {
  std::optional<PointMap> point_map;
  std::optional<HyperMap> hyper_map;
};

struct Outcome {
  bool holds = true;
  json detail;
};

struct Hypothesis {
  std::string name;
  std::function<bool(const Model&)> holds;
};

struct Property {
  std::string id;
  std::string statement;
  std::vector<Hypothesis> hypotheses;
  std::function<Outcome(const Model&, const PropertyContext&)> check;
  /// Confirms a reported failure along an independent, slower route. When
  /// absent, the check is re-run on a model rebuilt from the serialized
  /// witness.
  std::function<bool(const Model&, const PropertyContext&, const json&)> recheck;
  /// Holds when some model exhibits it, rather than every model.
  bool existential = false;
};

struct Report {
  std::string property;
  std::string statement;
  std::size_t models_checked = 0;
  std::size_t models_vacuous = 0;
  Verdict verdict = Verdict::Vacuous;
  json witness;

  json to_json() const {
    json j{{"property", property},
           {"statement", statement},
           {"models_checked", models_checked},
           {"models_vacuous", models_vacuous},
           {"verdict", to_string(verdict)}};
    if (!witness.is_null()) j["witness"] = witness;
    return j;
  }
};

namespace harness_detail {

inline Outcome ok(json detail = nullptr) { return {true, std::move(detail)}; }
inline Outcome fail(json detail) { return {false, std::move(detail)}; }

inline json hyper_json(HyperSet h, const Model& m) { return io::family_labels(members_of(h, m), m); }

inline PointSet points_from_labels(const json& labels, const Model& m) {
  PointSet s;
  for (const json& l : labels) s.insert(io::detail::point_index(io::detail::label_of(l), m));
  return s;
}

inline json table_json(const std::vector<std::size_t>& table, const Model& m) {
  json out = json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    out.push_back({io::labels(m.member(i), m), io::labels(m.member(table[i]), m)});
  }
  return out;
}

inline Hypothesis generating() {
  return {"S generates O", [](const Model& m) { return check_generating(m); }};
}
inline Hypothesis natural() {
  return {"M natural", [](const Model& m) { return is_natural(m); }};
}
inline Hypothesis covering() {
  return {"S covers X", [](const Model& m) { return covers(m.gen_family(), m.ground()); }};
}
inline Hypothesis x_in_m() {
  return {"X in M", [](const Model& m) { return m.m_family().contains(m.ground()); }};
}
inline Hypothesis nonempty_m() {
  return {"M non-empty", [](const Model& m) { return !m.m_family().empty(); }};
}
inline Hypothesis fin_in_m(std::optional<unsigned> n) {
  return {n ? "Fin" + std::to_string(*n) + "(X) in M" : std::string("Fin(X) in M"),
          [n](const Model& m) { return fin_family(m, n).subset_of(m.m_family()); }};
}
inline Hypothesis complements_subbase() {
  return {"M complements subbase", [](const Model& m) {
            for (PointSet k : m.m_family()) {
              if (k != m.ground() && !m.gen_family().contains(k.complement(m.point_count()))) {
                return false;
              }
            }
            return true;
          }};
}
inline Hypothesis at_most_points(unsigned k) {
  return {"|X| <= " + std::to_string(k), [k](const Model& m) { return m.point_count() <= k; }};
}
inline Hypothesis at_most_members(std::size_t k) {
  return {"|M| <= " + std::to_string(k), [k](const Model& m) { return m.member_count() <= k; }};
}
inline Hypothesis at_most_generators(std::size_t k) {
  return {"|S| <= " + std::to_string(k), [k](const Model& m) { return m.gen_family().size() <= k; }};
}

inline Topology<PointSet> induced(const Model& m) { return induced_topology(build_lvt(m), m); }

inline Hypothesis induced_t1() {
  return {"T_O is T1", [](const Model& m) { return separation(induced(m)).t1; }};
}
inline Hypothesis induced_t2() {
  return {"T_O is T2", [](const Model& m) { return separation(induced(m)).t2; }};
}
inline Hypothesis closed_base_of_induced() {
  return {"M is CL(T_O) or a closed base", [](const Model& m) {
            const auto t = induced(m);
            return m.m_family() == closed_family(t) || is_closed_base(m, t);
          }};
}
inline Hypothesis subbase_t2() {
  return {"(X, T) is T2", [](const Model& m) { return separation(subbase_topology(m)).t2; }};
}
inline Hypothesis subbase_connected() {
  return {"(X, T) connected", [](const Model& m) { return is_connected(subbase_topology(m)); }};
}
inline Hypothesis x_in_subbase() {
  return {"X in S", [](const Model& m) { return m.gen_family().contains(m.ground()); }};
}

template <class Set>
const std::vector<Topology<Set>>& topologies_on(unsigned n) {
  static const std::vector<std::vector<Topology<Set>>> cache = [] {
    std::vector<std::vector<Topology<Set>>> out;
    for (unsigned k = 0; k <= 4; ++k) out.push_back(enumerate_topologies<Set>(k));
    return out;
  }();
  if (n > 4) throw Error(ErrorKind::BudgetExceeded, "topology sweeps are limited to 4 points");
  return cache[n];
}

/// Every family of subsets of X (∅ allowed as a member), |X| ≤ 3.
template <class F>
void for_each_family(unsigned n, F&& fn) {
  if (n > 3) throw Error(ErrorKind::BudgetExceeded, "family sweeps are limited to 3 points");
  const unsigned subsets = 1U << n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << subsets); ++mask) {
    std::vector<PointSet> members;
    for (unsigned b = 0; b < subsets; ++b) {
      if ((mask >> b) & 1U) members.emplace_back(b);
    }
    fn(SetFamily(std::move(members)));
  }
}

inline std::vector<SetFamily> m_closed_families(const Model& m) {
  std::vector<SetFamily> out;
  for_each_family(m.point_count(), [&](const SetFamily& v) {
    if (is_m_closed(v, m).closed) out.push_back(v);
  });
  return out;
}

/// Every map X → X whose preimages of the generating family stay inside it
/// (an empty preimage being accepted).
inline std::vector<PointMap> subbase_respecting_self_maps(const Model& m) {
  std::vector<PointMap> out;
  for_each_map(m.point_count(), m.point_count(), [&](const std::vector<std::size_t>& t) {
    PointMap f{t};
    if (preimages_in_subbase(f, m, m)) out.push_back(std::move(f));
  });
  return out;
}

inline Model closed_model(const Model& m) {
  return Model(m.point_names(), closed_family(subbase_topology(m)), m.gen_family());
}

/// Brute-force fixed points for every continuous self-map of (M, O), with the
/// iteration cross-checked whenever the theorem's hypotheses all hold.
inline Outcome all_self_maps_fix(const Model& m, const Topology<HyperSet>& o,
                                 const std::optional<HyperMap>& only) {
  const bool iterate = !fixed_point_hypothesis_failure(m).has_value() &&
                       generate_topology(static_cast<unsigned>(m.member_count()),
                                         hit_subbase(m, m.gen_family())) == o;
  std::size_t maps = 0;
  std::optional<json> failure;
  json example;
  auto visit = [&](const std::vector<std::size_t>& table) {
    if (failure) return;
    ++maps;
    const HyperMap psi{table};
    const auto fixed = brute_force_fixed_points(psi);
    if (fixed.empty()) {
      failure = json{{"map", table_json(table, m)}, {"table", table}};
      return;
    }
    if (iterate) {
      const FixedPoint fp = find_fixed_point(psi, m);
      if (std::find(fixed.begin(), fixed.end(), fp.member) == fixed.end()) {
        throw Error(ErrorKind::EngineBug, "iteration returned a non-fixed member");
      }
      for (std::size_t i = 2; i < fp.trace.size(); ++i) {
        if (!m.member(fp.trace[i]).subset_of(m.member(fp.trace[i - 1]))) {
          throw Error(ErrorKind::EngineBug, "iteration trace is not decreasing");
        }
      }
      if (example.is_null()) {
        json trace = json::array();
        for (std::size_t k : fp.trace) trace.push_back(io::labels(m.member(k), m));
        example = {{"fixed_point", io::labels(m.member(fp.member), m)}, {"trace", trace}};
      }
    }
  };
  if (only) {
    if (only->table.size() != m.member_count()) {
      throw Error(ErrorKind::InvalidInput, "map table does not match M");
    }
    if (!maps_continuously(o, o, only->table)) {
      throw Error(ErrorKind::NotContinuous, "Ψ is not continuous on (M, O)");
    }
    visit(only->table);
  } else {
    for_each_continuous_map(o, o, visit);
  }
  if (failure) return fail(*failure);
  json detail{{"continuous_maps", maps}};
  if (!example.is_null()) detail["example"] = example;
  return ok(detail);
}

/// Confirms a fixed-point-free continuous map through naive opens.
inline bool recheck_fixed_point_failure(const Model& m, const Family<HyperSet>& opens,
                                        const json& detail) {
  if (!detail.contains("table")) return false;
  const auto table = detail.at("table").get<std::vector<std::size_t>>();
  if (table.size() != m.member_count()) return false;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == i) return false;
  }
  for (HyperSet o : opens) {
    if (!opens.contains(preimage_of<HyperSet, HyperSet>(o, table))) return false;
  }
  return true;
}

inline std::vector<Property> build_registry() {
  std::vector<Property> r;

  r.push_back({"F2.2",
               "lower hits turn unions into unions and preserve inclusion; upper sets are "
               "complements of lower hits of complements",
               {at_most_points(4)},
               [](const Model& m, const PropertyContext&) {
                 const PointSet x = m.ground();
                 const HyperSet all = m.all_members();
                 std::optional<json> bad;
                 for_each_subset(x, [&](PointSet a) {
                   if (bad) return;
                   if (upper_sub(a, m) != all - lower_hit(x - a, m)) {
                     bad = json{{"law", "duality"}, {"A", io::labels(a, m)}};
                   }
                   for_each_subset(x, [&](PointSet b) {
                     if (bad) return;
                     if (lower_hit(a | b, m) != (lower_hit(a, m) | lower_hit(b, m))) {
                       bad = json{{"law", "union"}, {"A", io::labels(a, m)}, {"B", io::labels(b, m)}};
                     } else if (a.subset_of(b) && !lower_hit(a, m).subset_of(lower_hit(b, m))) {
                       bad = json{{"law", "monotone"}, {"A", io::labels(a, m)}, {"B", io::labels(b, m)}};
                     }
                   });
                 });
                 if (!bad && m.point_count() <= 3) {
                   for_each_family(m.point_count(), [&](const SetFamily& fam) {
                     if (bad) return;
                     HyperSet hits;
                     for (PointSet a : fam) hits |= lower_hit(a, m);
                     if (hits != lower_hit(fam.union_all(), m)) {
                       bad = json{{"law", "union of a family"}, {"family", io::family_labels(fam, m)}};
                     }
                   });
                 }
                 if (bad) return fail(*bad);
                 return ok();
               },
               {},
               false});

  r.push_back({"R2.3",
               "when Fin2(X) ⊆ M, the lower hit of A ∩ B is strictly smaller than the "
               "intersection of the lower hits for incomparable A, B, witnessed by {x, y}",
               {fin_in_m(2), at_most_points(4)},
               [](const Model& m, const PropertyContext&) {
                 std::optional<json> bad;
                 for_each_subset(m.ground(), [&](PointSet a) {
                   for_each_subset(m.ground(), [&](PointSet b) {
                     if (bad || (a - b).empty() || (b - a).empty()) return;
                     const HyperSet lhs = lower_hit(a & b, m);
                     const HyperSet rhs = lower_hit(a, m) & lower_hit(b, m);
                     PointSet xy{(a - b).first(), (b - a).first()};
                     const auto idx = m.m_family().index_of(xy);
                     const bool witnessed =
                         idx && rhs.contains(static_cast<unsigned>(*idx)) &&
                         !lhs.contains(static_cast<unsigned>(*idx));
                     if (!lhs.proper_subset_of(rhs) || !witnessed) {
                       bad = json{{"A", io::labels(a, m)}, {"B", io::labels(b, m)}};
                     }
                   });
                 });
                 if (bad) return fail(*bad);
                 return ok();
               },
               {},
               false});

  r.push_back({"F2.6",
               "P_O contains X, is closed under unions, and its lower hits regenerate O",
               {generating()},
               [](const Model& m, const PropertyContext&) {
                 const HyperTopology o = build_lvt(m);
                 const SetFamily p = extract_PO(o, m);
                 if (!p.contains(m.ground())) return fail({{"missing", "X"}});
                 for (PointSet a : p) {
                   for (PointSet b : p) {
                     if (!p.contains(a | b)) {
                       return fail({{"union_of", {io::labels(a, m), io::labels(b, m)}}});
                     }
                   }
                 }
                 if (!(hit_topology(m, p) == o.topology)) return fail({{"regenerates", false}});
                 return ok({{"P_O", io::family_labels(p, m)}});
               },
               [](const Model& m, const PropertyContext&, const json&) {
                 const auto opens = naive::hyper_opens(m, m.gen_family());
                 const SetFamily p = naive::p_o(m, opens);
                 if (!p.contains(m.ground())) return true;
                 for (PointSet a : p) {
                   for (PointSet b : p) {
                     if (!p.contains(a | b)) return true;
                   }
                 }
                 return naive::hyper_opens(m, p) != opens;
               },
               false});

  r.push_back({"P2.8",
               "a topology on M is of lower-Vietoris type iff the lower hits of some "
               "union-closed subbase containing X generate it",
               {at_most_points(3), at_most_members(4)},
               [](const Model& m, const PropertyContext&) {
                 const unsigned k = static_cast<unsigned>(m.member_count());
                 std::vector<Topology<HyperSet>> generated;
                 for_each_family(m.point_count(), [&](const SetFamily& s) {
                   if (!s.contains(m.ground())) return;
                   for (PointSet a : s) {
                     for (PointSet b : s) {
                       if (!s.contains(a | b)) return;
                     }
                   }
                   generated.push_back(hit_topology(m, s));
                 });
                 std::size_t lvt = 0;
                 for (const auto& t : topologies_on<HyperSet>(k)) {
                   const HyperTopology h = explicit_hypertopology(m, t.opens());
                   const bool lhs = is_lower_vietoris_type(h, m);
                   const bool rhs =
                       std::any_of(generated.begin(), generated.end(), [&](const auto& g) { return g == t; });
                   if (lhs != rhs) {
                     json opens = json::array();
                     for (HyperSet o : t.opens()) opens.push_back(hyper_json(o, m));
                     return fail({{"topology", opens}, {"lower_vietoris_type", lhs}, {"generated", rhs}});
                   }
                   lvt += lhs ? 1 : 0;
                 }
                 return ok({{"topologies", topologies_on<HyperSet>(k).size()}, {"lower_vietoris_type", lvt}});
               },
               {},
               false});

  r.push_back({"P2.9",
               "the lower hits of S form a subbase on M iff every member of M meets ⋃S; "
               "a cover of X always qualifies",
               {},
               [](const Model& m, const PropertyContext&) {
                 HyperSet hits;
                 for (PointSet a : m.gen_family()) hits |= lower_hit(a, m);
                 const bool generating = check_generating(m);
                 if (generating != (hits == m.all_members())) {
                   return fail({{"check_generating", generating}});
                 }
                 if (covers(m.gen_family(), m.ground()) && !generating) {
                   return fail({{"covering_family_not_generating", true}});
                 }
                 return ok();
               },
               {},
               false});

  r.push_back({"F2.11",
               "the closure of a member C of M contains every member inside C",
               {generating()},
               [](const Model& m, const PropertyContext&) {
                 const HyperTopology o = build_lvt(m);
                 for (PointSet f : m.m_family()) {
                   if (!closure_vs_upper(o, m, f).superset_holds) return fail({{"F", io::labels(f, m)}});
                 }
                 return ok();
               },
               [](const Model& m, const PropertyContext&, const json& d) {
                 const auto opens = naive::hyper_opens(m, m.gen_family());
                 const PointSet f = points_from_labels(d.at("F"), m);
                 const auto idx = m.m_family().index_of(f);
                 if (!idx) return false;
                 const HyperSet cl = naive::closure(opens, static_cast<unsigned>(m.member_count()),
                                                    HyperSet::singleton(static_cast<unsigned>(*idx)));
                 return !upper_sub(f, m).subset_of(cl);
               },
               false});

  r.push_back({"P2.12",
               "two covers of X generate the same topology on M iff they have the same P_O",
               {covering(), at_most_points(3)},
               [](const Model& m, const PropertyContext&) {
                 const HyperTopology o1 = build_lvt(m);
                 const SetFamily p1 = extract_PO(o1, m);
                 std::size_t compared = 0;
                 std::optional<json> bad;
                 for_each_family(m.point_count(), [&](const SetFamily& u2) {
                   if (bad || u2.contains(PointSet{}) || !covers(u2, m.ground())) return;
                   ++compared;
                   const HyperTopology o2 = build_lvt(m, u2);
                   const bool same_topology = o1 == o2;
                   const bool same_po = p1 == extract_PO(o2, m);
                   if (same_topology != same_po) {
                     bad = json{{"U2", io::family_labels(u2, m)}, {"same_topology", same_topology}, {"same_PO", same_po}};
                   }
                 });
                 if (bad) return fail(*bad);
                 return ok({{"covers_compared", compared}});
               },
               {},
               false});

  r.push_back({"P2.13",
               "for T1 induced topology and M = CL(X) or a closed base, O is the lower Vietoris "
               "topology iff every member F has closure F⁺",
               {generating(), induced_t1(), closed_base_of_induced()},
               [](const Model& m, const PropertyContext&) {
                 const auto t = induced(m);
                 if (auto why = lv_comparison_precondition(m, t)) {
                   throw Error(ErrorKind::PreconditionViolated, *why);
                 }
                 const LvEquivalence sides = lv_equivalence_sides(m, t);
                 json d{{"lower_vietoris", sides.lower_vietoris}, {"closure_criterion", sides.closure_criterion}};
                 if (!sides.agree()) return fail(d);
                 return ok(d);
               },
               {},
               false});

  r.push_back({"C-KUR",
               "under the same hypotheses, the closure operators of O and of the lower Vietoris "
               "topology agree on singletons iff they agree on all subsets of M",
               {generating(), induced_t1(), closed_base_of_induced(), at_most_members(20)},
               [](const Model& m, const PropertyContext&) {
                 const KuratowskiTransfer k = kuratowski_singleton_transfer(m, induced(m));
                 json d{{"singletons_agree", k.singletons_agree}, {"all_subsets_agree", k.all_subsets_agree}};
                 if (!k.holds()) return fail(d);
                 return ok(d);
               },
               {},
               false});

  r.push_back({"P-T0",
               "(M, O) is T0 iff any two members are separated by some U in P_O met by one "
               "and missed by the other",
               {generating()},
               [](const Model& m, const PropertyContext&) {
                 const HyperTopology o = build_lvt(m);
                 const SetFamily p = extract_PO(o, m);
                 bool literal = true;
                 for (std::size_t i = 0; i < m.member_count() && literal; ++i) {
                   for (std::size_t j = i + 1; j < m.member_count() && literal; ++j) {
                     bool separated = false;
                     for (PointSet u : p) {
                       if (m.member(i).meets(u) != m.member(j).meets(u)) separated = true;
                     }
                     literal = separated;
                   }
                 }
                 const bool t0 = separation(o.topology).t0;
                 json d{{"t0", t0}, {"separated_by_P_O", literal}};
                 if (t0 != literal) return fail(d);
                 return ok(d);
               },
               {},
               false});

  r.push_back({"P-T1",
               "for natural M, (M, O) is T1 iff M consists of the singletons and T_O is T1",
               {natural(), generating()},
               [](const Model& m, const PropertyContext&) {
                 const T1Characterization c = t1_characterization(m, build_lvt(m));
                 json d{{"hyperspace_t1", c.hyperspace_t1}, {"singletons_and_induced_t1", c.singletons_and_induced_t1}};
                 if (!c.holds()) return fail(d);
                 return ok(d);
               },
               {},
               false});

  r.push_back({"P2.16",
               "for natural M, U⁻ equals a union of intersections of lower hits iff U is the "
               "matching union of intersections and every member hitting all factors of a "
               "term hits U",
               {natural(), at_most_points(3), at_most_generators(3)},
               [](const Model& m, const PropertyContext&) {
                 const SetFamily& s = m.gen_family();
                 std::vector<SetFamily> tuples;
                 for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << s.size()); ++mask) {
                   std::vector<PointSet> t;
                   for (std::size_t i = 0; i < s.size(); ++i) {
                     if ((mask >> i) & 1U) t.push_back(s[i]);
                   }
                   tuples.emplace_back(std::move(t));
                 }
                 std::vector<std::vector<std::size_t>> reps{{}};
                 for (std::size_t i = 0; i < tuples.size(); ++i) {
                   reps.push_back({i});
                   for (std::size_t j = i; j < tuples.size(); ++j) reps.push_back({i, j});
                 }
                 std::size_t checked = 0;
                 std::optional<json> bad;
                 for_each_subset(m.ground(), [&](PointSet u) {
                   for (const auto& rep : reps) {
                     if (bad) return;
                     ++checked;
                     HyperSet hits;
                     PointSet sets;
                     bool cond2 = true;
                     for (std::size_t t : rep) {
                       HyperSet term = m.all_members();
                       PointSet meet = m.ground();
                       for (PointSet f : tuples[t]) {
                         term &= lower_hit(f, m);
                         meet &= f;
                       }
                       hits |= term;
                       sets |= meet;
                       for (PointSet mem : m.m_family()) {
                         bool meets_all = true;
                         for (PointSet f : tuples[t]) meets_all = meets_all && mem.meets(f);
                         if (meets_all && !mem.meets(u)) cond2 = false;
                       }
                     }
                     const bool lhs = lower_hit(u, m) == hits;
                     const bool rhs = u == sets && cond2;
                     if (lhs != rhs) {
                       json terms = json::array();
                       for (std::size_t t : rep) terms.push_back(io::family_labels(tuples[t], m));
                       bad = json{{"U", io::labels(u, m)}, {"terms", terms}, {"hit_equality", lhs}, {"conditions", rhs}};
                     }
                   }
                 });
                 if (bad) return fail(*bad);
                 return ok({{"representations", checked}});
               },
               {},
               false});

  r.push_back({"P2.18",
               "the intersection of M⁻-closed families is M⁻-closed",
               {at_most_points(3)},
               [](const Model& m, const PropertyContext&) {
                 const SetFamily base = m_closure(m.gen_family(), m);
                 for (const SetFamily& w : m_closed_families(m)) {
                   const SetFamily meet = intersection(base, w);
                   if (!is_m_closed(meet, m).closed) {
                     return fail({{"V", io::family_labels(base, m)}, {"W", io::family_labels(w, m)}});
                   }
                 }
                 return ok();
               },
               {},
               false});

  r.push_back({"C2.19",
               "M⁻(S) is the least M⁻-closed family containing S",
               {at_most_points(3)},
               [](const Model& m, const PropertyContext&) {
                 const SetFamily c = m_closure(m.gen_family(), m);
                 if (!is_m_closed(c, m).closed) return fail({{"not_closed", io::family_labels(c, m)}});
                 if (!m.gen_family().subset_of(c)) return fail({{"misses_S", io::family_labels(c, m)}});
                 std::size_t above = 0;
                 for (const SetFamily& w : m_closed_families(m)) {
                   if (!m.gen_family().subset_of(w)) continue;
                   ++above;
                   if (!c.subset_of(w)) {
                     return fail({{"closure", io::family_labels(c, m)}, {"smaller_closed", io::family_labels(w, m)}});
                   }
                 }
                 return ok({{"closure", io::family_labels(c, m)}, {"closed_families_above", above}});
               },
               [](const Model& m, const PropertyContext&, const json&) {
                 const SetFamily c = naive::m_closure(m.gen_family(), m, static_cast<unsigned>(std::max<std::size_t>(1, 1U << m.point_count())));
                 return c != m_closure(m.gen_family(), m);
               },
               false});

  r.push_back({"P2.20",
               "for natural M and a cover S of X, P_O is M⁻-closed and equals M⁻(V) for every "
               "V between S and P_O",
               {natural(), covering()},
               [](const Model& m, const PropertyContext&) {
                 const HyperTopology o = build_lvt(m);
                 const SetFamily p = extract_PO(o, m);
                 if (!is_m_closed(p, m).closed) return fail({{"P_O_not_closed", io::family_labels(p, m)}});
                 const SetFamily from_s = m_closure(m.gen_family(), m);
                 if (from_s != p) {
                   return fail({{"V", io::family_labels(m.gen_family(), m)}, {"P_O", io::family_labels(p, m)},
                                {"closure", io::family_labels(from_s, m)}});
                 }
                 const SetFamily top = nonempty_part(p);
                 if (m_closure(top, m) != p) {
                   return fail({{"V", io::family_labels(top, m)}, {"P_O", io::family_labels(p, m)}});
                 }
                 return ok({{"P_O", io::family_labels(p, m)}});
               },
               [](const Model& m, const PropertyContext&, const json&) {
                 const SetFamily p = naive::p_o(m, naive::hyper_opens(m, m.gen_family()));
                 const auto len = static_cast<unsigned>(p.size());
                 return naive::m_closure(m.gen_family(), m, len) != p ||
                        naive::m_closure(nonempty_part(p), m, len) != p;
               },
               false});

  r.push_back({"C2.21",
               "for natural M and covers U, V of X: O_U = O_V iff P_O agree iff M⁻(U) = M⁻(V)",
               {natural(), covering(), at_most_points(3)},
               [](const Model& m, const PropertyContext&) {
                 const HyperTopology ou = build_lvt(m);
                 const SetFamily pu = extract_PO(ou, m);
                 std::size_t compared = 0;
                 std::optional<json> bad;
                 for_each_family(m.point_count(), [&](const SetFamily& v) {
                   if (bad || v.contains(PointSet{}) || !covers(v, m.ground())) return;
                   ++compared;
                   const HyperTopology ov = build_lvt(m, v);
                   const bool direct = ou == ov;
                   const bool po = pu == extract_PO(ov, m);
                   const bool closure = equivalence_by_closure(m.gen_family(), v, m);
                   if (direct != po || po != closure) {
                     bad = json{{"V", io::family_labels(v, m)}, {"open_sets", direct}, {"P_O", po}, {"m_closure", closure}};
                   }
                 });
                 if (bad) return fail(*bad);
                 return ok({{"covers_compared", compared}});
               },
               [](const Model& m, const PropertyContext&, const json& d) {
                 SetFamily v;
                 for (const auto& member : d.at("V")) v = v.with(points_from_labels(member, m));
                 const auto ou = naive::hyper_opens(m, m.gen_family());
                 const auto ov = naive::hyper_opens(m, v);
                 const bool direct = ou == ov;
                 const bool po = naive::p_o(m, ou) == naive::p_o(m, ov);
                 const unsigned len = 1U << m.point_count();
                 const bool closure = naive::m_closure(m.gen_family(), m, len) == naive::m_closure(v, m, len);
                 return direct != po || po != closure;
               },
               false});

  r.push_back({"C2.22",
               "for natural M, every base of a topology T on X generates the lower Vietoris "
               "topology of T",
               {natural(), at_most_points(3)},
               [](const Model& m, const PropertyContext&) {
                 std::size_t bases = 0;
                 for (const auto& t : topologies_on<PointSet>(m.point_count())) {
                   const HyperTopology lv = build_lower_vietoris(m, t);
                   const SetFamily nonempty_opens = nonempty_part(t.opens());
                   const std::vector<PointSet> pool(nonempty_opens.begin(), nonempty_opens.end());
                   for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pool.size()); ++mask) {
                     std::vector<PointSet> chosen;
                     for (std::size_t i = 0; i < pool.size(); ++i) {
                       if ((mask >> i) & 1U) chosen.push_back(pool[i]);
                     }
                     bool is_base = true;
                     for (PointSet o : pool) {
                       PointSet u;
                       for (PointSet b : chosen) {
                         if (b.subset_of(o)) u |= b;
                       }
                       if (u != o) is_base = false;
                     }
                     if (!is_base) continue;
                     ++bases;
                     const SetFamily b(std::move(chosen));
                     if (!(build_lvt(m, b) == lv)) {
                       return fail({{"T", io::topology_to_json(t)}, {"base", io::family_labels(b, m)}});
                     }
                   }
                 }
                 return ok({{"bases", bases}});
               },
               {},
               false});

  r.push_back({"A2.23-finite",
               "some M⁻-closed cover V yields a lower-Vietoris-type O_V that differs from the "
               "lower Vietoris topology of its induced topology and of every topology on X",
               {fin_in_m(2), covering(), at_most_points(4)},
               [](const Model& m, const PropertyContext&) {
                 const SetFamily v = m_closure(m.gen_family(), m);
                 const HyperTopology o = build_lvt(m, nonempty_part(v));
                 const bool closed = is_m_closed(v, m).closed;
                 const bool lvt = is_lower_vietoris_type(o, m);
                 const auto t = induced_topology(o, m);
                 const HyperTopology lv = build_lower_vietoris(m, t);
                 const bool differs = !(lv == o);
                 json discriminating = nullptr;
                 for (PointSet a : t.opens()) {
                   if (!o.topology.is_open(lower_hit(a, m))) {
                     discriminating = io::labels(a, m);
                     break;
                   }
                 }
                 bool none_matches = true;
                 for (const auto& t2 : topologies_on<PointSet>(m.point_count())) {
                   if (build_lower_vietoris(m, t2) == o) none_matches = false;
                 }
                 json d{{"V", io::family_labels(v, m)},
                        {"m_closed", closed},
                        {"lower_vietoris_type", lvt},
                        {"differs_from_induced_lower_vietoris", differs},
                        {"discriminating_open", discriminating},
                        {"no_topology_matches", none_matches}};
                 if (closed && lvt && differs && none_matches) return ok(d);
                 return fail(d);
               },
               {},
               true});

  r.push_back({"P2.24",
               "when X ∈ M, {X} is dense, (M, O) is connected, and open dense sets have dense "
               "intersection",
               {x_in_m(), generating()},
               [](const Model& m, const PropertyContext&) {
                 const SeparabilityReport s = hyper_separability_report(m, build_lvt(m));
                 json d{{"x_dense", s.x_dense}, {"connected", s.connected}, {"dense_intersection", s.dense_intersection}};
                 if (!s.all()) return fail(d);
                 return ok(d);
               },
               [](const Model& m, const PropertyContext&, const json&) {
                 const auto opens = naive::hyper_opens(m, m.gen_family());
                 const auto k = static_cast<unsigned>(m.member_count());
                 const auto x = static_cast<unsigned>(*m.m_family().index_of(m.ground()));
                 return naive::closure(opens, k, HyperSet::singleton(x)) != m.all_members();
               },
               false});

  r.push_back({"P2.26",
               "for natural M, x ↦ {x} embeds (X, T_O) into (M, O); the image is closed when "
               "T_O is T2 and then nowhere dense when |X| > 1 and X ∈ M",
               {natural(), generating()},
               [](const Model& m, const PropertyContext&) {
                 const PhiCertificate c = phi_map(m, build_lvt(m));
                 json d{{"continuous", c.continuous}, {"embedding", c.embedding}, {"induced_t2", c.induced_t2}};
                 if (c.image_closed) d["image_closed"] = *c.image_closed;
                 if (c.nowhere_dense) d["nowhere_dense"] = *c.nowhere_dense;
                 const bool needs_nd = c.induced_t2 && m.point_count() > 1 && m.m_family().contains(m.ground());
                 const bool good = c.continuous && c.embedding && (!c.induced_t2 || c.image_closed.value_or(false)) &&
                                   (!needs_nd || c.nowhere_dense.value_or(false));
                 if (!good) return fail(d);
                 return ok(d);
               },
               {},
               false});

  r.push_back({"P2.27",
               "when Fin(X) ⊆ M, every non-empty basic open set contains a finite member built "
               "from one point per factor",
               {fin_in_m(std::nullopt), generating()},
               [](const Model& m, const PropertyContext&) {
                 const HyperTopology o = build_lvt(m);
                 const FinDenseReport r2 = check_fin_dense(m, o);
                 if (!r2.holds) {
                   for (const auto& w : r2.witnesses) {
                     const auto idx = m.m_family().index_of(w.witness);
                     if (!idx || !w.basic_open.contains(static_cast<unsigned>(*idx)) ||
                         w.witness.size() > w.factors.size()) {
                       return fail({{"basic_open", hyper_json(w.basic_open, m)}, {"witness", io::labels(w.witness, m)}});
                     }
                   }
                   return fail({{"report", "failed"}});
                 }
                 return ok({{"basic_opens", r2.witnesses.size()}});
               },
               {},
               false});

  r.push_back({"P3.1",
               "for f with f⁻¹(P') ⊆ P, the map C ↦ cl f(C) from (M, O_P) to (CL(X'), O_P') is "
               "continuous",
               {covering(), generating(), at_most_points(3)},
               [](const Model& m, const PropertyContext& ctx) {
                 std::vector<Model> targets{closed_model(m)};
                 if (!ctx.point_map) {
                   for (unsigned k = 1; k <= 2; ++k) {
                     for (const auto& t : topologies_on<PointSet>(k)) {
                       targets.emplace_back(k, closed_family(t), nonempty_part(t.opens()));
                     }
                   }
                 }
                 std::size_t lifted = 0;
                 for (const Model& target : targets) {
                   auto visit = [&](const PointMap& f) -> std::optional<json> {
                     if (!preimages_in_subbase(f, m, target)) return std::nullopt;
                     ++lifted;
                     if (!lift_map(f, m, target).continuous) {
                       return json{{"map", f.table}, {"target", io::model_to_json(target)}};
                     }
                     return std::nullopt;
                   };
                   if (ctx.point_map) {
                     if (auto bad = visit(*ctx.point_map)) return fail(*bad);
                     continue;
                   }
                   std::optional<json> bad;
                   for_each_map(m.point_count(), target.point_count(), [&](const std::vector<std::size_t>& t) {
                     if (!bad) bad = visit(PointMap{t});
                   });
                   if (bad) return fail(*bad);
                 }
                 return ok({{"lifted_maps", lifted}});
               },
               {},
               false});

  r.push_back({"P3.2",
               "2^id is the identity on (CL(X), O_P) and 2^(g∘f) = 2^g ∘ 2^f",
               {covering(), generating(), at_most_points(3)},
               [](const Model& m, const PropertyContext&) {
                 const Model cl = closed_model(m);
                 if (!check_identity_law(cl)) return fail({{"law", "identity"}});
                 const auto maps = subbase_respecting_self_maps(m);
                 std::size_t pairs = 0;
                 for (const PointMap& f : maps) {
                   for (const PointMap& g : maps) {
                     ++pairs;
                     if (!check_functor_laws(f, g, m, cl, cl)) {
                       return fail({{"law", "composition"}, {"f", f.table}, {"g", g.table}});
                     }
                   }
                 }
                 return ok({{"pairs", pairs}});
               },
               {},
               false});

  r.push_back({"P3.3",
               "with X T2, X' T1 and M natural, if 2^f is a closed map then f is closed",
               {natural(), covering(), subbase_t2(), at_most_points(3)},
               [](const Model& m, const PropertyContext& ctx) {
                 const Model cl = closed_model(m);
                 std::size_t holds = 0;
                 std::size_t vacuous = 0;
                 std::vector<PointMap> maps =
                     ctx.point_map ? std::vector<PointMap>{*ctx.point_map} : subbase_respecting_self_maps(m);
                 for (const PointMap& f : maps) {
                   switch (check_closed_reflection(f, m, cl)) {
                     case Reflection::Holds: ++holds; break;
                     case Reflection::Vacuous: ++vacuous; break;
                     case Reflection::Violated: return fail({{"map", f.table}});
                   }
                 }
                 return ok({{"implication_holds", holds}, {"lift_not_closed", vacuous}});
               },
               {},
               false});

  r.push_back({"T3.4",
               "with X ∈ P, F ↦ cl_X F embeds (CL(A), O_{P_A}) into (CL(X), O_P) for every "
               "non-empty A ⊆ X",
               {x_in_subbase(), at_most_points(4)},
               [](const Model& m, const PropertyContext&) {
                 std::optional<json> bad;
                 for_each_subset(m.ground(), [&](PointSet a) {
                   if (bad || a.empty()) return;
                   const SubspaceEmbedding e = subspace_embedding(a, m);
                   if (!e.injective || !e.continuous || !e.embedding) {
                     bad = json{{"A", io::labels(a, m)}, {"injective", e.injective},
                                {"continuous", e.continuous}, {"embedding", e.embedding}};
                   }
                 });
                 if (bad) return fail(*bad);
                 return ok();
               },
               {},
               false});

  r.push_back({"P-compact",
               "for natural M and T2 induced topology, (X, T_O) and (M, O) are both compact, "
               "each with a finite subcover of its minimal base",
               {natural(), generating(), induced_t2()},
               [](const Model& m, const PropertyContext&) {
                 const HyperTopology o = build_lvt(m);
                 const auto cx = is_compact_certified(induced_topology(o, m));
                 const auto cm = is_compact_certified(o.topology);
                 const bool x_ok = cx.compact && Family<PointSet>(cx.subcover).union_all() == m.ground();
                 const bool m_ok = cm.compact && Family<HyperSet>(cm.subcover).union_all() == m.all_members();
                 json d{{"X_compact", x_ok}, {"M_compact", m_ok}};
                 if (x_ok != m_ok || !x_ok) return fail(d);
                 return ok(d);
               },
               {},
               false});

  r.push_back({"P-weight",
               "for natural M and O the lower Vietoris topology of T = ⟨S⟩, w(X) ≤ w(M, O) ≤ "
               "|(B⁻)^∩| for the minimal base B of T, and B⁻ generates O",
               {natural()},
               [](const Model& m, const PropertyContext&) {
                 const auto t = subbase_topology(m);
                 const HyperTopology o = build_lower_vietoris(m, t);
                 const SetFamily b = minimal_base(t);
                 const std::size_t wx = weight(t);
                 const std::size_t wm = weight(o.topology);
                 const std::size_t bound = hit_intersections(m, b).size();
                 const bool generates = hit_topology(m, b) == o.topology;
                 json d{{"w_X", wx}, {"w_M", wm}, {"hit_intersections", bound}, {"base_generates", generates}};
                 if (!(wx <= wm && wm <= bound && generates)) return fail(d);
                 return ok(d);
               },
               [](const Model& m, const PropertyContext&, const json& d) {
                 const auto t = subbase_topology(m);
                 const auto x_opens = naive::opens(m.point_count(), std::vector<PointSet>(m.gen_family().begin(), m.gen_family().end()));
                 const auto m_opens = naive::hyper_opens(m, nonempty_part(x_opens));
                 const auto wx = naive::weight(x_opens);
                 const auto wm = naive::weight(m_opens);
                 if (!wx || !wm) return d.at("w_X").get<std::size_t>() > d.at("w_M").get<std::size_t>() ||
                                        d.at("w_M").get<std::size_t>() > d.at("hit_intersections").get<std::size_t>() ||
                                        !d.at("base_generates").get<bool>();
                 return *wx > *wm || *wm > d.at("hit_intersections").get<std::size_t>() ||
                        naive::hyper_opens(m, minimal_base(t)) != m_opens;
               },
               false});

  r.push_back({"P5.4",
               "when every member of M is the complement of a subbase member, the closure of "
               "each member is the set of members inside it",
               {nonempty_m(), complements_subbase(), generating()},
               [](const Model& m, const PropertyContext&) {
                 const HyperTopology o = build_lvt(m);
                 for (PointSet f : m.m_family()) {
                   if (!closure_vs_upper(o, m, f).equal) return fail({{"F", io::labels(f, m)}});
                 }
                 return ok();
               },
               [](const Model& m, const PropertyContext&, const json& d) {
                 const auto opens = naive::hyper_opens(m, m.gen_family());
                 const PointSet f = points_from_labels(d.at("F"), m);
                 const auto idx = m.m_family().index_of(f);
                 if (!idx) return false;
                 return naive::closure(opens, static_cast<unsigned>(m.member_count()),
                                       HyperSet::singleton(static_cast<unsigned>(*idx))) != upper_sub(f, m);
               },
               false});

  r.push_back({"T5.5",
               "when M is non-empty, contains X, and consists of complements of subbase "
               "members, every continuous self-map of (M, O) has a fixed point",
               {nonempty_m(), x_in_m(), complements_subbase(), generating(), at_most_members(5)},
               [](const Model& m, const PropertyContext& ctx) {
                 std::optional<HyperMap> only = ctx.hyper_map;
                 if (!only && ctx.point_map) only = closure_self_map(*ctx.point_map, m);
                 return all_self_maps_fix(m, build_lvt(m).topology, only);
               },
               [](const Model& m, const PropertyContext&, const json& d) {
                 return recheck_fixed_point_failure(m, naive::hyper_opens(m, m.gen_family()), d);
               },
               false});

  r.push_back({"C5.8",
               "for T2 (X, T), X ∈ M ⊆ CL(X), every continuous self-map of (M, O_T) has a "
               "fixed point",
               {subbase_t2(), x_in_m(), at_most_members(5)},
               [](const Model& m, const PropertyContext& ctx) {
                 const auto t = subbase_topology(m);
                 const Model with_opens = m.with_generators(nonempty_part(t.opens()));
                 return all_self_maps_fix(with_opens, build_lvt(with_opens).topology, ctx.hyper_map);
               },
               [](const Model& m, const PropertyContext&, const json& d) {
                 const auto t = subbase_topology(m);
                 return recheck_fixed_point_failure(m, naive::hyper_opens(m, nonempty_part(t.opens())), d);
               },
               false});

  r.push_back({"C5.9",
               "for connected (X, T), M the non-empty closed connected sets and P containing "
               "their complements, every continuous self-map of (M, O_P) has a fixed point",
               {subbase_connected(), at_most_points(3)},
               [](const Model& m, const PropertyContext&) {
                 const auto t = subbase_topology(m);
                 const SetFamily k = closed_connected_family(t);
                 SetFamily p = m.gen_family();
                 for (PointSet c : k) {
                   if (c != m.ground()) p = p.with(c.complement(m.point_count()));
                 }
                 const Model model(m.point_names(), k, p);
                 Outcome out = all_self_maps_fix(model, build_lvt(model).topology, std::nullopt);
                 out.detail["M"] = io::family_labels(k, m);
                 return out;
               },
               [](const Model& m, const PropertyContext&, const json& d) {
                 const auto t = subbase_topology(m);
                 const SetFamily k = closed_connected_family(t);
                 SetFamily p = m.gen_family();
                 for (PointSet c : k) {
                   if (c != m.ground()) p = p.with(c.complement(m.point_count()));
                 }
                 const Model model(m.point_names(), k, p);
                 return recheck_fixed_point_failure(model, naive::hyper_opens(model, p), d);
               },
               false});

  r.push_back({"C5.10",
               "every continuous self-map f of a connected space has a closed connected K with "
               "cl f(K) = K, and f(K) = K whenever f(K) is closed",
               {subbase_connected(), at_most_points(3)},
               [](const Model& m, const PropertyContext& ctx) {
                 const auto t = subbase_topology(m);
                 const SetFamily ccf = closed_connected_family(t);
                 std::size_t maps = 0;
                 std::size_t closure_only = 0;
                 json finding = nullptr;
                 std::optional<json> bad;
                 auto visit = [&](const std::vector<std::size_t>& table) {
                   if (bad) return;
                   ++maps;
                   const PointMap f{table};
                   const InvariantSet inv = invariant_connected_set(f, t);
                   const PointSet image = image_of<PointSet, PointSet>(inv.k, table);
                   if (t.closure(image) != inv.k || !ccf.contains(inv.k) || (inv.image_closed && !inv.exact)) {
                     bad = json{{"map", table}, {"K", io::labels(inv.k, m)}};
                     return;
                   }
                   bool exact_exists = false;
                   for (PointSet k : ccf) {
                     if (image_of<PointSet, PointSet>(k, table) == k) exact_exists = true;
                   }
                   if (!exact_exists) {
                     ++closure_only;
                     if (finding.is_null()) finding = json{{"map", table}, {"K", io::labels(inv.k, m)}};
                   }
                 };
                 if (ctx.point_map) {
                   visit(ctx.point_map->table);
                 } else {
                   for_each_continuous_map(t, t, visit);
                 }
                 if (bad) return fail(*bad);
                 json d{{"continuous_maps", maps}, {"maps_without_exact_invariant_set", closure_only}};
                 if (!finding.is_null()) d["example_without_exact_invariant_set"] = finding;
                 return ok(d);
               },
               {},
               false});

  r.push_back({"P5.1-dense-point",
               "for natural M with X ∈ M, the closure of {X} is all of M",
               {natural(), x_in_m(), generating()},
               [](const Model& m, const PropertyContext&) {
                 if (!dense_point_report(m, build_lvt(m))) return fail({{"dense", false}});
                 return ok();
               },
               [](const Model& m, const PropertyContext&, const json&) {
                 const auto opens = naive::hyper_opens(m, m.gen_family());
                 const auto x = static_cast<unsigned>(*m.m_family().index_of(m.ground()));
                 return naive::closure(opens, static_cast<unsigned>(m.member_count()), HyperSet::singleton(x)) !=
                        m.all_members();
               },
               false});

  return r;
}

inline bool hypothesis_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotGenerating:
    case ErrorKind::NotNatural:
    case ErrorKind::NotCovering:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::HypothesisFailed:
    case ErrorKind::TargetNotCL:
    case ErrorKind::SubbaseMissingX:
    case ErrorKind::EmptySubspace:
    case ErrorKind::NotContinuous:
    case ErrorKind::NotConnected:
      return true;
    default:
      return false;
  }
}

}  // namespace harness_detail

inline const std::vector<Property>& registry() {
  static const std::vector<Property> r = harness_detail::build_registry();
  return r;
}

inline const Property& find_property(const std::string& id) {
  for (const Property& p : registry()) {
    if (p.id == id) return p;
  }
  throw Error(ErrorKind::UnknownProperty, "'" + id + "'");
}

/// Checks one property on one model. Hypotheses are tested first (except the
/// dropped one, if any); a failure of the conclusion is re-verified along an
/// independent route and reported as an engine bug if that route disagrees.
inline Report run_property(const std::string& id, const Model& model, const PropertyContext& ctx = {},
                           const std::optional<std::string>& drop = std::nullopt) {
  const Property& p = find_property(id);
  Report report{p.id, p.statement, 0, 0, Verdict::Vacuous, nullptr};
  if (drop && std::none_of(p.hypotheses.begin(), p.hypotheses.end(),
                           [&](const Hypothesis& h) { return h.name == *drop; })) {
    throw Error(ErrorKind::InvalidInput, p.id + " has no hypothesis named '" + *drop + "'");
  }
  for (const Hypothesis& h : p.hypotheses) {
    if (drop && h.name == *drop) continue;
    if (!h.holds(model)) {
      report.models_vacuous = 1;
      report.witness = {{"failed_hypothesis", h.name}};
      return report;
    }
  }
  Outcome outcome;
  try {
    outcome = p.check(model, ctx);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EngineBug) {
      report.models_checked = 1;
      report.verdict = Verdict::EngineBug;
      report.witness = {{"model", io::model_to_json(model)}, {"error", e.what()}};
      return report;
    }
    if (!harness_detail::hypothesis_error(e.kind())) throw;
    report.models_vacuous = 1;
    report.witness = {{"failed_hypothesis", e.what()}};
    return report;
  }
  report.models_checked = 1;
  if (outcome.holds) {
    report.verdict = Verdict::Pass;
    if (!outcome.detail.is_null()) report.witness = {{"detail", outcome.detail}};
    return report;
  }
  if (p.existential) {
    report.models_checked = 0;
    report.models_vacuous = 1;
    report.witness = {{"exhibits", false}, {"detail", outcome.detail}};
    return report;
  }
  bool confirmed = false;
  try {
    if (p.recheck) {
      confirmed = p.recheck(model, ctx, outcome.detail);
    } else {
      std::vector<std::string> warnings;
      const Model rebuilt = io::model_from_json(io::model_to_json(model), warnings);
      confirmed = !p.check(rebuilt, ctx).holds;
    }
  } catch (const Error&) {
    confirmed = false;
  }
  report.verdict = confirmed ? Verdict::Counterexample : Verdict::EngineBug;
  report.witness = {{"model", io::model_to_json(model)}, {"detail", outcome.detail}};
  if (drop) report.witness["dropped_hypothesis"] = *drop;
  return report;
}

/// Runs a property over every model within the bounds, in parallel, and
/// merges in enumeration order: an engine bug outranks a counterexample,
/// which outranks a pass; a sweep where every model is vacuous is vacuous.
/// Existential properties pass as soon as one model exhibits them.
inline Report sweep(const std::string& id, const ModelBounds& bounds,
                    const std::optional<std::string>& drop = std::nullopt, unsigned threads = 0) {
  const Property& p = find_property(id);
  const std::vector<Model> models = enumerate_models(bounds);
  std::vector<Report> reports(models.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  auto work = [&] {
    for (std::size_t i = next++; i < models.size(); i = next++) {
      try {
        reports[i] = run_property(id, models[i], {}, drop);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = models.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  Report out{p.id, p.statement, 0, 0, Verdict::Vacuous, nullptr};
  const Report* first_bug = nullptr;
  const Report* first_counter = nullptr;
  const Report* first_example = nullptr;
  for (const Report& r : reports) {
    out.models_checked += r.models_checked;
    out.models_vacuous += r.models_vacuous;
    if (r.verdict == Verdict::EngineBug && !first_bug) first_bug = &r;
    if (r.verdict == Verdict::Counterexample && !first_counter) first_counter = &r;
    if (r.verdict == Verdict::Pass && !first_example) first_example = &r;
  }
  if (first_bug) {
    out.verdict = Verdict::EngineBug;
    out.witness = first_bug->witness;
  } else if (first_counter) {
    out.verdict = Verdict::Counterexample;
    out.witness = first_counter->witness;
  } else if (p.existential) {
    out.verdict = first_example ? Verdict::Pass : Verdict::Counterexample;
    if (first_example) {
      const std::size_t i = static_cast<std::size_t>(first_example - reports.data());
      out.witness = {{"model", io::model_to_json(models[i])}, {"detail", first_example->witness.value("detail", json())}};
    } else {
      out.witness = {{"exhibits", false}};
    }
  } else if (out.models_checked > 0) {
    out.verdict = Verdict::Pass;
  }
  if (drop) {
    if (out.witness.is_null()) out.witness = json::object();
    out.witness["dropped_hypothesis"] = *drop;
  }
  return out;
}

/// A sweep aimed at refuting the property, optionally with one hypothesis
/// dropped to probe whether it is needed.
inline Report search_counterexample(const std::string& id, const ModelBounds& bounds,
                                    const std::optional<std::string>& negate_hypothesis = std::nullopt) {
  return sweep(id, bounds, negate_hypothesis);
}

}  // namespace hyperlab
