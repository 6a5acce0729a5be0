#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlab/error.hpp"
#include "hyperlab/hyperspace.hpp"
#include "hyperlab/setcore.hpp"
#include "hyperlab/topology.hpp"

namespace hyperlab {

/// A map X → X' given by its table: point x goes to table[x].
struct PointMap {
  std::vector<std::size_t> table;
  friend bool operator==(const PointMap&, const PointMap&) = default;
};

/// A map M → M' on canonical member indices.
struct HyperMap {
  std::vector<std::size_t> table;
  friend bool operator==(const HyperMap&, const HyperMap&) = default;
};

/// Continuity of a map between finite spaces, decided twice: by preimages of
/// the target subbase (which must generate the target) and by preimages of
/// every open set. Disagreement is an engine bug.
template <class From, class To>
bool is_continuous(const std::vector<std::size_t>& table, const Topology<From>& src,
                   const Topology<To>& tgt, const std::vector<To>& subbase) {
  if (table.size() != src.carrier_size()) {
    throw Error(ErrorKind::InvalidInput, "map table does not match the source carrier");
  }
  for (std::size_t y : table) {
    if (y >= tgt.carrier_size()) throw Error(ErrorKind::InvalidInput, "map leaves the target");
  }
  if (!(generate_topology(tgt.carrier_size(), subbase) == tgt)) {
    throw Error(ErrorKind::PreconditionViolated, "subbase does not generate the target topology");
  }
  bool by_subbase = true;
  for (To s : subbase) {
    if (!src.is_open(preimage_of<From, To>(s & tgt.carrier(), table))) by_subbase = false;
  }
  bool by_opens = true;
  for (To o : tgt.opens()) {
    if (!src.is_open(preimage_of<From, To>(o, table))) by_opens = false;
  }
  if (by_subbase != by_opens) {
    throw Error(ErrorKind::EngineBug, "subbase and open-set continuity checks disagree");
  }
  return by_opens;
}

/// Calls fn(table) for every continuous map src → tgt, found by backtracking
/// over the specialization preorders (continuous = order preserving).
template <class From, class To, class F>
void for_each_continuous_map(const Topology<From>& src, const Topology<To>& tgt, F&& fn) {
  const unsigned n = src.carrier_size();
  const unsigned m = tgt.carrier_size();
  std::vector<std::size_t> table(n, 0);
  if (n == 0) {
    fn(table);
    return;
  }
  if (m == 0) return;
  auto consistent = [&](unsigned x) {
    for (unsigned y = 0; y < x; ++y) {
      const auto fx = static_cast<unsigned>(table[x]);
      const auto fy = static_cast<unsigned>(table[y]);
      if (src.neighborhood(x).contains(y) && !tgt.neighborhood(fx).contains(fy)) return false;
      if (src.neighborhood(y).contains(x) && !tgt.neighborhood(fy).contains(fx)) return false;
    }
    return true;
  };
  unsigned x = 0;
  table[0] = 0;
  while (true) {
    if (table[x] < m && consistent(x)) {
      if (x + 1 == n) {
        fn(std::as_const(table));
        ++table[x];
      } else {
        table[++x] = 0;
      }
      continue;
    }
    if (table[x] < m) {
      ++table[x];
      continue;
    }
    if (x == 0) return;
    ++table[--x];
  }
}

/// All maps from an n-set into an m-set, in lexicographic order of tables.
template <class F>
void for_each_map(std::size_t n, std::size_t m, F&& fn) {
  std::vector<std::size_t> table(n, 0);
  if (m == 0 && n > 0) return;
  while (true) {
    fn(std::as_const(table));
    std::size_t k = 0;
    while (k < n && ++table[k] == m) table[k++] = 0;
    if (k == n) return;
  }
}

inline Topology<PointSet> subbase_topology(const Model& model) {
  return generate_topology(model.point_count(), model.gen_family());
}

inline std::vector<HyperSet> hit_subbase(const Model& model, const SetFamily& generators) {
  std::vector<HyperSet> out;
  for (PointSet a : generators) out.push_back(lower_hit(a, model));
  return out;
}

/// f⁻¹(P') ⊆ P, where an empty preimage is accepted since ∅⁻_M = ∅ is open
/// in every hypertopology.
inline bool preimages_in_subbase(const PointMap& f, const Model& source, const Model& target) {
  for (PointSet u : target.gen_family()) {
    const PointSet back = preimage_of<PointSet, PointSet>(u, f.table);
    if (!back.empty() && !source.gen_family().contains(back)) return false;
  }
  return true;
}

struct LiftedMap {
  HyperMap map;
  bool continuous = false;
};

/// The table of 2^f: C ↦ cl_{X'} f(C), with the hypotheses M' = CL(X') and
/// f⁻¹(P') ⊆ P enforced, where P and P' are the models' generating families.
inline HyperMap lift_table(const PointMap& f, const Model& source, const Model& target) {
  if (f.table.size() != source.point_count()) {
    throw Error(ErrorKind::InvalidInput, "map table does not match the source ground set");
  }
  for (std::size_t y : f.table) {
    if (y >= target.point_count()) throw Error(ErrorKind::InvalidInput, "map leaves the target");
  }
  const Topology<PointSet> t_target = subbase_topology(target);
  if (target.m_family() != closed_family(t_target)) {
    throw Error(ErrorKind::TargetNotCL, "target family is not CL(X')");
  }
  if (!preimages_in_subbase(f, source, target)) {
    throw Error(ErrorKind::HypothesisFailed, "f⁻¹(P') ⊄ P");
  }
  HyperMap out;
  for (PointSet c : source.m_family()) {
    const PointSet img = t_target.closure(image_of<PointSet, PointSet>(c, f.table));
    out.table.push_back(*target.m_family().index_of(img));
  }
  return out;
}

/// 2^f from (M, O_P) into (CL(X'), O_P') with its continuity certificate.
inline LiftedMap lift_map(const PointMap& f, const Model& source, const Model& target) {
  LiftedMap out{lift_table(f, source, target), false};
  out.continuous =
      is_continuous(out.map.table, build_lvt(source).topology, build_lvt(target).topology,
                    hit_subbase(target, target.gen_family()));
  return out;
}

/// K ↦ cl f(K) as a self-map of M, closures taken in the topology generated
/// by the model's own subbase. Every image closure must lie in M.
inline HyperMap closure_self_map(const PointMap& f, const Model& model) {
  if (f.table.size() != model.point_count()) {
    throw Error(ErrorKind::InvalidInput, "map table does not match the ground set");
  }
  for (std::size_t y : f.table) {
    if (y >= model.point_count()) throw Error(ErrorKind::InvalidInput, "map leaves the ground set");
  }
  const Topology<PointSet> t = subbase_topology(model);
  HyperMap out;
  for (PointSet k : model.m_family()) {
    const auto idx = model.m_family().index_of(t.closure(image_of<PointSet, PointSet>(k, f.table)));
    if (!idx) throw Error(ErrorKind::InvalidInput, "cl f(K) is not a member of M");
    out.table.push_back(*idx);
  }
  return out;
}

inline PointMap compose(const PointMap& g, const PointMap& f) {
  PointMap out;
  for (std::size_t x : f.table) out.table.push_back(g.table[x]);
  return out;
}

inline PointMap identity_map(std::size_t n) {
  PointMap out;
  for (std::size_t i = 0; i < n; ++i) out.table.push_back(i);
  return out;
}

/// 2^{g∘f} = 2^g ∘ 2^f, exact table equality. The middle and last models
/// must carry CL of their subbase topologies.
inline bool check_functor_laws(const PointMap& f, const PointMap& g, const Model& first,
                               const Model& middle, const Model& last) {
  const HyperMap lf = lift_table(f, first, middle);
  const HyperMap lg = lift_table(g, middle, last);
  const HyperMap lgf = lift_table(compose(g, f), first, last);
  for (std::size_t i = 0; i < lf.table.size(); ++i) {
    if (lg.table[lf.table[i]] != lgf.table[i]) return false;
  }
  return true;
}

/// 2^{id} = id on (CL(X), O_P).
inline bool check_identity_law(const Model& model) {
  return lift_table(identity_map(model.point_count()), model, model).table ==
         identity_map(model.member_count()).table;
}

enum class Reflection { Holds, Vacuous, Violated };

inline const char* to_string(Reflection r) {
  switch (r) {
    case Reflection::Holds: return "holds";
    case Reflection::Vacuous: return "vacuous";
    case Reflection::Violated: return "violated";
  }
  return "?";
}

/// If 2^f sends closed sets of (M, O) to closed sets of (CL(X'), O'), then f
/// sends closed sets of X to closed sets of X'. Only this direction is checked.
inline Reflection check_closed_reflection(const PointMap& f, const Model& source,
                                          const Model& target) {
  const Topology<PointSet> t = subbase_topology(source);
  const Topology<PointSet> t_target = subbase_topology(target);
  if (!separation(t).t2) throw Error(ErrorKind::HypothesisFailed, "source is not T2");
  if (!separation(t_target).t1) throw Error(ErrorKind::HypothesisFailed, "target is not T1");
  if (!is_natural(source)) throw Error(ErrorKind::HypothesisFailed, "M is not natural");
  if (!covers(source.gen_family(), source.ground()) ||
      !covers(target.gen_family(), target.ground())) {
    throw Error(ErrorKind::HypothesisFailed, "a subbase does not cover its space");
  }
  const HyperMap lifted = lift_table(f, source, target);
  const auto hyper_src = build_lvt(source).topology;
  const auto hyper_tgt = build_lvt(target).topology;
  bool lifted_closed = true;
  for (HyperSet c : hyper_src.closed_sets()) {
    if (!hyper_tgt.is_closed(image_of<HyperSet, HyperSet>(c, lifted.table))) {
      lifted_closed = false;
    }
  }
  if (!lifted_closed) return Reflection::Vacuous;
  for (PointSet c : t.closed_sets()) {
    if (!t_target.is_closed(image_of<PointSet, PointSet>(c, f.table))) return Reflection::Violated;
  }
  return Reflection::Holds;
}

struct SubspaceEmbedding {
  Model subspace;  // (A, CL(A), P_A), points of A renumbered in increasing order
  Model space;     // (X, CL(X), P)
  HyperMap map;    // F ↦ cl_X F
  bool injective = false;
  bool continuous = false;
  bool embedding = false;
};

/// i_{A,X}: (CL(A), O_{P_A}) → (CL(X), O_P), F ↦ cl_X F, with P the model's
/// generating family (which must contain X).
inline SubspaceEmbedding subspace_embedding(PointSet a, const Model& model) {
  if (!model.gen_family().contains(model.ground())) {
    throw Error(ErrorKind::SubbaseMissingX, "X is not a member of the subbase");
  }
  if (a.empty()) throw Error(ErrorKind::EmptySubspace, "A is empty");
  if (!a.subset_of(model.ground())) throw Error(ErrorKind::InvalidInput, "A is not a subset of X");
  const Topology<PointSet> t = subbase_topology(model);
  Model space(model.point_names(), closed_family(t), model.gen_family());

  const std::vector<unsigned> points = a.elements();
  auto to_local = [&](PointSet s) {
    PointSet out;
    for (unsigned i = 0; i < points.size(); ++i) {
      if (s.contains(points[i])) out.insert(i);
    }
    return out;
  };
  auto to_global = [&](PointSet s) {
    PointSet out;
    s.for_each([&](unsigned i) { out.insert(points[i]); });
    return out;
  };
  std::vector<std::string> names;
  for (unsigned p : points) names.push_back(model.point_names()[p]);
  std::vector<PointSet> traces;
  for (PointSet u : model.gen_family()) traces.push_back(to_local(u & a));
  const SetFamily p_a = nonempty_part(SetFamily(std::move(traces)));
  const auto local_count = static_cast<unsigned>(points.size());
  Model subspace(std::move(names), closed_family(generate_topology(local_count, p_a)), p_a);

  HyperMap map;
  for (PointSet f : subspace.m_family()) {
    map.table.push_back(*space.m_family().index_of(t.closure(to_global(f))));
  }
  const auto src = build_lvt(subspace).topology;
  const auto tgt = build_lvt(space).topology;
  SubspaceEmbedding out{std::move(subspace), std::move(space), map, true, false, false};
  for (std::size_t i = 0; i < map.table.size(); ++i) {
    for (std::size_t j = i + 1; j < map.table.size(); ++j) {
      if (map.table[i] == map.table[j]) out.injective = false;
    }
  }
  out.continuous = maps_continuously(src, tgt, map.table);
  out.embedding = is_embedding(src, tgt, map.table);
  return out;
}

/// The first hypothesis of the fixed-point theorem that the model fails, or
/// nullopt. X ∈ M is read as the complement of the subbase member ∅, which
/// every subbase may contain without changing the hypertopology.
inline std::optional<std::string> fixed_point_hypothesis_failure(const Model& model) {
  if (model.m_family().empty()) return "M non-empty";
  if (!model.m_family().contains(model.ground())) return "X in M";
  for (PointSet m : model.m_family()) {
    if (m != model.ground() && !model.gen_family().contains(m.complement(model.point_count()))) {
      return "M complements subbase";
    }
  }
  if (!check_generating(model)) return "S generates O";
  // A finite decreasing chain in M has its smallest element as intersection,
  // which is a member; the decreasing-intersection hypothesis always holds.
  return std::nullopt;
}

struct FixedPoint {
  std::size_t member = 0;
  std::vector<std::size_t> trace;  // K_0 = X, K_{n+1} = Ψ(K_n), up to stabilization
};

inline std::vector<std::size_t> brute_force_fixed_points(const HyperMap& psi) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < psi.table.size(); ++i) {
    if (psi.table[i] == i) out.push_back(i);
  }
  return out;
}

/// Iterates Ψ from X. Under the theorem's hypotheses Ψ(K) ⊆ K propagates
/// along the iteration, so the sequence decreases and stabilizes at a fixed
/// point.
inline FixedPoint find_fixed_point(const HyperMap& psi, const Model& model) {
  if (auto which = fixed_point_hypothesis_failure(model)) {
    throw Error(ErrorKind::HypothesisFailed, *which);
  }
  if (psi.table.size() != model.member_count()) {
    throw Error(ErrorKind::InvalidInput, "map table does not match M");
  }
  const auto o = build_lvt(model).topology;
  if (!is_continuous(psi.table, o, o, hit_subbase(model, model.gen_family()))) {
    throw Error(ErrorKind::NotContinuous, "Ψ is not continuous on (M, O)");
  }
  FixedPoint out;
  std::size_t k = *model.m_family().index_of(model.ground());
  out.trace.push_back(k);
  while (psi.table[k] != k) {
    k = psi.table[k];
    out.trace.push_back(k);
    if (out.trace.size() > model.member_count() + 1) {
      throw Error(ErrorKind::EngineBug, "fixed-point iteration did not stabilize");
    }
  }
  out.member = k;
  return out;
}

/// The non-empty closed connected subsets of (X, t).
inline SetFamily closed_connected_family(const Topology<PointSet>& t) {
  std::vector<PointSet> out;
  for (PointSet c : closed_family(t)) {
    if (is_connected_subset(t, c)) out.push_back(c);
  }
  return SetFamily(std::move(out));
}

struct InvariantSet {
  PointSet k;
  bool image_closed = false;  // f(K) is closed
  bool exact = false;         // f(K) = K
  FixedPoint fixed_point;
};

/// A non-empty closed connected K with cl f(K) = K, for a continuous self-map
/// f of a connected finite space, via the fixed point of K ↦ cl f(K) on the
/// family of closed connected sets.
inline InvariantSet invariant_connected_set(const PointMap& f, const Topology<PointSet>& t) {
  if (f.table.size() != t.carrier_size()) {
    throw Error(ErrorKind::InvalidInput, "map table does not match the space");
  }
  if (!maps_continuously(t, t, f.table)) throw Error(ErrorKind::NotContinuous, "f");
  if (!is_connected(t)) throw Error(ErrorKind::NotConnected, "X is not connected");
  Model model(t.carrier_size(), closed_connected_family(t), nonempty_part(t.opens()));
  HyperMap psi;
  for (PointSet k : model.m_family()) {
    psi.table.push_back(
        *model.m_family().index_of(t.closure(image_of<PointSet, PointSet>(k, f.table))));
  }
  InvariantSet out;
  out.fixed_point = find_fixed_point(psi, model);
  out.k = model.member(out.fixed_point.member);
  const PointSet image = image_of<PointSet, PointSet>(out.k, f.table);
  out.image_closed = t.is_closed(image);
  out.exact = image == out.k;
  return out;
}

/// closure({X}) = M in (M, O).
inline bool dense_point_report(const Model& model, const HyperTopology& h) {
  auto idx = model.m_family().index_of(model.ground());
  if (!idx) throw Error(ErrorKind::PreconditionViolated, "X is not a member of M");
  return h.topology.closure(HyperSet::singleton(static_cast<unsigned>(*idx))) ==
         model.all_members();
}

}  // namespace hyperlab
