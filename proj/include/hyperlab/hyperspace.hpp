#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hyperlab/error.hpp"
#include "hyperlab/setcore.hpp"
#include "hyperlab/topology.hpp"

namespace hyperlab {

enum class HyperKind { LowerVietoris, Generated, Explicit };

inline const char* to_string(HyperKind k) {
  switch (k) {
    case HyperKind::LowerVietoris: return "lower-Vietoris";
    case HyperKind::Generated: return "generated";
    case HyperKind::Explicit: return "explicit";
  }
  return "?";
}

/// A topology on the carrier M of a model, together with how it was obtained.
/// Two hypertopologies are equal when their open families are equal;
/// provenance is informational.
struct HyperTopology {
  Topology<HyperSet> topology;
  HyperKind kind = HyperKind::Explicit;
  SetFamily generators;

  friend bool operator==(const HyperTopology& a, const HyperTopology& b) {
    return a.topology == b.topology;
  }
};

/// Every member of M meets ⋃S, the condition for S⁻_M to be a subbase.
inline bool check_generating(const Model& model, const SetFamily& generators) {
  const PointSet u = generators.union_all();
  for (PointSet m : model.m_family()) {
    if (!m.meets(u)) return false;
  }
  return true;
}

inline bool check_generating(const Model& model) {
  return check_generating(model, model.gen_family());
}

/// The topology on M with subbase {A⁻_M : A ∈ generators}; no validity check.
inline Topology<HyperSet> hit_topology(const Model& model, const SetFamily& generators) {
  std::vector<HyperSet> subbase;
  subbase.reserve(generators.size());
  for (PointSet a : generators) subbase.push_back(lower_hit(a, model));
  return Topology<HyperSet>(static_cast<unsigned>(model.member_count()), std::move(subbase));
}

/// The lower-Vietoris-type topology on M generated by `generators`.
inline HyperTopology build_lvt(const Model& model, const SetFamily& generators) {
  if (!check_generating(model, generators)) {
    throw Error(ErrorKind::NotGenerating, "some member of M misses every generator");
  }
  return {hit_topology(model, generators), HyperKind::Generated, generators};
}

inline HyperTopology build_lvt(const Model& model) { return build_lvt(model, model.gen_family()); }

/// The lower Vietoris topology on M generated by a topology t on X: subbase
/// {U⁻_M : U open in t, U ≠ ∅}.
inline HyperTopology build_lower_vietoris(const Model& model, const Topology<PointSet>& t) {
  if (t.carrier_size() != model.point_count()) {
    throw Error(ErrorKind::InvalidInput, "topology and model have different ground sets");
  }
  SetFamily opens = nonempty_part(t.opens());
  return {hit_topology(model, opens), HyperKind::LowerVietoris, std::move(opens)};
}

inline HyperTopology explicit_hypertopology(const Model& model, const Family<HyperSet>& opens) {
  return {Topology<HyperSet>::from_opens(static_cast<unsigned>(model.member_count()), opens),
          HyperKind::Explicit, SetFamily{}};
}

/// P_O = {A ⊆ X : A⁻_M is open}, ∅ and X included whenever their hit sets are open.
inline SetFamily extract_PO(const HyperTopology& h, const Model& model) {
  std::vector<PointSet> out;
  for_each_subset(model.ground(), [&](PointSet a) {
    if (h.topology.is_open(lower_hit(a, model))) out.push_back(a);
  });
  return SetFamily(std::move(out));
}

/// T_O: the topology on X with subbase P_O.
inline Topology<PointSet> induced_topology(const HyperTopology& h, const Model& model) {
  return generate_topology(model.point_count(), extract_PO(h, model));
}

/// O is lower-Vietoris-type iff the opens of the form A⁻_M regenerate it.
inline bool is_lower_vietoris_type(const HyperTopology& h, const Model& model) {
  return hit_topology(model, extract_PO(h, model)) == h.topology;
}

struct UpperComparison {
  HyperSet closure;
  HyperSet upper;
  bool equal = false;
  bool superset_holds = false;
};

/// Compares the closure of the point F in (M, O) with F⁺_M.
inline UpperComparison closure_vs_upper(const HyperTopology& h, const Model& model, PointSet f) {
  auto idx = model.m_family().index_of(f);
  if (!idx) throw Error(ErrorKind::PreconditionViolated, "F is not a member of M");
  UpperComparison out;
  out.closure = h.topology.closure(HyperSet::singleton(static_cast<unsigned>(*idx)));
  out.upper = upper_sub(f, model);
  out.equal = out.closure == out.upper;
  out.superset_holds = out.upper.subset_of(out.closure);
  return out;
}

/// CL(X, t): the non-empty closed sets.
inline SetFamily closed_family(const Topology<PointSet>& t) {
  return nonempty_part(t.closed_sets());
}

/// M consists of closed sets and every closed set of t is an intersection of
/// members of M (the carrier being the empty intersection).
inline bool is_closed_base(const Model& model, const Topology<PointSet>& t) {
  for (PointSet m : model.m_family()) {
    if (!t.is_closed(m)) return false;
  }
  for (PointSet c : t.closed_sets()) {
    PointSet meet = model.ground();
    for (PointSet m : model.m_family()) {
      if (c.subset_of(m)) meet &= m;
    }
    if (meet != c) return false;
  }
  return true;
}

/// Reason the hypotheses shared by the lower-Vietoris comparison results fail,
/// or nullopt when they hold: t is T1, M is CL(X,t) or a closed base, the
/// model's generators are valid, and t equals the induced topology T_O.
inline std::optional<std::string> lv_comparison_precondition(const Model& model,
                                                             const Topology<PointSet>& t) {
  if (t.carrier_size() != model.point_count()) return "topology lives on a different ground set";
  if (!separation(t).t1) return "(X, t) is not T1";
  if (model.m_family() != closed_family(t) && !is_closed_base(model, t)) {
    return "M is neither CL(X) nor a closed base";
  }
  if (!check_generating(model)) return "generating family fails the subbase condition";
  if (!(induced_topology(build_lvt(model), model) == t)) return "t differs from T_O";
  return std::nullopt;
}

struct LvEquivalence {
  bool lower_vietoris = false;     // O_S equals the lower Vietoris topology of t
  bool closure_criterion = false;  // every F ∈ M has closure F⁺
  bool agree() const { return lower_vietoris == closure_criterion; }
};

/// Both sides of the lower-Vietoris criterion, without checking hypotheses.
inline LvEquivalence lv_equivalence_sides(const Model& model, const Topology<PointSet>& t) {
  const HyperTopology o = build_lvt(model);
  LvEquivalence out;
  out.lower_vietoris = o == build_lower_vietoris(model, t);
  out.closure_criterion = true;
  for (PointSet f : model.m_family()) {
    if (!closure_vs_upper(o, model, f).equal) out.closure_criterion = false;
  }
  return out;
}

/// The criterion with its hypotheses enforced. Throws PreconditionViolated
/// when they fail and EngineBug when the two sides disagree.
inline bool check_lv_equivalence(const Model& model, const Topology<PointSet>& t) {
  if (auto why = lv_comparison_precondition(model, t)) {
    throw Error(ErrorKind::PreconditionViolated, *why);
  }
  const LvEquivalence sides = lv_equivalence_sides(model, t);
  if (!sides.agree()) {
    throw Error(ErrorKind::EngineBug, "lower-Vietoris criterion sides disagree");
  }
  return sides.lower_vietoris;
}

struct PhiCertificate {
  std::vector<std::size_t> table;  // x ↦ index of {x} in M
  HyperSet image;
  bool continuous = false;
  bool embedding = false;
  bool induced_t2 = false;
  std::optional<bool> image_closed;   // checked when T_O is T2
  std::optional<bool> nowhere_dense;  // checked when additionally |X| > 1 and X ∈ M
};

/// x ↦ {x} from (X, T_O) into (M, O), with its embedding certificates.
inline PhiCertificate phi_map(const Model& model, const HyperTopology& h) {
  if (!is_natural(model)) throw Error(ErrorKind::NotNatural, "M lacks a singleton");
  PhiCertificate out;
  for (unsigned x = 0; x < model.point_count(); ++x) {
    const std::size_t i = *model.m_family().index_of(PointSet::singleton(x));
    out.table.push_back(i);
    out.image.insert(static_cast<unsigned>(i));
  }
  const Topology<PointSet> induced = induced_topology(h, model);
  out.continuous = maps_continuously(induced, h.topology, out.table);
  out.embedding = is_embedding(induced, h.topology, out.table);
  out.induced_t2 = separation(induced).t2;
  if (out.induced_t2) {
    out.image_closed = h.topology.is_closed(out.image);
    if (model.point_count() > 1 && model.m_family().contains(model.ground())) {
      out.nowhere_dense = h.topology.interior(h.topology.closure(out.image)).empty();
    }
  }
  return out;
}

struct FinDenseWitness {
  HyperSet basic_open;
  std::vector<PointSet> factors;  // U_1..U_n ∈ P_O with basic_open = ⋂ U_i⁻
  PointSet witness;               // {x_1..x_n}, one point of some member per factor
};

struct FinDenseReport {
  bool holds = true;
  std::vector<FinDenseWitness> witnesses;
};

/// For every non-empty basic open ⋂(U_i)⁻ with U_i ∈ P_O, exhibits a member of
/// Fin_n(X) inside it: pick a member M of the open and x_i ∈ M ∩ U_i.
inline FinDenseReport check_fin_dense(const Model& model, const HyperTopology& h) {
  if (!fin_family(model).subset_of(model.m_family())) {
    throw Error(ErrorKind::PreconditionViolated, "Fin(X) is not contained in M");
  }
  const SetFamily po = extract_PO(h, model);
  struct Entry {
    HyperSet open;
    std::vector<PointSet> factors;
  };
  std::vector<Entry> found;
  std::unordered_set<HyperSet> seen;
  std::vector<Entry> level;
  for (PointSet u : po) {
    HyperSet o = lower_hit(u, model);
    if (seen.insert(o).second) level.push_back({o, {u}});
  }
  while (!level.empty()) {
    found.insert(found.end(), level.begin(), level.end());
    std::vector<Entry> next;
    for (const Entry& e : level) {
      for (PointSet u : po) {
        HyperSet o = e.open & lower_hit(u, model);
        if (seen.insert(o).second) {
          auto factors = e.factors;
          factors.push_back(u);
          next.push_back({o, std::move(factors)});
        }
      }
    }
    level = std::move(next);
  }
  FinDenseReport out;
  for (const Entry& e : found) {
    if (e.open.empty()) continue;
    const PointSet m = model.member(e.open.first());
    PointSet f;
    for (PointSet u : e.factors) f.insert((m & u).first());
    const auto idx = model.m_family().index_of(f);
    const bool ok = f.size() <= e.factors.size() && idx && e.open.contains(static_cast<unsigned>(*idx));
    out.holds = out.holds && ok;
    out.witnesses.push_back({e.open, e.factors, f});
  }
  return out;
}

struct SeparabilityReport {
  bool x_dense = false;
  bool connected = false;
  bool dense_intersection = false;
  bool all() const { return x_dense && connected && dense_intersection; }
};

inline SeparabilityReport hyper_separability_report(const Model& model, const HyperTopology& h) {
  auto idx = model.m_family().index_of(model.ground());
  if (!idx) throw Error(ErrorKind::PreconditionViolated, "X is not a member of M");
  SeparabilityReport out;
  out.x_dense = is_dense(h.topology, HyperSet::singleton(static_cast<unsigned>(*idx)));
  out.connected = is_connected(h.topology);
  out.dense_intersection = dense_intersection_holds(h.topology);
  return out;
}

struct T1Characterization {
  bool hyperspace_t1 = false;
  bool singletons_and_induced_t1 = false;
  bool holds() const { return hyperspace_t1 == singletons_and_induced_t1; }
};

inline T1Characterization t1_characterization(const Model& model, const HyperTopology& h) {
  if (!is_natural(model)) throw Error(ErrorKind::PreconditionViolated, "M is not natural");
  T1Characterization out;
  out.hyperspace_t1 = separation(h.topology).t1;
  const bool only_singletons = model.m_family() == fin_family(model, 1);
  out.singletons_and_induced_t1 = only_singletons && separation(induced_topology(h, model)).t1;
  return out;
}

struct KuratowskiTransfer {
  bool singletons_agree = false;
  bool all_subsets_agree = false;
  bool holds() const { return singletons_agree == all_subsets_agree; }
};

/// Closures in O_S and in the lower Vietoris topology of t, compared on the
/// singletons of M and on every subset of M, with hypotheses enforced.
inline KuratowskiTransfer kuratowski_singleton_transfer(const Model& model,
                                                        const Topology<PointSet>& t) {
  if (auto why = lv_comparison_precondition(model, t)) {
    throw Error(ErrorKind::PreconditionViolated, *why);
  }
  if (model.member_count() > 20) throw Error(ErrorKind::BudgetExceeded, "|M| > 20");
  const Topology<HyperSet> o = build_lvt(model).topology;
  const Topology<HyperSet> lv = build_lower_vietoris(model, t).topology;
  KuratowskiTransfer out{true, true};
  for (unsigned i = 0; i < model.member_count(); ++i) {
    if (o.closure(HyperSet::singleton(i)) != lv.closure(HyperSet::singleton(i))) {
      out.singletons_agree = false;
    }
  }
  for_each_subset(model.all_members(), [&](HyperSet s) {
    if (o.closure(s) != lv.closure(s)) out.all_subsets_agree = false;
  });
  return out;
}

/// The family (B⁻_M)^∩ of all intersections of one or more sets B⁻_M, B ∈ base.
inline Family<HyperSet> hit_intersections(const Model& model, const SetFamily& base) {
  std::vector<HyperSet> found;
  std::unordered_set<HyperSet> seen;
  for (PointSet b : base) {
    const HyperSet hit = lower_hit(b, model);
    const std::size_t count = found.size();
    for (std::size_t i = 0; i < count; ++i) {
      HyperSet v = found[i] & hit;
      if (seen.insert(v).second) found.push_back(v);
    }
    if (seen.insert(hit).second) found.push_back(hit);
  }
  return Family<HyperSet>(std::move(found));
}

}  // namespace hyperlab
