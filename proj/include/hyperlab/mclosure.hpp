#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperlab/error.hpp"
#include "hyperlab/hyperspace.hpp"
#include "hyperlab/setcore.hpp"

namespace hyperlab {

/// Whether ∅ counts as M⁻-covered through the empty representation.
///
/// `EmptyIsCovered` (the default) makes ∅ a member of every M⁻-closed family,
/// which matches P_O always containing ∅. `StrictNonempty` reads the covering
/// relation over non-empty index sets only and keeps ∅ out of closures.
enum class EmptyConvention { EmptyIsCovered, StrictNonempty };

/// A representation U = ⋃_T ⋂T by tuples T of generators, each satisfying
/// ⋂T ⊆ U and: every member of M meeting all factors of T meets U.
struct CoverWitness {
  PointSet target;
  std::vector<SetFamily> tuples;
};

struct CoverResult {
  bool covered = false;
  std::optional<CoverWitness> witness;
};

namespace detail {

inline PointSet meet_of(const SetFamily& tuple, PointSet ground) {
  PointSet out = ground;
  for (PointSet v : tuple) out &= v;
  return out;
}

inline bool tuple_admissible(PointSet inter, HyperSet hits, PointSet u, const Model& model) {
  return inter.subset_of(u) && hits.subset_of(lower_hit(u, model));
}

/// For each point x, the tuple T_x = {V ∈ family : x ∈ V} with its meet and
/// the members of M that hit every factor. Any admissible tuple whose meet
/// contains x is a subfamily of T_x, and shrinking a tuple's factor set only
/// grows its meet and its hit set; so x is reached by some admissible tuple
/// iff T_x is non-empty and itself admissible.
class CoverageIndex {
 public:
  CoverageIndex(const SetFamily& family, const Model& model) : model_(&model) {
    const unsigned n = model.point_count();
    tuple_.resize(n);
    meet_.assign(n, model.ground());
    hits_.assign(n, model.all_members());
    for (PointSet v : family) {
      const HyperSet hv = lower_hit(v, model);
      v.for_each([&](unsigned x) {
        tuple_[x].push_back(v);
        meet_[x] &= v;
        hits_[x] &= hv;
      });
    }
  }

  bool reaches(unsigned x, PointSet u, HyperSet u_hits) const {
    return !tuple_[x].empty() && meet_[x].subset_of(u) && hits_[x].subset_of(u_hits);
  }

  bool covers_nonempty(PointSet u) const {
    const HyperSet u_hits = lower_hit(u, *model_);
    bool ok = true;
    u.for_each([&](unsigned x) { ok = ok && reaches(x, u, u_hits); });
    return ok;
  }

  CoverWitness witness(PointSet u) const {
    std::vector<SetFamily> tuples;
    u.for_each([&](unsigned x) { tuples.emplace_back(tuple_[x]); });
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    // Drop tuples whose meets the others already cover, longest first.
    std::vector<std::size_t> order(tuples.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return tuples[a].size() > tuples[b].size(); });
    std::vector<bool> kept(tuples.size(), true);
    for (std::size_t i : order) {
      PointSet rest;
      for (std::size_t j = 0; j < tuples.size(); ++j) {
        if (j != i && kept[j]) rest |= meet_of(tuples[j], model_->ground());
      }
      if (u.subset_of(rest)) kept[i] = false;
    }
    std::vector<SetFamily> out;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if (kept[i]) out.push_back(std::move(tuples[i]));
    }
    return {u, std::move(out)};
  }

 private:
  const Model* model_;
  std::vector<std::vector<PointSet>> tuple_;
  std::vector<PointSet> meet_;
  std::vector<HyperSet> hits_;
};

}  // namespace detail

/// Every non-empty T ⊆ V with ⋂T ⊆ U such that each member of M meeting all
/// factors of T meets U. Exponential in |V|; capped at |V| ≤ 24.
inline std::vector<SetFamily> admissible_tuples(PointSet u, const SetFamily& v, const Model& model) {
  if (v.size() > 24) throw Error(ErrorKind::BudgetExceeded, "admissible_tuples needs |V| ≤ 24");
  std::vector<HyperSet> hit(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) hit[i] = lower_hit(v[i], model);
  std::vector<SetFamily> out;
  const std::uint32_t count = std::uint32_t{1} << v.size();
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    PointSet inter = model.ground();
    HyperSet hits = model.all_members();
    std::vector<PointSet> factors;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if ((mask >> i) & 1U) {
        inter &= v[i];
        hits &= hit[i];
        factors.push_back(v[i]);
      }
    }
    if (detail::tuple_admissible(inter, hits, u, model)) out.emplace_back(std::move(factors));
  }
  return out;
}

/// Decides whether U is M⁻-covered by the family V.
inline CoverResult is_m_covered(PointSet u, const SetFamily& v, const Model& model,
                                EmptyConvention conv = EmptyConvention::EmptyIsCovered) {
  if (u.empty()) {
    if (conv == EmptyConvention::EmptyIsCovered) return {true, CoverWitness{u, {}}};
    auto tuples = admissible_tuples(u, v, model);
    if (tuples.empty()) return {false, std::nullopt};
    return {true, CoverWitness{u, std::move(tuples)}};
  }
  detail::CoverageIndex index(v, model);
  if (!index.covers_nonempty(u)) return {false, std::nullopt};
  return {true, index.witness(u)};
}

struct ClosedCheck {
  bool closed = false;
  std::optional<PointSet> violator;
};

/// V is M⁻-closed when every subset of X it M⁻-covers already belongs to it.
/// A non-empty violator is reported in preference to ∅.
inline ClosedCheck is_m_closed(const SetFamily& v, const Model& model,
                               EmptyConvention conv = EmptyConvention::EmptyIsCovered) {
  detail::CoverageIndex index(v, model);
  std::optional<PointSet> violator;
  for_each_subset(model.ground(), [&](PointSet u) {
    if (violator || u.empty() || v.contains(u)) return;
    if (index.covers_nonempty(u)) violator = u;
  });
  if (!violator && !v.contains(PointSet{})) {
    if (is_m_covered(PointSet{}, v, model, conv).covered) violator = PointSet{};
  }
  return {!violator.has_value(), violator};
}

struct ClosureStep {
  PointSet added;
  unsigned round = 0;
  CoverWitness witness;
};

struct ClosureTrace {
  SetFamily closure;
  std::vector<ClosureStep> steps;
};

/// M⁻(N) as a least fixpoint: each round adds every set covered by the
/// previous round's family; stops when a round adds nothing.
inline ClosureTrace m_closure_trace(const SetFamily& n, const Model& model,
                                    EmptyConvention conv = EmptyConvention::EmptyIsCovered) {
  ClosureTrace out{n, {}};
  for (unsigned round = 1;; ++round) {
    const SetFamily snapshot = out.closure;
    detail::CoverageIndex index(snapshot, model);
    std::vector<PointSet> added;
    for_each_subset(model.ground(), [&](PointSet u) {
      if (snapshot.contains(u)) return;
      if (u.empty()) {
        auto r = is_m_covered(u, snapshot, model, conv);
        if (r.covered) {
          added.push_back(u);
          out.steps.push_back({u, round, std::move(*r.witness)});
        }
        return;
      }
      if (index.covers_nonempty(u)) {
        added.push_back(u);
        out.steps.push_back({u, round, index.witness(u)});
      }
    });
    if (added.empty()) break;
    out.closure = united(snapshot, SetFamily(std::move(added)));
  }
  return out;
}

inline SetFamily m_closure(const SetFamily& n, const Model& model,
                           EmptyConvention conv = EmptyConvention::EmptyIsCovered) {
  return m_closure_trace(n, model, conv).closure;
}

/// O_U = O_V decided through M⁻(U) = M⁻(V); both families must cover X.
inline bool equivalence_by_closure(const SetFamily& u, const SetFamily& v, const Model& model) {
  if (!covers(u, model.ground()) || !covers(v, model.ground())) {
    throw Error(ErrorKind::NotCovering, "both families must cover X");
  }
  return m_closure(u, model) == m_closure(v, model);
}

/// P_O of the generated topology against M⁻(S), computed independently.
inline bool verify_PO_identity(const Model& model) {
  if (!covers(model.gen_family(), model.ground())) {
    throw Error(ErrorKind::NotCovering, "the generating family does not cover X");
  }
  return extract_PO(build_lvt(model), model) == m_closure(model.gen_family(), model);
}

}  // namespace hyperlab
