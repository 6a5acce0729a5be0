#pragma once

// Slow, direct computations kept apart from the engine: opens by repeated
// pairwise union and intersection, closures from the open sets, coverage
// from explicit representations. Used to re-verify counterexamples.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "hyperlab/bits.hpp"
#include "hyperlab/setcore.hpp"

namespace hyperlab::naive {

template <class Set>
Family<Set> opens(unsigned carrier_size, const std::vector<Set>& subbase) {
  const Set full = Set::full(carrier_size);
  std::set<Set> found{Set{}, full};
  for (Set s : subbase) found.insert(s & full);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Set> snapshot(found.begin(), found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        grew |= found.insert(snapshot[i] | snapshot[j]).second;
        grew |= found.insert(snapshot[i] & snapshot[j]).second;
      }
    }
  }
  return Family<Set>(std::vector<Set>(found.begin(), found.end()));
}

template <class Set>
Set closure(const Family<Set>& opens, unsigned carrier_size, Set s) {
  Set outside;
  for (Set o : opens) {
    if (!o.meets(s)) outside |= o;
  }
  return Set::full(carrier_size) - outside;
}

template <class Set>
bool is_open(const Family<Set>& opens, Set s) {
  return opens.contains(s);
}

inline HyperSet hit(PointSet a, const Model& model) {
  HyperSet out;
  for (std::size_t i = 0; i < model.member_count(); ++i) {
    for (unsigned x = 0; x < model.point_count(); ++x) {
      if (a.contains(x) && model.member(i).contains(x)) {
        out.insert(static_cast<unsigned>(i));
        break;
      }
    }
  }
  return out;
}

inline Family<HyperSet> hyper_opens(const Model& model, const SetFamily& generators) {
  std::vector<HyperSet> sub;
  for (PointSet a : generators) sub.push_back(hit(a, model));
  return opens(static_cast<unsigned>(model.member_count()), sub);
}

inline SetFamily p_o(const Model& model, const Family<HyperSet>& hyper_opens) {
  std::vector<PointSet> out;
  for (unsigned bits = 0; bits < (1U << model.point_count()); ++bits) {
    const PointSet a(bits);
    if (hyper_opens.contains(hit(a, model))) out.push_back(a);
  }
  return SetFamily(std::move(out));
}

/// U is covered by V when the tuples drawn from V (as sequences of length at
/// most max_len, repetitions allowed) whose meet lies in U and whose hitters
/// all hit U have union exactly U. ∅ is covered. Sequences are visited in
/// non-decreasing index order; reordering changes neither the meet nor the
/// hitters.
inline bool covered(PointSet u, const SetFamily& v, const Model& model, unsigned max_len) {
  if (u.empty()) return true;
  const HyperSet u_hit = hit(u, model);
  PointSet reached;
  std::vector<std::size_t> seq;
  auto visit = [&](auto&& self) -> void {
    if (!seq.empty()) {
      PointSet meet = model.ground();
      HyperSet hitters = model.all_members();
      for (std::size_t i : seq) {
        meet &= v[i];
        hitters &= hit(v[i], model);
      }
      if (meet.subset_of(u) && hitters.subset_of(u_hit)) reached |= meet;
    }
    if (seq.size() == max_len) return;
    for (std::size_t i = seq.empty() ? 0 : seq.back(); i < v.size(); ++i) {
      seq.push_back(i);
      self(self);
      seq.pop_back();
    }
  };
  visit(visit);
  return reached == u;
}

inline SetFamily m_closure(const SetFamily& n, const Model& model, unsigned max_len) {
  SetFamily current = n;
  while (true) {
    std::vector<PointSet> next(current.begin(), current.end());
    for (unsigned bits = 0; bits < (1U << model.point_count()); ++bits) {
      const PointSet u(bits);
      if (!current.contains(u) && covered(u, current, model, max_len)) next.push_back(u);
    }
    SetFamily grown(std::move(next));
    if (grown == current) return current;
    current = std::move(grown);
  }
}

/// Smallest base by search over subfamilies of the non-empty opens, or
/// nullopt when there are more than max_opens of them.
template <class Set>
std::optional<std::size_t> weight(const Family<Set>& opens, unsigned max_opens = 16) {
  std::vector<Set> pool;
  for (Set o : opens) {
    if (!o.empty()) pool.push_back(o);
  }
  if (pool.size() > max_opens) return std::nullopt;
  std::size_t best = pool.size();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pool.size()); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    bool is_base = true;
    for (Set o : pool) {
      Set u;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (((mask >> i) & 1U) && pool[i].subset_of(o)) u |= pool[i];
      }
      if (u != o) {
        is_base = false;
        break;
      }
    }
    if (is_base) best = size;
  }
  return best;
}

}  // namespace hyperlab::naive
