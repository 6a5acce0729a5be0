#pragma once

#include <random>

#include "hyperlab/hyperlab.hpp"

namespace fixtures {

using namespace hyperlab;

// Members are listed in canonical (bit-mask) order, so member(i) below is
// the i-th set as written.

/// X = {0,1}, M = {{0},{1},{0,1}}, S = {{0},{1}}.
inline Model a() { return Model(2, SetFamily{{0}, {1}, {0, 1}}, SetFamily{{0}, {1}}); }

/// X = {0,1,2}, M = Fin(X), S = {{0,1},{1,2}}.
inline Model b() { return Model(3, fin_family(3), SetFamily{{0, 1}, {1, 2}}); }

/// X = {0,1,2} with the chain topology ∅ ⊂ {0} ⊂ {0,1} ⊂ X, M = its non-empty
/// closed sets {{2},{1,2},X}, S = the non-empty opens.
inline Model c() { return Model(3, SetFamily{{2}, {1, 2}, {0, 1, 2}}, SetFamily{{0}, {0, 1}, {0, 1, 2}}); }

/// Ψ on Fixture C: X ↦ {1,2}, {1,2} ↦ {2}, {2} ↦ {2}.
inline HyperMap c_psi() { return HyperMap{{0, 0, 1}}; }

inline PointSet random_subset(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<std::uint32_t> d(1, (1U << n) - 1);
  return PointSet(d(rng));
}

/// A random model on 1..max_points points with random M and S.
inline Model random_model(std::mt19937_64& rng, unsigned max_points) {
  std::uniform_int_distribution<unsigned> points(1, max_points);
  const unsigned n = points(rng);
  std::uniform_int_distribution<int> count(0, static_cast<int>(std::min(12U, (1U << n) - 1)));
  std::vector<PointSet> m;
  std::vector<PointSet> s;
  for (int i = count(rng); i > 0; --i) m.push_back(random_subset(rng, n));
  for (int i = count(rng); i > 0; --i) s.push_back(random_subset(rng, n));
  return Model(n, SetFamily(m), SetFamily(s));
}

}  // namespace fixtures
