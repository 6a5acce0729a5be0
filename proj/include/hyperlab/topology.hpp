#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hyperlab/bits.hpp"
#include "hyperlab/error.hpp"
#include "hyperlab/setcore.hpp"

namespace hyperlab {

/// A topology on a finite carrier {0, ..., n-1}.
///
/// A finite topology is determined by the minimal open neighbourhood U_x of
/// every point (the intersection of all opens containing x, which is itself
/// open). All queries are answered from that table; the full family of opens
/// is only materialized on request. The subbase the topology was generated
/// from is kept verbatim as provenance.
template <class Set>
class Topology {
 public:
  using set_type = Set;

  Topology() = default;

  /// The topology generated by `subbase`: all unions of finite intersections
  /// of its members, the full carrier being the empty intersection.
  Topology(unsigned carrier_size, std::vector<Set> subbase)
      : n_(carrier_size), subbase_(std::move(subbase)) {
    check_width();
    const Set all = Set::full(n_);
    nbhd_.assign(n_, all);
    for (Set s : subbase_) {
      s &= all;
      s.for_each([&](unsigned x) { nbhd_[x] &= s; });
    }
  }

  Topology(unsigned carrier_size, const Family<Set>& subbase)
      : Topology(carrier_size, std::vector<Set>(subbase.begin(), subbase.end())) {}

  /// Builds the topology whose minimal neighbourhoods are `nbhd`; they must
  /// form a preorder (x ∈ U_x, and y ∈ U_x implies U_y ⊆ U_x).
  static Topology from_neighborhoods(std::vector<Set> nbhd) {
    const unsigned n = static_cast<unsigned>(nbhd.size());
    for (unsigned x = 0; x < n; ++x) {
      if (!nbhd[x].contains(x)) throw Error(ErrorKind::InvalidInput, "x ∉ U_x");
      bool ok = true;
      nbhd[x].for_each([&](unsigned y) { ok = ok && nbhd[y].subset_of(nbhd[x]); });
      if (!ok) throw Error(ErrorKind::InvalidInput, "neighbourhoods are not transitive");
    }
    Topology t(n, nbhd);
    return t;
  }

  /// Builds a topology from an explicit family of opens, rejecting families
  /// that are not topologies.
  static Topology from_opens(unsigned carrier_size, const Family<Set>& opens) {
    const Set all = Set::full(carrier_size);
    if (!opens.contains(Set{}) || !opens.contains(all)) {
      throw Error(ErrorKind::InvalidInput, "opens must contain ∅ and the carrier");
    }
    for (Set a : opens) {
      if (!a.subset_of(all)) throw Error(ErrorKind::InvalidInput, "open set outside the carrier");
      for (Set b : opens) {
        if (!opens.contains(a | b) || !opens.contains(a & b)) {
          throw Error(ErrorKind::InvalidInput, "family is not closed under ∪ and ∩");
        }
      }
    }
    return Topology(carrier_size, std::vector<Set>(opens.begin(), opens.end()));
  }

  unsigned carrier_size() const { return n_; }
  Set carrier() const { return Set::full(n_); }
  const std::vector<Set>& subbase() const { return subbase_; }
  const std::vector<Set>& neighborhoods() const { return nbhd_; }
  Set neighborhood(unsigned x) const { return nbhd_[x]; }

  bool is_open(Set s) const {
    bool ok = s.subset_of(carrier());
    s.for_each([&](unsigned x) { ok = ok && nbhd_[x].subset_of(s); });
    return ok;
  }
  bool is_closed(Set s) const { return is_open(s.complement(n_)); }

  Set closure(Set s) const {
    Set out;
    for (unsigned y = 0; y < n_; ++y) {
      if (nbhd_[y].meets(s)) out.insert(y);
    }
    return out;
  }

  Set interior(Set s) const {
    Set out;
    for (unsigned x = 0; x < n_; ++x) {
      if (nbhd_[x].subset_of(s)) out.insert(x);
    }
    return out;
  }

  /// x lies in the closure of {y}.
  bool specializes(unsigned x, unsigned y) const { return nbhd_[x].contains(y); }

  /// Every open set, in canonical order. Throws BudgetExceeded past `limit`.
  Family<Set> opens(std::size_t limit = std::size_t{1} << 22) const {
    std::vector<Set> found{Set{}};
    std::unordered_set<Set> seen{Set{}};
    for (Set u : Family<Set>(nbhd_)) {
      const std::size_t count = found.size();
      for (std::size_t i = 0; i < count; ++i) {
        Set v = found[i] | u;
        if (seen.insert(v).second) {
          found.push_back(v);
          if (found.size() > limit) {
            throw Error(ErrorKind::BudgetExceeded, "topology has too many opens to list");
          }
        }
      }
    }
    return Family<Set>(std::move(found));
  }

  /// Every closed set (complements of opens), in canonical order.
  Family<Set> closed_sets() const {
    std::vector<Set> out;
    for (Set o : opens()) out.push_back(o.complement(n_));
    return Family<Set>(std::move(out));
  }

  /// The finite-intersection closure of the subbase, with the carrier as the
  /// empty intersection.
  Family<Set> base() const {
    std::vector<Set> found{carrier()};
    std::unordered_set<Set> seen{carrier()};
    for (Set s : subbase_) {
      s &= carrier();
      const std::size_t count = found.size();
      for (std::size_t i = 0; i < count; ++i) {
        Set v = found[i] & s;
        if (seen.insert(v).second) found.push_back(v);
      }
    }
    return Family<Set>(std::move(found));
  }

  /// Equality of topologies is equality of open families.
  friend bool operator==(const Topology& a, const Topology& b) {
    return a.n_ == b.n_ && a.nbhd_ == b.nbhd_;
  }

 private:
  void check_width() const {
    if (n_ > Set::max_width) {
      throw Error(ErrorKind::TooLarge, "carrier of " + std::to_string(n_) + " points exceeds " +
                                           std::to_string(Set::max_width));
    }
  }

  unsigned n_ = 0;
  std::vector<Set> subbase_;
  std::vector<Set> nbhd_;
};

template <class Set>
Topology<Set> generate_topology(unsigned carrier_size, const std::vector<Set>& subbase) {
  return Topology<Set>(carrier_size, subbase);
}

template <class Set>
Topology<Set> generate_topology(unsigned carrier_size, const Family<Set>& subbase) {
  return Topology<Set>(carrier_size, subbase);
}

template <class Set>
Topology<Set> discrete_topology(unsigned n) {
  std::vector<Set> singletons;
  for (unsigned x = 0; x < n; ++x) singletons.push_back(Set::singleton(x));
  return Topology<Set>(n, std::move(singletons));
}

template <class Set>
Topology<Set> indiscrete_topology(unsigned n) {
  return Topology<Set>(n, std::vector<Set>{});
}

template <class Set>
Set closure(const Topology<Set>& t, Set s) { return t.closure(s); }

template <class Set>
Set interior(const Topology<Set>& t, Set s) { return t.interior(s); }

struct Separation {
  bool t0 = false;
  bool t1 = false;
  bool t2 = false;
  friend bool operator==(const Separation&, const Separation&) = default;
};

template <class Set>
Separation separation(const Topology<Set>& t) {
  Separation out{true, true, true};
  const unsigned n = t.carrier_size();
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool y_near_x = t.neighborhood(x).contains(y);
      const bool x_near_y = t.neighborhood(y).contains(x);
      if (y_near_x && x_near_y) out.t0 = false;
      if (y_near_x) out.t1 = false;
      if (t.neighborhood(x).meets(t.neighborhood(y))) out.t2 = false;
    }
  }
  return out;
}

/// Connectivity of the subspace on `subset`. In a finite space two points of a
/// subspace are linked when one lies in the other's minimal neighbourhood; the
/// subspace is connected iff this relation has one component.
template <class Set>
bool is_connected_subset(const Topology<Set>& t, Set subset) {
  if (subset.size() <= 1) return true;
  Set reached = Set::singleton(subset.first());
  Set frontier = reached;
  while (!frontier.empty()) {
    Set next;
    frontier.for_each([&](unsigned x) {
      next |= t.neighborhood(x) & subset;
      for (unsigned y : subset.elements()) {
        if (t.neighborhood(y).contains(x)) next.insert(y);
      }
    });
    next -= reached;
    reached |= next;
    frontier = next;
  }
  return reached == subset;
}

/// True iff there is no proper non-empty clopen set.
template <class Set>
bool is_connected(const Topology<Set>& t) {
  return is_connected_subset(t, t.carrier());
}

template <class Set>
bool is_dense(const Topology<Set>& t, Set s) {
  return t.closure(s) == t.carrier();
}

/// The minimal neighbourhoods, deduplicated: the unique smallest base.
template <class Set>
Family<Set> minimal_base(const Topology<Set>& t) {
  return Family<Set>(t.neighborhoods());
}

template <class Set>
std::size_t weight(const Topology<Set>& t) {
  return minimal_base(t).size();
}

template <class Set>
struct CompactnessCertificate {
  bool compact = false;
  std::vector<Set> subcover;
};

/// Takes the open cover by minimal-base members and thins it to an
/// irredundant finite subcover.
template <class Set>
CompactnessCertificate<Set> is_compact_certified(const Topology<Set>& t) {
  auto cover = minimal_base(t);
  std::vector<Set> kept(cover.begin(), cover.end());
  for (std::size_t i = kept.size(); i-- > 0;) {
    Set rest;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) rest |= kept[j];
    }
    if (rest == t.carrier()) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
  }
  Set covered;
  for (Set s : kept) covered |= s;
  return {covered == t.carrier(), std::move(kept)};
}

/// The intersection of all open dense sets is dense.
template <class Set>
bool dense_intersection_holds(const Topology<Set>& t) {
  Set meet = t.carrier();
  for (Set o : t.opens()) {
    if (is_dense(t, o)) meet &= o;
  }
  return is_dense(t, meet);
}

/// A map between finite carriers given by its table is continuous iff it
/// carries every minimal neighbourhood into the neighbourhood of the image.
template <class From, class To>
bool maps_continuously(const Topology<From>& src, const Topology<To>& tgt,
                       const std::vector<std::size_t>& table) {
  for (unsigned x = 0; x < src.carrier_size(); ++x) {
    const To target_nbhd = tgt.neighborhood(static_cast<unsigned>(table[x]));
    bool ok = true;
    src.neighborhood(x).for_each(
        [&](unsigned y) { ok = ok && target_nbhd.contains(static_cast<unsigned>(table[y])); });
    if (!ok) return false;
  }
  return true;
}

template <class From, class To>
To image_of(From s, const std::vector<std::size_t>& table) {
  To out;
  s.for_each([&](unsigned x) { out.insert(static_cast<unsigned>(table[x])); });
  return out;
}

template <class From, class To>
From preimage_of(To s, const std::vector<std::size_t>& table) {
  From out;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (s.contains(static_cast<unsigned>(table[x]))) out.insert(static_cast<unsigned>(x));
  }
  return out;
}

/// Injective, continuous, and open onto its image (with the subspace
/// topology): a homeomorphic embedding.
template <class From, class To>
bool is_embedding(const Topology<From>& src, const Topology<To>& tgt,
                  const std::vector<std::size_t>& table) {
  for (std::size_t x = 0; x < table.size(); ++x) {
    for (std::size_t y = x + 1; y < table.size(); ++y) {
      if (table[x] == table[y]) return false;
    }
  }
  if (!maps_continuously(src, tgt, table)) return false;
  for (unsigned x = 0; x < src.carrier_size(); ++x) {
    const From back = preimage_of<From, To>(tgt.neighborhood(static_cast<unsigned>(table[x])), table);
    if (!back.subset_of(src.neighborhood(x))) return false;
  }
  return true;
}

/// Every topology on an n-point carrier (n ≤ 5), enumerated as preorders:
/// each point picks a neighbourhood containing itself, kept when transitive.
template <class Set>
std::vector<Topology<Set>> enumerate_topologies(unsigned n) {
  if (n > 5) throw Error(ErrorKind::BudgetExceeded, "topology enumeration is limited to 5 points");
  std::vector<Topology<Set>> out;
  if (n == 0) {
    out.emplace_back(0, std::vector<Set>{});
    return out;
  }
  std::vector<std::vector<Set>> choices(n);
  for (unsigned x = 0; x < n; ++x) {
    for_each_subset(Set::full(n), [&](Set s) {
      if (s.contains(x)) choices[x].push_back(s);
    });
  }
  std::vector<Set> nbhd(n);
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    for (unsigned x = 0; x < n; ++x) nbhd[x] = choices[x][pick[x]];
    bool transitive = true;
    for (unsigned x = 0; x < n && transitive; ++x) {
      nbhd[x].for_each([&](unsigned y) { transitive = transitive && nbhd[y].subset_of(nbhd[x]); });
    }
    if (transitive) out.push_back(Topology<Set>::from_neighborhoods(nbhd));
    unsigned k = 0;
    while (k < n && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == n) break;
  }
  return out;
}

}  // namespace hyperlab
