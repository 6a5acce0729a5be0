#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperlab/bits.hpp"
#include "hyperlab/error.hpp"

namespace hyperlab {

/// A duplicate-free family of subsets kept in canonical (numeric) order, so
/// that two families are equal exactly when their member lists are equal.
template <class Set>
class Family {
 public:
  using value_type = Set;
  using const_iterator = typename std::vector<Set>::const_iterator;

  Family() = default;
  Family(std::initializer_list<Set> members) : members_(members) { canonicalize(); }
  explicit Family(std::vector<Set> members) : members_(std::move(members)) { canonicalize(); }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Set& operator[](std::size_t i) const { return members_[i]; }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  std::span<const Set> members() const { return members_; }

  bool contains(Set s) const { return std::binary_search(members_.begin(), members_.end(), s); }

  std::optional<std::size_t> index_of(Set s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it == members_.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
  }

  /// Union of all members (the empty set for the empty family).
  Set union_all() const {
    Set u;
    for (Set s : members_) u |= s;
    return u;
  }

  bool subset_of(const Family& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
  }

  Family with(Set s) const {
    Family out = *this;
    auto it = std::lower_bound(out.members_.begin(), out.members_.end(), s);
    if (it == out.members_.end() || *it != s) out.members_.insert(it, s);
    return out;
  }

  Family without(Set s) const {
    Family out = *this;
    auto it = std::lower_bound(out.members_.begin(), out.members_.end(), s);
    if (it != out.members_.end() && *it == s) out.members_.erase(it);
    return out;
  }

  friend Family intersection(const Family& a, const Family& b) {
    Family out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out.members_));
    return out;
  }

  friend Family united(const Family& a, const Family& b) {
    Family out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.members_));
    return out;
  }

  friend bool operator==(const Family&, const Family&) = default;
  friend auto operator<=>(const Family& a, const Family& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  void canonicalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<Set> members_;
};

using SetFamily = Family<PointSet>;

/// An immutable bundle (X, M, S): the ground set, the hyperspace carrier
/// M ⊆ P'(X) and the generating family S ⊆ P'(X).
class Model {
 public:
  /// Numeric constructor used by enumerators; points are named "0".."n-1".
  Model(unsigned point_count, SetFamily m_family, SetFamily gen_family)
      : Model(default_names(point_count), std::move(m_family), std::move(gen_family)) {}

  Model(std::vector<std::string> point_names, SetFamily m_family, SetFamily gen_family)
      : names_(std::move(point_names)), m_(std::move(m_family)), gen_(std::move(gen_family)) {
    validate();
  }

  unsigned point_count() const { return static_cast<unsigned>(names_.size()); }
  std::size_t member_count() const { return m_.size(); }
  const std::vector<std::string>& point_names() const { return names_; }
  const SetFamily& m_family() const { return m_; }
  const SetFamily& gen_family() const { return gen_; }

  PointSet ground() const { return PointSet::full(point_count()); }
  HyperSet all_members() const { return HyperSet::full(static_cast<unsigned>(m_.size())); }
  PointSet member(std::size_t i) const { return m_[i]; }

  /// Same X and M, different generating family.
  Model with_generators(SetFamily gen) const { return Model(names_, m_, std::move(gen)); }
  Model with_members(SetFamily m) const { return Model(names_, std::move(m), gen_); }

  friend bool operator==(const Model&, const Model&) = default;

  static std::vector<std::string> default_names(unsigned n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (unsigned i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return names;
  }

 private:
  void validate() const {
    if (names_.empty()) throw Error(ErrorKind::InvalidInput, "ground set must be non-empty");
    if (names_.size() > kMaxPoints) {
      throw Error(ErrorKind::TooLarge, "ground set has " + std::to_string(names_.size()) +
                                           " points; at most 16 are supported");
    }
    if (m_.size() > kMaxMembers) {
      throw Error(ErrorKind::TooLarge, "family M has " + std::to_string(m_.size()) +
                                           " members; at most 64 are supported");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      for (std::size_t j = i + 1; j < names_.size(); ++j) {
        if (names_[i] == names_[j]) {
          throw Error(ErrorKind::InvalidInput, "duplicate point label '" + names_[i] + "'");
        }
      }
    }
    const PointSet x = ground();
    auto check = [&](const SetFamily& f, const char* which) {
      for (PointSet s : f) {
        if (s.empty()) throw Error(ErrorKind::EmptyMember, std::string(which) + " contains ∅");
        if (!s.subset_of(x)) {
          throw Error(ErrorKind::InvalidInput, std::string(which) + " has a member outside X");
        }
      }
    };
    check(m_, "family M");
    check(gen_, "generating family");
  }

  std::vector<std::string> names_;
  SetFamily m_;
  SetFamily gen_;
};

/// Builds a model from labelled data. Duplicate members are merged.
inline Model make_model(const std::vector<std::string>& names,
                        const std::vector<std::vector<std::string>>& m_family,
                        const std::vector<std::vector<std::string>>& gen_family) {
  if (names.empty()) throw Error(ErrorKind::InvalidInput, "ground set must be non-empty");
  if (names.size() > kMaxPoints) {
    throw Error(ErrorKind::TooLarge, "ground set has " + std::to_string(names.size()) +
                                         " points; at most 16 are supported");
  }
  std::unordered_map<std::string, unsigned> index;
  for (unsigned i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate point label '" + names[i] + "'");
    }
  }
  auto convert = [&](const std::vector<std::vector<std::string>>& lists) {
    std::vector<PointSet> out;
    for (const auto& list : lists) {
      PointSet s;
      for (const auto& label : list) {
        auto it = index.find(label);
        if (it == index.end()) throw Error(ErrorKind::UnknownLabel, "'" + label + "'");
        s.insert(it->second);
      }
      if (s.empty()) throw Error(ErrorKind::EmptyMember, "listed set is empty");
      out.push_back(s);
    }
    return SetFamily(std::move(out));
  };
  return Model(names, convert(m_family), convert(gen_family));
}

/// A⁻_M: the members of M that meet A.
inline HyperSet lower_hit(PointSet a, const Model& model) {
  HyperSet out;
  const auto& m = model.m_family();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].meets(a)) out.insert(static_cast<unsigned>(i));
  }
  return out;
}

/// A⁺_M: the members of M contained in A.
inline HyperSet upper_sub(PointSet a, const Model& model) {
  HyperSet out;
  const auto& m = model.m_family();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].subset_of(a)) out.insert(static_cast<unsigned>(i));
  }
  return out;
}

/// The members of M selected by a HyperSet, as a family of point sets.
inline SetFamily members_of(HyperSet h, const Model& model) {
  std::vector<PointSet> out;
  h.for_each([&](unsigned i) { out.push_back(model.member(i)); });
  return SetFamily(std::move(out));
}

/// Fin_n(X): all non-empty subsets of an n-point ground set with at most
/// `max_size` elements; std::nullopt means no bound (Fin(X) = P'(X)).
inline SetFamily fin_family(unsigned point_count, std::optional<unsigned> max_size = std::nullopt) {
  std::vector<PointSet> out;
  const unsigned bound = max_size.value_or(point_count);
  for_each_subset(PointSet::full(point_count), [&](PointSet s) {
    if (!s.empty() && s.size() <= bound) out.push_back(s);
  });
  return SetFamily(std::move(out));
}

inline SetFamily fin_family(const Model& model, std::optional<unsigned> max_size = std::nullopt) {
  return fin_family(model.point_count(), max_size);
}

/// All subsets of an n-point ground set, ∅ included.
inline SetFamily power_set(unsigned point_count) {
  std::vector<PointSet> out;
  for_each_subset(PointSet::full(point_count), [&](PointSet s) { out.push_back(s); });
  return SetFamily(std::move(out));
}

/// M is natural when it contains every singleton of X.
inline bool is_natural(const Model& model) {
  for (unsigned x = 0; x < model.point_count(); ++x) {
    if (!model.m_family().contains(PointSet::singleton(x))) return false;
  }
  return true;
}

inline bool covers(const SetFamily& family, PointSet ground) {
  return ground.subset_of(family.union_all());
}

/// The non-empty members of a family (the part that may serve as a Model family).
inline SetFamily nonempty_part(const SetFamily& f) { return f.without(PointSet{}); }

}  // namespace hyperlab
