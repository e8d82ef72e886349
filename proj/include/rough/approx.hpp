#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rough/error.hpp"
#include "rough/subset.hpp"

namespace rough {

/// Configurable soft caps. The defaults cover every structure in the test
/// fixtures with room to spare.
struct Limits {
  std::size_t max_atoms = 16;
};

/// A finite universe with a partition into blocks (the equivalence classes of
/// an indiscernibility relation). Immutable after construction.
class ApproximationSpace {
public:
  ApproximationSpace() = default;

  static ApproximationSpace from_blocks(Universe universe, std::vector<Subset> blocks,
                                        Limits limits = {}) {
    ApproximationSpace s;
    s.init_universe(std::move(universe), limits);
    const std::size_t n = s.universe_->size();
    Mask seen = 0;
    for (const Subset& b : blocks) {
      s.universe_->check(b);
      if (b.is_empty()) throw Error(ErrorKind::Model, "partition contains an empty block");
      if (b.bits() & seen) throw Error(ErrorKind::Model, "partition blocks overlap");
      seen |= b.bits();
    }
    if (seen != Subset::full_mask(n)) throw Error(ErrorKind::Model, "partition does not cover the universe");
    std::sort(blocks.begin(), blocks.end(), [](const Subset& a, const Subset& b) {
      return std::countr_zero(a.bits()) < std::countr_zero(b.bits());
    });
    s.blocks_ = std::move(blocks);
    s.index_blocks();
    return s;
  }

  /// Least equivalence relation containing the given atom pairs.
  static ApproximationSpace from_pairs(Universe universe,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                       Limits limits = {}) {
    const std::size_t n = universe.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) throw Error(ErrorKind::UnknownAtom, "relation pair outside universe");
      auto ra = find(a), rb = find(b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<Mask> by_root(n, 0);
    for (std::size_t i = 0; i < n; ++i) by_root[find(i)] |= Mask{1} << i;
    std::vector<Subset> blocks;
    for (Mask m : by_root) {
      if (m) blocks.emplace_back(m, n);
    }
    return from_blocks(std::move(universe), std::move(blocks), limits);
  }

  static ApproximationSpace from_named_pairs(Universe universe,
                                             const std::vector<std::pair<std::string, std::string>>& pairs,
                                             Limits limits = {}) {
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (const auto& [a, b] : pairs) idx.emplace_back(universe.index_of(a), universe.index_of(b));
    return from_pairs(std::move(universe), idx, limits);
  }

  const Universe& universe() const { return *universe_; }
  std::shared_ptr<const Universe> universe_ptr() const { return universe_; }
  std::size_t size() const { return universe_->size(); }
  const std::vector<Subset>& blocks() const { return blocks_; }
  const Subset& block_of(std::size_t atom) const { return blocks_.at(block_index_.at(atom)); }

  Subset empty() const { return universe_->empty(); }
  Subset full() const { return universe_->full(); }

  /// Union of the blocks contained in x.
  Subset lower(const Subset& x) const {
    universe_->check(x);
    Mask out = 0;
    for (const Subset& b : blocks_) {
      if ((b.bits() & ~x.bits()) == 0) out |= b.bits();
    }
    return Subset(out, size());
  }

  /// Union of the blocks meeting x.
  Subset upper(const Subset& x) const {
    universe_->check(x);
    Mask out = 0;
    for (const Subset& b : blocks_) {
      if (b.bits() & x.bits()) out |= b.bits();
    }
    return Subset(out, size());
  }

  /// True when s is a union of blocks.
  bool is_definite(const Subset& s) const { return lower(s) == s; }

  std::string format(const Subset& s) const { return universe_->format(s); }
  Subset parse(std::string_view text) const { return universe_->parse(text); }

private:
  void init_universe(Universe universe, const Limits& limits) {
    if (universe.size() > limits.max_atoms) {
      throw Error(ErrorKind::CapExceeded, "universe of " + std::to_string(universe.size()) +
                                              " atoms exceeds the configured cap of " +
                                              std::to_string(limits.max_atoms));
    }
    universe_ = std::make_shared<const Universe>(std::move(universe));
  }

  void index_blocks() {
    block_index_.assign(size(), 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      for (std::size_t i = 0; i < size(); ++i) {
        if (blocks_[b].contains(i)) block_index_[i] = b;
      }
    }
  }

  std::shared_ptr<const Universe> universe_;
  std::vector<Subset> blocks_;
  std::vector<std::size_t> block_index_;
};

struct ApproxTriple {
  Subset x;
  Subset lower;
  Subset upper;
  friend bool operator==(const ApproxTriple&, const ApproxTriple&) = default;
};

struct Definiteness {
  bool lower_definite = false;
  bool upper_definite = false;
  bool definite = false;
};

/// An equivalence class of rough equality, held as its pair of definite
/// bounds. Members are enumerated on demand.
class RoughClass {
public:
  RoughClass() = default;

  /// The class [x].
  static RoughClass of(const ApproximationSpace& space, const Subset& x) {
    return RoughClass(space.lower(x), space.upper(x));
  }

  /// Validates that (lower, upper) is realized by some subset: both bounds
  /// definite, lower inside upper, and no singleton block in the boundary.
  static RoughClass from_bounds(const ApproximationSpace& space, const Subset& lower, const Subset& upper) {
    if (!is_realizable(space, lower, upper)) {
      throw Error(ErrorKind::Precondition, "bounds (" + space.format(lower) + "," + space.format(upper) +
                                               ") are not realized by any subset");
    }
    return RoughClass(lower, upper);
  }

  static bool is_realizable(const ApproximationSpace& space, const Subset& lower, const Subset& upper) {
    if (!space.is_definite(lower) || !space.is_definite(upper) || !lower.subset_of(upper)) return false;
    const Subset boundary = upper - lower;
    for (const Subset& b : space.blocks()) {
      if (b.count() == 1 && b.subset_of(boundary)) return false;
    }
    return true;
  }

  const Subset& lower() const { return lower_; }
  const Subset& upper() const { return upper_; }
  bool is_definite() const { return lower_ == upper_; }

  bool contains(const ApproximationSpace& space, const Subset& x) const {
    return space.lower(x) == lower_ && space.upper(x) == upper_;
  }

  /// Calls fn(Subset) for each member in canonical order.
  template <class Fn>
  void for_each_member(const ApproximationSpace& space, Fn&& fn) const {
    for_each_subset_of(upper_ - lower_, [&](const Subset& extra) {
      const Subset x = lower_ | extra;
      if (space.lower(x) == lower_ && space.upper(x) == upper_) fn(x);
    });
  }

  std::vector<Subset> members(const ApproximationSpace& space) const {
    std::vector<Subset> out;
    for_each_member(space, [&](const Subset& x) { out.push_back(x); });
    return out;
  }

  /// Least member in canonical order: the lower bound plus the lowest atom of
  /// each boundary block.
  Subset sample(const ApproximationSpace& space) const {
    Mask bits = lower_.bits();
    for (const Subset& b : space.blocks()) {
      if (b.subset_of(upper_) && !b.subset_of(lower_)) bits |= b.bits() & (~b.bits() + 1U);
    }
    return Subset(bits, lower_.width());
  }

  /// Basic rough order: componentwise inclusion of the bounds.
  bool leq(const RoughClass& other) const {
    return lower_.subset_of(other.lower_) && upper_.subset_of(other.upper_);
  }

  friend bool operator==(const RoughClass&, const RoughClass&) = default;
  friend auto operator<=>(const RoughClass& a, const RoughClass& b) {
    if (auto c = a.lower_ <=> b.lower_; c != 0) return c;
    return a.upper_ <=> b.upper_;
  }

private:
  RoughClass(Subset lower, Subset upper) : lower_(lower), upper_(upper) {}

  Subset lower_;
  Subset upper_;
};

inline Subset lower(const ApproximationSpace& space, const Subset& x) { return space.lower(x); }
inline Subset upper(const ApproximationSpace& space, const Subset& x) { return space.upper(x); }

/// One triple (x, x^l, x^u) per nonempty subset, in canonical order.
inline std::vector<ApproxTriple> triples(const ApproximationSpace& space) {
  std::vector<ApproxTriple> out;
  for_each_subset(space.size(), [&](const Subset& x) {
    if (!x.is_empty()) out.push_back({x, space.lower(x), space.upper(x)});
  });
  return out;
}

inline bool rough_eq(const ApproximationSpace& space, const Subset& a, const Subset& b) {
  return space.lower(a) == space.lower(b) && space.upper(a) == space.upper(b);
}

inline Definiteness definiteness(const ApproximationSpace& space, const Subset& x) {
  Definiteness d;
  d.lower_definite = space.lower(x) == x;
  d.upper_definite = space.upper(x) == x;
  d.definite = d.lower_definite && d.upper_definite;
  return d;
}

/// Rough classes ordered by their least member. The class of the empty set
/// comes first when included.
inline std::vector<RoughClass> rough_classes(const ApproximationSpace& space, bool include_empty = false) {
  std::vector<RoughClass> out;
  std::set<RoughClass> seen;
  for_each_subset(space.size(), [&](const Subset& x) {
    if (x.is_empty() && !include_empty) return;
    RoughClass c = RoughClass::of(space, x);
    if (seen.insert(c).second) out.push_back(c);
  });
  return out;
}

/// The classes of a space under the basic rough order, with [∅] as bottom
/// and the class of S as top.
struct RoughOrderPoset {
  std::vector<RoughClass> elements;
  std::size_t bottom = 0;
  std::size_t top = 0;

  std::size_t size() const { return elements.size(); }
  bool leq(std::size_t i, std::size_t j) const { return elements[i].leq(elements[j]); }
};

inline RoughOrderPoset quotient_order(const ApproximationSpace& space) {
  RoughOrderPoset p;
  p.elements = rough_classes(space, true);
  const RoughClass bottom = RoughClass::of(space, space.empty());
  const RoughClass top = RoughClass::of(space, space.full());
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    if (p.elements[i] == bottom) p.bottom = i;
    if (p.elements[i] == top) p.top = i;
  }
  return p;
}

/// Any finite order given by size() and leq(i, j).
template <class P>
concept FinitePoset = requires(const P& p, std::size_t i) {
  { p.size() } -> std::convertible_to<std::size_t>;
  { p.leq(i, i) } -> std::convertible_to<bool>;
};

/// Maximal antichains of a finite poset, at most `limit` of them.
///
/// Maximal antichains are the maximal cliques of the incomparability graph;
/// they are enumerated with Bron-Kerbosch in index order, so the output is
/// deterministic. Each antichain is sorted ascending.
template <FinitePoset P>
std::vector<std::vector<std::size_t>> maximal_antichains(const P& poset, std::size_t limit) {
  if (limit == 0) throw Error(ErrorKind::Precondition, "antichain limit must be at least 1");
  const std::size_t n = poset.size();
  std::vector<std::vector<bool>> incomparable(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      incomparable[i][j] = i != j && !poset.leq(i, j) && !poset.leq(j, i);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;

  auto recurse = [&](auto&& self, std::vector<std::size_t> candidates, std::vector<std::size_t> excluded) -> void {
    if (out.size() >= limit) return;
    if (candidates.empty() && excluded.empty()) {
      out.push_back(current);
      std::sort(out.back().begin(), out.back().end());
      return;
    }
    while (!candidates.empty()) {
      if (out.size() >= limit) return;
      const std::size_t v = candidates.front();
      std::vector<std::size_t> next_c, next_x;
      for (std::size_t u : candidates) {
        if (incomparable[v][u]) next_c.push_back(u);
      }
      for (std::size_t u : excluded) {
        if (incomparable[v][u]) next_x.push_back(u);
      }
      current.push_back(v);
      self(self, std::move(next_c), std::move(next_x));
      current.pop_back();
      candidates.erase(candidates.begin());
      excluded.push_back(v);
    }
  };

  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  recurse(recurse, std::move(all), {});
  return out;
}

}  // namespace rough
