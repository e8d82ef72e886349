#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rough/error.hpp"

namespace rough {

using Mask = std::uint32_t;

/// Hard ceiling imposed by the mask width; the configurable soft cap lives in Limits.
inline constexpr std::size_t kMaxAtoms = 30;

/// A subset of a finite universe, stored as a characteristic bit vector.
///
/// Bit i stands for the i-th atom of the universe. Two subsets are comparable
/// only when they share the universe width; set operations on mismatched
/// widths throw UniverseMismatch.
class Subset {
public:
  constexpr Subset() = default;
  constexpr Subset(Mask bits, std::size_t width)
      : bits_(bits & full_mask(width)), width_(static_cast<std::uint8_t>(width)) {}

  static constexpr Subset empty(std::size_t width) { return Subset(0, width); }
  static constexpr Subset full(std::size_t width) { return Subset(full_mask(width), width); }
  static constexpr Subset singleton(std::size_t atom, std::size_t width) {
    return Subset(Mask{1} << atom, width);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr std::size_t width() const { return width_; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool is_full() const { return bits_ == full_mask(width_); }
  constexpr bool contains(std::size_t atom) const { return (bits_ >> atom) & 1U; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  Subset complement() const { return Subset(~bits_, width_); }

  bool subset_of(const Subset& other) const {
    check_same(other);
    return (bits_ & ~other.bits_) == 0;
  }
  bool proper_subset_of(const Subset& other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  bool intersects(const Subset& other) const {
    check_same(other);
    return (bits_ & other.bits_) != 0;
  }

  friend Subset operator|(const Subset& a, const Subset& b) {
    a.check_same(b);
    return Subset(a.bits_ | b.bits_, a.width_);
  }
  friend Subset operator&(const Subset& a, const Subset& b) {
    a.check_same(b);
    return Subset(a.bits_ & b.bits_, a.width_);
  }
  /// Set difference.
  friend Subset operator-(const Subset& a, const Subset& b) {
    a.check_same(b);
    return Subset(a.bits_ & ~b.bits_, a.width_);
  }

  friend constexpr bool operator==(const Subset&, const Subset&) = default;
  /// Canonical order: binary counting order on the bit vector.
  friend constexpr auto operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  void check_same(const Subset& other) const {
    if (width_ != other.width_) {
      throw Error(ErrorKind::UniverseMismatch,
                  "subsets over universes of size " + std::to_string(width_) + " and " +
                      std::to_string(other.width_));
    }
  }

  static constexpr Mask full_mask(std::size_t width) {
    return width >= 32 ? ~Mask{0} : (Mask{1} << width) - 1U;
  }

private:
  Mask bits_ = 0;
  std::uint8_t width_ = 0;
};

/// Calls fn(Subset) for every subset of a universe of the given width in
/// canonical (binary counting) order.
template <class Fn>
void for_each_subset(std::size_t width, Fn&& fn) {
  const Mask limit = Subset::full_mask(width);
  for (Mask m = 0;; ++m) {
    fn(Subset(m, width));
    if (m == limit) break;
  }
}

/// Calls fn(Subset) for every subset of `of` (including empty and `of` itself),
/// in increasing mask order.
template <class Fn>
void for_each_subset_of(const Subset& of, Fn&& fn) {
  const Mask all = of.bits();
  Mask m = 0;
  while (true) {
    fn(Subset(m, of.width()));
    if (m == all) break;
    m = (m - all) & all;
  }
}

inline std::vector<Subset> all_subsets(std::size_t width) {
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << width);
  for_each_subset(width, [&](Subset s) { out.push_back(s); });
  return out;
}

/// Ordered, named atoms. The position of an atom is its bit index.
class Universe {
public:
  Universe() = default;

  explicit Universe(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw Error(ErrorKind::Model, "universe must be nonempty");
    if (atoms_.size() > kMaxAtoms) {
      throw Error(ErrorKind::CapExceeded,
                  "universe has " + std::to_string(atoms_.size()) + " atoms; the mask holds at most " +
                      std::to_string(kMaxAtoms));
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      const std::string& name = atoms_[i];
      if (!valid_atom_name(name)) {
        throw Error(ErrorKind::Model, "invalid atom name '" + name + "'");
      }
      if (!index_.emplace(name, i).second) {
        throw Error(ErrorKind::Model, "duplicate atom '" + name + "'");
      }
      single_char_ = single_char_ && name.size() == 1;
    }
  }

  /// Convenience: one atom per character, e.g. "abcefq".
  static Universe of_chars(std::string_view chars) {
    std::vector<std::string> atoms;
    for (char c : chars) atoms.emplace_back(1, c);
    return Universe(std::move(atoms));
  }

  std::size_t size() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom(std::size_t i) const { return atoms_.at(i); }

  std::size_t index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
      throw Error(ErrorKind::UnknownAtom, "unknown atom '" + std::string(name) + "'");
    }
    return it->second;
  }
  bool has_atom(std::string_view name) const { return index_.count(std::string(name)) > 0; }

  Subset empty() const { return Subset::empty(size()); }
  Subset full() const { return Subset::full(size()); }

  Subset make(const std::vector<std::string>& names) const {
    Mask bits = 0;
    for (const auto& n : names) bits |= Mask{1} << index_of(n);
    return Subset(bits, size());
  }

  /// Renders a subset as concatenated atom names; "0" for the empty set and
  /// "S" for the whole universe.
  std::string format(const Subset& s) const {
    check(s);
    if (s.is_empty()) return "0";
    if (s.is_full()) return "S";
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (s.contains(i)) out += atoms_[i];
    }
    return out;
  }

  /// Inverse of format(). Multi-character atom names are matched greedily,
  /// longest first.
  Subset parse(std::string_view text) const {
    if (text == "0") return empty();
    if (text == "S") return full();
    if (text.empty()) throw Error(ErrorKind::UnknownAtom, "empty subset literal");
    Mask bits = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t best = 0;
      std::size_t best_index = 0;
      if (single_char_) {
        auto it = index_.find(std::string(1, text[pos]));
        if (it != index_.end()) {
          best = 1;
          best_index = it->second;
        }
      } else {
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
          const auto& a = atoms_[i];
          if (a.size() > best && text.substr(pos, a.size()) == a) {
            best = a.size();
            best_index = i;
          }
        }
      }
      if (best == 0) {
        throw Error(ErrorKind::UnknownAtom,
                    "unknown atom at '" + std::string(text.substr(pos)) + "' in '" + std::string(text) + "'");
      }
      bits |= Mask{1} << best_index;
      pos += best;
    }
    return Subset(bits, size());
  }

  void check(const Subset& s) const {
    if (s.width() != size()) {
      throw Error(ErrorKind::UniverseMismatch,
                  "subset of width " + std::to_string(s.width()) + " used with universe of size " +
                      std::to_string(size()));
    }
  }

  friend bool operator==(const Universe& a, const Universe& b) { return a.atoms_ == b.atoms_; }

  static bool valid_atom_name(std::string_view name) {
    if (name.empty()) return false;
    if (name == "0" || name == "S" || name == "L" || name == "D" || name == "neg") return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

private:
  std::vector<std::string> atoms_;
  std::unordered_map<std::string, std::size_t> index_;
  bool single_char_ = true;
};

}  // namespace rough

template <>
struct std::hash<rough::Subset> {
  std::size_t operator()(const rough::Subset& s) const noexcept {
    return (static_cast<std::size_t>(s.width()) << 32) ^ s.bits();
  }
};
