#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rough/error.hpp"
#include "rough/opposition.hpp"

namespace rough {

enum class ClosureMode { Equivalence, ReflexiveTransitive };

/// A closed relation over named elements.
class IndiscernibilityRelation {
public:
  static IndiscernibilityRelation close(std::vector<std::string> elements,
                                        const std::vector<std::pair<std::string, std::string>>& pairs,
                                        ClosureMode mode = ClosureMode::Equivalence) {
    IndiscernibilityRelation r;
    r.elements_ = std::move(elements);
    r.mode_ = mode;
    const std::size_t n = r.elements_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!r.index_.emplace(r.elements_[i], i).second) {
        throw Error(ErrorKind::Model, "duplicate element '" + r.elements_[i] + "'");
      }
    }
    r.m_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r.m_[i][i] = true;
    for (const auto& [a, b] : pairs) {
      const auto i = r.index_of(a), j = r.index_of(b);
      r.m_[i][j] = true;
      if (mode == ClosureMode::Equivalence) r.m_[j][i] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!r.m_[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (r.m_[k][j]) r.m_[i][j] = true;
        }
      }
    }
    return r;
  }

  const std::vector<std::string>& elements() const { return elements_; }
  ClosureMode mode() const { return mode_; }

  std::size_t index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw Error(ErrorKind::UnknownAtom, "unknown element '" + std::string(name) + "'");
    return it->second;
  }

  bool related(std::size_t a, std::size_t b) const { return m_.at(a).at(b); }
  bool related(std::string_view a, std::string_view b) const { return related(index_of(a), index_of(b)); }

private:
  std::vector<std::string> elements_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<bool>> m_;
  ClosureMode mode_ = ClosureMode::Equivalence;
};

/// The count r_j: the r-th successor step within block j.
struct CountTag {
  std::size_t value = 1;
  std::size_t block = 1;

  friend bool operator==(const CountTag&, const CountTag&) = default;
  std::string str() const { return std::to_string(value) + "_" + std::to_string(block); }
};

/// Indiscernible-predecessor counting: the first element gets 1_1; an element
/// related to its predecessor opens the next block at 1; otherwise the count
/// moves one step within the current block.
inline std::vector<CountTag> ipc(const std::vector<std::string>& sequence, const IndiscernibilityRelation& rel) {
  std::vector<CountTag> out;
  out.reserve(sequence.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const std::size_t cur = rel.index_of(sequence[i]);
    if (i == 0) {
      out.push_back({1, 1});
      continue;
    }
    const CountTag prev = out.back();
    if (rel.related(rel.index_of(sequence[i - 1]), cur)) {
      out.push_back({1, prev.block + 1});
    } else {
      out.push_back({prev.value + 1, prev.block});
    }
  }
  return out;
}

struct DiscernibilitySquare {
  /// Worlds are ordered element pairs; sentences are IS, IS.NOT, IND, DIS.
  CaseSpace cases;
  std::vector<std::pair<std::pair<std::string, std::string>, Figure>> figures;

  Figure figure(std::string_view a, std::string_view b) const {
    for (const auto& [names, f] : figures) {
      if ((names.first == a && names.second == b) || (names.first == b && names.second == a)) return f;
    }
    throw Error(ErrorKind::Precondition, "no predicate pair " + std::string(a) + "/" + std::string(b));
  }
};

inline DiscernibilitySquare discernibility_square(const IndiscernibilityRelation& rel) {
  const auto& el = rel.elements();
  std::vector<std::string> worlds;
  std::vector<std::vector<TruthPair>> val;
  for (std::size_t a = 0; a < el.size(); ++a) {
    for (std::size_t b = 0; b < el.size(); ++b) {
      worlds.push_back("(" + el[a] + "," + el[b] + ")");
      const bool is = a == b, ind = rel.related(a, b);
      auto tv = [](bool v) { return v ? kTrue : kFalse; };
      val.push_back({tv(is), tv(!is), tv(ind), tv(!ind)});
    }
  }
  DiscernibilitySquare sq{CaseSpace(worlds, {"IS", "IS.NOT", "IND", "DIS"}, val), {}};
  const auto& names = sq.cases.sentences();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      sq.figures.push_back({{names[i], names[j]}, classify_pair(sq.cases, i, j).figure});
    }
  }
  return sq;
}

}  // namespace rough
