#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rough/approx.hpp"
#include "rough/error.hpp"
#include "rough/subset.hpp"

namespace rough {

/// A total map from every subset of a universe to a subset of the same universe.
class OperatorTable {
public:
  OperatorTable() = default;
  explicit OperatorTable(std::size_t width) : width_(width), out_(std::size_t{1} << width) {
    for_each_subset(width, [&](const Subset& s) { out_[s.bits()] = s; });
  }

  static OperatorTable identity(std::size_t width) { return OperatorTable(width); }

  template <class Fn>
  static OperatorTable from_function(std::size_t width, Fn&& fn) {
    OperatorTable t(width);
    for_each_subset(width, [&](const Subset& s) { t.set(s, fn(s)); });
    return t;
  }

  static OperatorTable lower_of(const ApproximationSpace& space) {
    return from_function(space.size(), [&](const Subset& s) { return space.lower(s); });
  }
  static OperatorTable upper_of(const ApproximationSpace& space) {
    return from_function(space.size(), [&](const Subset& s) { return space.upper(s); });
  }

  std::size_t width() const { return width_; }

  Subset operator()(const Subset& in) const {
    check(in);
    return out_[in.bits()];
  }

  void set(const Subset& in, const Subset& out) {
    check(in);
    check(out);
    out_[in.bits()] = out;
  }

  friend bool operator==(const OperatorTable&, const OperatorTable&) = default;

private:
  void check(const Subset& s) const {
    if (s.width() != width_) {
      throw Error(ErrorKind::UniverseMismatch, "operator table over " + std::to_string(width_) +
                                                   " atoms applied to a subset of width " +
                                                   std::to_string(s.width()));
    }
  }

  std::size_t width_ = 0;
  std::vector<Subset> out_;
};

/// A named binary parthood predicate on subsets.
struct Parthood {
  std::string name;
  std::function<bool(const Subset&, const Subset&)> holds;

  static Parthood inclusion() {
    return {"subset", [](const Subset& a, const Subset& b) { return a.subset_of(b); }};
  }

  bool operator()(const Subset& a, const Subset& b) const { return holds(a, b); }
  /// Proper parthood: P a b and not P b a.
  bool proper(const Subset& a, const Subset& b) const { return holds(a, b) && !holds(b, a); }
};

/// Outcome of one axiom. `witness` holds the first counterexample found in
/// canonical order and is empty exactly when the axiom holds.
template <class W>
struct AxiomResult {
  std::string name;
  bool holds = true;
  std::vector<W> witness;
};

template <class W>
struct AxiomReport {
  std::vector<AxiomResult<W>> results;

  bool all_hold() const {
    for (const auto& r : results) {
      if (!r.holds) return false;
    }
    return true;
  }

  const AxiomResult<W>* find(std::string_view name) const {
    for (const auto& r : results) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }

  const AxiomResult<W>& at(std::string_view name) const {
    if (const auto* r = find(name)) return *r;
    throw Error(ErrorKind::Precondition, "no axiom named '" + std::string(name) + "' in report");
  }

  const AxiomResult<W>* first_failure() const {
    for (const auto& r : results) {
      if (!r.holds) return &r;
    }
    return nullptr;
  }
};

using SubsetReport = AxiomReport<Subset>;

namespace detail {

/// Records the first witness for which `violated` is true.
template <class W>
class AxiomScan {
public:
  explicit AxiomScan(std::string name) { result_.name = std::move(name); }

  template <class... Ws>
  void check(bool ok, const Ws&... witness) {
    if (ok || !result_.holds) return;
    result_.holds = false;
    result_.witness = {witness...};
  }

  bool failed() const { return !result_.holds; }
  AxiomResult<W> take() { return std::move(result_); }

private:
  AxiomResult<W> result_;
};

}  // namespace detail

/// A granular operator space: granules plus explicit lower/upper tables and
/// the parthood used by the admissibility conditions.
struct GranularModel {
  std::shared_ptr<const Universe> universe;
  std::vector<Subset> granules;
  OperatorTable lower;
  OperatorTable upper;
  Parthood parthood = Parthood::inclusion();

  std::size_t size() const { return universe->size(); }

  void validate() const {
    if (granules.empty()) throw Error(ErrorKind::Model, "granulation must be nonempty");
    for (const auto& g : granules) {
      universe->check(g);
      if (g.is_empty()) throw Error(ErrorKind::Model, "granules must be nonempty");
    }
    if (lower.width() != size() || upper.width() != size()) {
      throw Error(ErrorKind::UniverseMismatch, "operator tables do not match the universe");
    }
  }
};

inline GranularModel from_space(const ApproximationSpace& space) {
  GranularModel m{space.universe_ptr(), space.blocks(), OperatorTable::lower_of(space),
                  OperatorTable::upper_of(space), Parthood::inclusion()};
  return m;
}

struct GosOptions {
  /// Read the growth condition on u as a strict inclusion a^u ⊂ a^uu.
  bool strict_upper_growth = false;
};

inline SubsetReport check_gos_axioms(const GranularModel& model, GosOptions options = {}) {
  const auto& l = model.lower;
  const auto& u = model.upper;
  const std::size_t n = model.size();
  detail::AxiomScan<Subset> contained("lower-contained"), idem("lower-idempotent"),
      extensive("upper-extensive"), growth("upper-growth"), lmono("lower-monotone"), umono("upper-monotone");
  for_each_subset(n, [&](const Subset& a) {
    const Subset al = l(a), au = u(a);
    contained.check(al.subset_of(a), a);
    idem.check(l(al) == al, a);
    extensive.check(a.subset_of(au), a);
    const Subset auu = u(au);
    growth.check(options.strict_upper_growth ? au.proper_subset_of(auu) : au.subset_of(auu), a);
    if (lmono.failed() && umono.failed()) return;
    for_each_subset(n, [&](const Subset& b) {
      if (!a.subset_of(b)) return;
      lmono.check(al.subset_of(l(b)), a, b);
      umono.check(au.subset_of(u(b)), a, b);
    });
  });
  const Subset empty = Subset::empty(n), full = Subset::full(n);
  detail::AxiomScan<Subset> el("empty-lower"), eu("empty-upper"), fl("full-lower"), fu("full-upper");
  el.check(l(empty).is_empty(), empty);
  eu.check(u(empty).is_empty(), empty);
  fl.check(l(full).subset_of(full), full);
  fu.check(u(full).subset_of(full), full);
  SubsetReport r;
  for (auto* s : {&contained, &idem, &extensive, &growth, &lmono, &umono, &el, &eu, &fl, &fu}) {
    r.results.push_back(s->take());
  }
  return r;
}

enum class OperatorKind { Lower, Upper };

/// Standalone operator axioms. Lower: not (x ⊂ x^l), idempotence, monotonicity.
/// Upper: x ⊆ x^u, monotonicity.
inline SubsetReport check_operator_axioms(const OperatorTable& table, OperatorKind kind) {
  const std::size_t n = table.width();
  SubsetReport r;
  detail::AxiomScan<Subset> first(kind == OperatorKind::Lower ? "non-increasing" : "increasing");
  detail::AxiomScan<Subset> idem("idempotence"), mono("monotonicity");
  for_each_subset(n, [&](const Subset& x) {
    const Subset y = table(x);
    if (kind == OperatorKind::Lower) {
      first.check(!x.proper_subset_of(y), x);
      idem.check(table(y) == y, x);
    } else {
      first.check(x.subset_of(y), x);
    }
    if (mono.failed()) return;
    for_each_subset(n, [&](const Subset& b) {
      if (x.subset_of(b)) mono.check(y.subset_of(table(b)), x, b);
    });
  });
  r.results.push_back(first.take());
  if (kind == OperatorKind::Lower) r.results.push_back(idem.take());
  r.results.push_back(mono.take());
  return r;
}

/// Atoms of the Boolean field of sets generated by the granules: atoms with
/// the same granule-membership signature fall in the same field atom.
inline std::vector<Mask> field_atoms(const std::vector<Subset>& granules, std::size_t width) {
  std::vector<Mask> atoms;
  std::vector<std::vector<bool>> signatures;
  for (std::size_t i = 0; i < width; ++i) {
    std::vector<bool> sig;
    sig.reserve(granules.size());
    for (const auto& g : granules) sig.push_back(g.contains(i));
    auto it = std::find(signatures.begin(), signatures.end(), sig);
    if (it == signatures.end()) {
      signatures.push_back(std::move(sig));
      atoms.push_back(Mask{1} << i);
    } else {
      atoms[static_cast<std::size_t>(it - signatures.begin())] |= Mask{1} << i;
    }
  }
  return atoms;
}

/// Membership in the field of sets generated by the granules: x is a union of
/// field atoms.
inline bool in_generated_field(const std::vector<Mask>& atoms, const Subset& x) {
  for (Mask a : atoms) {
    const Mask part = a & x.bits();
    if (part != 0 && part != a) return false;
  }
  return true;
}

/// Every value of a term over {∪, ∩, complement, S, ∅} applied to granules,
/// up to the given nesting depth.
inline std::set<Mask> term_values(const std::vector<Subset>& granules, std::size_t width, std::size_t depth) {
  const Mask full = Subset::full_mask(width);
  std::set<Mask> values{0, full};
  for (const auto& g : granules) values.insert(g.bits());
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Mask> current(values.begin(), values.end());
    const std::size_t before = values.size();
    for (Mask a : current) {
      values.insert(~a & full);
      for (Mask b : current) {
        values.insert(a | b);
        values.insert(a & b);
      }
    }
    if (values.size() == before) break;
  }
  return values;
}

struct AdmissibilityOptions {
  /// FU with proper parthood (granules strictly inside z).
  bool strict_underlap = false;
  /// Depth bound for the term-search route to WRA.
  std::size_t term_depth = 8;
};

struct Admissibility {
  AxiomResult<Subset> wra;
  AxiomResult<Subset> ls;
  AxiomResult<Subset> fu;

  bool all() const { return wra.holds && ls.holds && fu.holds; }
};

/// WRA decided by explicit term search rather than the field-atom test.
inline AxiomResult<Subset> wra_by_term_search(const GranularModel& model, std::size_t depth) {
  const auto values = term_values(model.granules, model.size(), depth);
  detail::AxiomScan<Subset> wra("WRA");
  for_each_subset(model.size(), [&](const Subset& a) {
    wra.check(values.count(model.lower(a).bits()) && values.count(model.upper(a).bits()), a);
  });
  return wra.take();
}

inline Admissibility check_admissibility(const GranularModel& model, AdmissibilityOptions options = {}) {
  model.validate();
  const std::size_t n = model.size();
  const auto atoms = field_atoms(model.granules, n);
  detail::AxiomScan<Subset> wra("WRA"), ls("LS"), fu("FU");

  for_each_subset(n, [&](const Subset& a) {
    wra.check(in_generated_field(atoms, model.lower(a)) && in_generated_field(atoms, model.upper(a)), a);
  });

  for (const auto& g : model.granules) {
    if (ls.failed()) break;
    for_each_subset(n, [&](const Subset& a) {
      if (model.parthood(g, a)) ls.check(model.parthood(g, model.lower(a)), g, a);
    });
  }

  std::vector<Subset> definite;
  for_each_subset(n, [&](const Subset& z) {
    if (model.lower(z) == z && model.upper(z) == z) definite.push_back(z);
  });
  auto part = [&](const Subset& x, const Subset& z) {
    return options.strict_underlap ? model.parthood.proper(x, z) : model.parthood(x, z);
  };
  for (const auto& x : model.granules) {
    for (const auto& y : model.granules) {
      if (fu.failed()) break;
      bool found = false;
      for (const auto& z : definite) {
        if (part(x, z) && part(y, z)) {
          found = true;
          break;
        }
      }
      fu.check(found, x, y);
    }
  }
  return {wra.take(), ls.take(), fu.take()};
}

inline constexpr double kGranulationCandidateCap = 1e7;

/// Number of candidate families searched: sum over k <= max of C(m, k), with
/// m the number of nonempty subsets.
inline double granulation_candidates(std::size_t width, std::size_t max_granules) {
  const double m = static_cast<double>((std::size_t{1} << width) - 1);
  double total = 0, c = 1;
  for (std::size_t k = 1; k <= max_granules; ++k) {
    c = c * (m - static_cast<double>(k) + 1) / static_cast<double>(k);
    if (c <= 0) break;
    total += c;
  }
  return total;
}

/// Inverse problem by brute force: every family of at most `max_granules`
/// nonempty subsets that is admissible for the given tables, in canonical
/// order (by size, then lexicographically by mask).
inline std::vector<std::vector<Subset>> search_admissible_granulations(
    std::shared_ptr<const Universe> universe, const OperatorTable& lower, const OperatorTable& upper,
    std::size_t max_granules, Parthood parthood = Parthood::inclusion(), AdmissibilityOptions options = {},
    Limits limits = {}) {
  if (max_granules == 0) throw Error(ErrorKind::Precondition, "maxGranules must be at least 1");
  const std::size_t n = universe->size();
  if (n > limits.max_atoms) throw Error(ErrorKind::CapExceeded, "universe exceeds the configured cap");
  if (granulation_candidates(n, max_granules) > kGranulationCandidateCap) {
    throw Error(ErrorKind::CapExceeded, "granulation search space exceeds " +
                                            std::to_string(static_cast<long long>(kGranulationCandidateCap)) +
                                            " candidates");
  }
  std::vector<Subset> nonempty;
  for_each_subset(n, [&](const Subset& s) {
    if (!s.is_empty()) nonempty.push_back(s);
  });

  GranularModel model{universe, {}, lower, upper, std::move(parthood)};
  std::vector<std::vector<Subset>> out;
  std::vector<std::size_t> pick;
  auto recurse = [&](auto&& self, std::size_t start, std::size_t remaining) -> void {
    if (remaining == 0) {
      model.granules.clear();
      for (auto i : pick) model.granules.push_back(nonempty[i]);
      if (check_admissibility(model, options).all()) out.push_back(model.granules);
      return;
    }
    for (std::size_t i = start; i + remaining <= nonempty.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1, remaining - 1);
      pick.pop_back();
    }
  };
  for (std::size_t k = 1; k <= max_granules && k <= nonempty.size(); ++k) recurse(recurse, 0, k);
  return out;
}

}  // namespace rough
