#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rough/approx.hpp"
#include "rough/error.hpp"
#include "rough/granular.hpp"

namespace rough {

// Operations of the quotient ℘(S)/≈ on bound pairs. Each result is
// re-validated as a realizable pair.

inline RoughClass class_meet(const ApproximationSpace& s, const RoughClass& a, const RoughClass& b) {
  return RoughClass::from_bounds(s, a.lower() & b.lower(), a.upper() & b.upper());
}

inline RoughClass class_join(const ApproximationSpace& s, const RoughClass& a, const RoughClass& b) {
  return RoughClass::from_bounds(s, a.lower() | b.lower(), a.upper() | b.upper());
}

inline RoughClass class_neg(const ApproximationSpace& s, const RoughClass& a) {
  return RoughClass::from_bounds(s, a.upper().complement(), a.lower().complement());
}

inline RoughClass class_L(const ApproximationSpace& s, const RoughClass& a) {
  return RoughClass::from_bounds(s, a.lower(), a.lower());
}

/// ⋄ = ¬L¬, which sends (l, u) to (u, u).
inline RoughClass class_diamond(const ApproximationSpace& s, const RoughClass& a) {
  return class_neg(s, class_L(s, class_neg(s, a)));
}

/// a ⇒ b = (¬La ⊔ Lb) ⊓ (L¬a ⊔ ¬L¬b).
inline RoughClass class_implies(const ApproximationSpace& s, const RoughClass& a, const RoughClass& b) {
  const RoughClass left = class_join(s, class_neg(s, class_L(s, a)), class_L(s, b));
  const RoughClass right =
      class_join(s, class_L(s, class_neg(s, a)), class_neg(s, class_L(s, class_neg(s, b))));
  return class_meet(s, left, right);
}

using Table1 = std::vector<std::size_t>;
using Table2 = std::vector<std::vector<std::size_t>>;

/// A finite algebra given by explicit operation tables over elements 0..n-1.
struct FiniteAlgebraCandidate {
  std::size_t size = 0;
  Table2 meet;
  std::optional<Table2> join;
  Table1 neg;
  Table1 L;
  std::size_t zero = 0;
  std::size_t one = 0;
  std::optional<Table2> implies;
  std::vector<std::string> names;

  void validate() const {
    auto bad = [](const std::string& what) { throw Error(ErrorKind::Model, "algebra table " + what); };
    auto check2 = [&](const Table2& t, const char* name) {
      if (t.size() != size) bad(std::string(name) + " has wrong row count");
      for (const auto& row : t) {
        if (row.size() != size) bad(std::string(name) + " has a row of wrong length");
        for (auto v : row) {
          if (v >= size) bad(std::string(name) + " has an out-of-range entry");
        }
      }
    };
    auto check1 = [&](const Table1& t, const char* name) {
      if (t.size() != size) bad(std::string(name) + " has wrong length");
      for (auto v : t) {
        if (v >= size) bad(std::string(name) + " has an out-of-range entry");
      }
    };
    if (size == 0) bad("carrier is empty");
    check2(meet, "meet");
    if (join) check2(*join, "join");
    if (implies) check2(*implies, "implies");
    check1(neg, "neg");
    check1(L, "L");
    if (zero >= size || one >= size) bad("constant out of range");
  }

  std::string name(std::size_t i) const { return i < names.size() ? names[i] : std::to_string(i); }
};

using IndexReport = AxiomReport<std::size_t>;

/// The pre-rough algebra on the rough classes of a space (including [∅]).
class QuotientAlgebra {
public:
  explicit QuotientAlgebra(ApproximationSpace space) : space_(std::move(space)) {
    elements_ = rough_classes(space_, true);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  }

  const ApproximationSpace& space() const { return space_; }
  const std::vector<RoughClass>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t index_of(const RoughClass& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw Error(ErrorKind::Precondition, "class is not an element of this quotient");
    return it->second;
  }

  RoughClass meet(const RoughClass& a, const RoughClass& b) const { return class_meet(space_, a, b); }
  RoughClass join(const RoughClass& a, const RoughClass& b) const { return class_join(space_, a, b); }
  RoughClass neg(const RoughClass& a) const { return class_neg(space_, a); }
  RoughClass L(const RoughClass& a) const { return class_L(space_, a); }
  RoughClass diamond(const RoughClass& a) const { return class_diamond(space_, a); }
  RoughClass implies(const RoughClass& a, const RoughClass& b) const { return class_implies(space_, a, b); }
  RoughClass zero() const { return RoughClass::of(space_, space_.empty()); }
  RoughClass one() const { return RoughClass::of(space_, space_.full()); }

  /// Order of the algebra: a ≤ b iff a ⊓ b = a.
  bool leq(const RoughClass& a, const RoughClass& b) const { return meet(a, b) == a; }

  std::string format(const RoughClass& c) const {
    return "(" + space_.format(c.lower()) + "," + space_.format(c.upper()) + ")";
  }

  FiniteAlgebraCandidate to_candidate(bool with_join = true, bool with_implies = true) const {
    const std::size_t n = size();
    FiniteAlgebraCandidate c;
    c.size = n;
    c.meet.assign(n, Table1(n));
    Table2 join_t(n, Table1(n)), imp_t(n, Table1(n));
    c.neg.resize(n);
    c.L.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      c.neg[i] = index_of(neg(elements_[i]));
      c.L[i] = index_of(L(elements_[i]));
      c.names.push_back(format(elements_[i]));
      for (std::size_t j = 0; j < n; ++j) {
        c.meet[i][j] = index_of(meet(elements_[i], elements_[j]));
        join_t[i][j] = index_of(join(elements_[i], elements_[j]));
        imp_t[i][j] = index_of(implies(elements_[i], elements_[j]));
      }
    }
    if (with_join) c.join = std::move(join_t);
    if (with_implies) c.implies = std::move(imp_t);
    c.zero = index_of(zero());
    c.one = index_of(one());
    return c;
  }

private:
  ApproximationSpace space_;
  std::vector<RoughClass> elements_;
  std::map<RoughClass, std::size_t> index_;
};

namespace detail {

/// Helpers for exhaustive substitution over a finite carrier.
class TableChecker {
public:
  explicit TableChecker(const FiniteAlgebraCandidate& c, bool derive_join) : c_(c) {
    c_.validate();
    const std::size_t n = c_.size;
    if (derive_join || !c_.join) {
      Table2 j(n, Table1(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) j[a][b] = c_.neg[c_.meet[c_.neg[a]][c_.neg[b]]];
      }
      join_ = std::move(j);
    } else {
      join_ = *c_.join;
    }
  }

  std::size_t n() const { return c_.size; }
  std::size_t m(std::size_t a, std::size_t b) const { return c_.meet[a][b]; }
  std::size_t j(std::size_t a, std::size_t b) const { return join_[a][b]; }
  std::size_t neg(std::size_t a) const { return c_.neg[a]; }
  std::size_t L(std::size_t a) const { return c_.L[a]; }
  std::size_t zero() const { return c_.zero; }
  std::size_t one() const { return c_.one; }
  bool leq(std::size_t a, std::size_t b) const { return m(a, b) == a; }
  const FiniteAlgebraCandidate& cand() const { return c_; }

  template <class P>
  void unary(IndexReport& r, std::string name, P&& ok) const {
    AxiomScan<std::size_t> s(std::move(name));
    for (std::size_t a = 0; a < n() && !s.failed(); ++a) s.check(ok(a), a);
    r.results.push_back(s.take());
  }
  template <class P>
  void binary(IndexReport& r, std::string name, P&& ok) const {
    AxiomScan<std::size_t> s(std::move(name));
    for (std::size_t a = 0; a < n() && !s.failed(); ++a) {
      for (std::size_t b = 0; b < n() && !s.failed(); ++b) s.check(ok(a, b), a, b);
    }
    r.results.push_back(s.take());
  }
  template <class P>
  void ternary(IndexReport& r, std::string name, P&& ok) const {
    AxiomScan<std::size_t> s(std::move(name));
    for (std::size_t a = 0; a < n() && !s.failed(); ++a) {
      for (std::size_t b = 0; b < n() && !s.failed(); ++b) {
        for (std::size_t c = 0; c < n() && !s.failed(); ++c) s.check(ok(a, b, c), a, b, c);
      }
    }
    r.results.push_back(s.take());
  }
  void nullary(IndexReport& r, std::string name, bool ok) const {
    AxiomScan<std::size_t> s(std::move(name));
    s.check(ok);
    r.results.push_back(s.take());
  }

  /// Bounded distributive lattice laws for (meet, join, 0, 1).
  void lattice(IndexReport& r) const {
    binary(r, "meet-commutative", [&](auto a, auto b) { return m(a, b) == m(b, a); });
    binary(r, "join-commutative", [&](auto a, auto b) { return j(a, b) == j(b, a); });
    ternary(r, "meet-associative", [&](auto a, auto b, auto c) { return m(a, m(b, c)) == m(m(a, b), c); });
    ternary(r, "join-associative", [&](auto a, auto b, auto c) { return j(a, j(b, c)) == j(j(a, b), c); });
    unary(r, "meet-idempotent", [&](auto a) { return m(a, a) == a; });
    unary(r, "join-idempotent", [&](auto a) { return j(a, a) == a; });
    binary(r, "absorption", [&](auto a, auto b) { return m(a, j(a, b)) == a && j(a, m(a, b)) == a; });
    ternary(r, "distributive", [&](auto a, auto b, auto c) { return m(a, j(b, c)) == j(m(a, b), m(a, c)); });
    unary(r, "bounds", [&](auto a) { return m(zero(), a) == zero() && j(a, one()) == one(); });
  }

  /// Involution and De Morgan laws for neg.
  void de_morgan(IndexReport& r) const {
    unary(r, "double-negation", [&](auto a) { return neg(neg(a)) == a; });
    binary(r, "de-morgan", [&](auto a, auto b) { return neg(m(a, b)) == j(neg(a), neg(b)); });
  }

private:
  FiniteAlgebraCandidate c_;
  Table2 join_;
};

}  // namespace detail

/// Pre-rough axioms: De Morgan lattice, the L identities, the quasi-equation,
/// and the ⇒ definition when an implication table is supplied.
inline IndexReport check_pre_rough(const FiniteAlgebraCandidate& cand) {
  detail::TableChecker t(cand, false);
  IndexReport r;
  t.lattice(r);
  t.de_morgan(r);
  auto m = [&](auto a, auto b) { return t.m(a, b); };
  auto j = [&](auto a, auto b) { return t.j(a, b); };
  auto n = [&](auto a) { return t.neg(a); };
  auto L = [&](auto a) { return t.L(a); };
  t.unary(r, "L-deflationary", [&](auto a) { return m(L(a), a) == L(a); });
  t.binary(r, "L-join", [&](auto a, auto b) { return L(j(a, b)) == j(L(a), L(b)); });
  t.unary(r, "L-neg-L", [&](auto a) { return n(L(n(L(a)))) == L(a); });
  t.unary(r, "L-idempotent", [&](auto a) { return L(L(a)) == L(a); });
  t.nullary(r, "L-one", L(t.one()) == t.one());
  t.binary(r, "L-meet", [&](auto a, auto b) { return L(m(a, b)) == m(L(a), L(b)); });
  t.unary(r, "L-excluded-middle", [&](auto a) { return j(n(L(a)), L(a)) == t.one(); });
  t.binary(r, "quasi-equation", [&](auto a, auto b) {
    const bool premise = m(L(a), L(b)) == L(a) && n(L(n(m(a, b)))) == n(L(n(a)));
    return !premise || m(a, b) == a;
  });
  if (cand.implies) {
    const auto& imp = *cand.implies;
    t.binary(r, "implication", [&](auto a, auto b) {
      return imp[a][b] == m(j(n(L(a)), L(b)), j(L(n(a)), n(L(n(b)))));
    });
  }
  return r;
}

/// Quasi-Boolean base (⊔ derived from ⊓ and ¬) plus E1-E6.
inline IndexReport check_essential_pre_rough(const FiniteAlgebraCandidate& cand) {
  detail::TableChecker t(cand, true);
  IndexReport r;
  t.lattice(r);
  t.de_morgan(r);
  t.nullary(r, "neg-zero", t.neg(t.zero()) == t.one());
  auto m = [&](auto a, auto b) { return t.m(a, b); };
  auto n = [&](auto a) { return t.neg(a); };
  auto L = [&](auto a) { return t.L(a); };
  auto leq = [&](auto a, auto b) { return t.leq(a, b); };
  t.nullary(r, "E1", L(t.one()) == t.one());
  t.unary(r, "E2", [&](auto a) { return m(L(a), a) == L(a); });
  t.binary(r, "E3", [&](auto a, auto b) { return L(m(a, b)) == m(L(a), L(b)); });
  t.unary(r, "E4", [&](auto a) { return n(L(n(L(a)))) == L(a); });
  t.unary(r, "E5", [&](auto a) { return m(n(L(a)), L(a)) == t.zero(); });
  t.binary(r, "E6", [&](auto a, auto b) {
    const bool premise = leq(n(L(n(a))), n(L(n(b)))) && leq(L(a), L(b));
    return !premise || leq(a, b);
  });
  return r;
}

/// On a finite carrier complete distributivity reduces to distributivity of
/// the (automatically complete) lattice.
inline bool is_rough_algebra(const FiniteAlgebraCandidate& cand) {
  return check_pre_rough(cand).all_hold();
}

}  // namespace rough
