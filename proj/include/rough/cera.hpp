#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "rough/approx.hpp"
#include "rough/error.hpp"
#include "rough/granular.hpp"
#include "rough/prerough.hpp"

namespace rough {

/// An element of ℘(S) ∪ ℘(S)/≈: a type-1 subset or a type-2 rough class.
class MixedElement {
public:
  MixedElement() = default;
  static MixedElement type1(Subset s) { return MixedElement(std::move(s)); }
  static MixedElement type2(RoughClass c) { return MixedElement(std::move(c)); }

  bool is_type1() const { return std::holds_alternative<Subset>(value_); }
  bool is_type2() const { return !is_type1(); }
  int type() const { return is_type1() ? 1 : 2; }

  const Subset& set() const {
    if (const auto* s = std::get_if<Subset>(&value_)) return *s;
    throw Error(ErrorKind::Precondition, "expected a type-1 element");
  }
  const RoughClass& cls() const {
    if (const auto* c = std::get_if<RoughClass>(&value_)) return *c;
    throw Error(ErrorKind::Precondition, "expected a type-2 element");
  }

  friend bool operator==(const MixedElement&, const MixedElement&) = default;
  /// Type-1 elements precede type-2 elements.
  friend std::strong_ordering operator<=>(const MixedElement& a, const MixedElement& b) {
    if (a.type() != b.type()) return a.type() <=> b.type();
    if (a.is_type1()) return a.set() <=> b.set();
    const auto c = a.cls() <=> b.cls();
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

private:
  explicit MixedElement(Subset s) : value_(std::move(s)) {}
  explicit MixedElement(RoughClass c) : value_(std::move(c)) {}

  std::variant<Subset, RoughClass> value_;
};

using MixedReport = AxiomReport<MixedElement>;

/// The concrete enriched pre-rough algebra of an approximation space.
///
/// Mixed-type cases use bound shortcuts: the union of the members of a class
/// is its upper bound and their intersection is its lower bound.
class CeraModel {
public:
  explicit CeraModel(ApproximationSpace space, bool soft = false) : space_(std::move(space)), soft_(soft) {}

  const ApproximationSpace& space() const { return space_; }
  bool soft() const { return soft_; }

  MixedElement bottom() const { return MixedElement::type1(space_.empty()); }
  MixedElement top() const { return MixedElement::type1(space_.full()); }
  MixedElement zero() const { return cls(space_.empty()); }
  MixedElement one() const { return cls(space_.full()); }

  /// The type-2 element [x].
  MixedElement cls(const Subset& x) const { return MixedElement::type2(RoughClass::of(space_, x)); }

  /// All type-1 elements in canonical order, then all classes (including [∅]).
  std::vector<MixedElement> carrier() const {
    std::vector<MixedElement> out;
    for_each_subset(space_.size(), [&](const Subset& s) { out.push_back(MixedElement::type1(s)); });
    for (const auto& c : rough_classes(space_, true)) out.push_back(MixedElement::type2(c));
    return out;
  }

  MixedElement frakL(const MixedElement& x) const {
    if (x.is_type1()) return MixedElement::type1(space_.lower(x.set()));
    return MixedElement::type2(class_L(space_, x.cls()));
  }

  MixedElement blacklozenge(const MixedElement& x) const {
    if (x.is_type1()) return MixedElement::type1(space_.upper(x.set()));
    return MixedElement::type2(class_diamond(space_, x.cls()));
  }

  MixedElement oplus(const MixedElement& x, const MixedElement& y) const {
    if (x.is_type1() && y.is_type1()) return MixedElement::type1(x.set() | y.set());
    if (x.is_type1()) return cls(x.set() | y.cls().upper());
    if (y.is_type1()) return cls(x.cls().upper() | y.set());
    return MixedElement::type2(class_join(space_, x.cls(), y.cls()));
  }

  MixedElement odot(const MixedElement& x, const MixedElement& y) const {
    if (x.is_type1() && y.is_type1()) return MixedElement::type1(x.set() & y.set());
    if (x.is_type1()) return cls(x.set() & y.cls().lower());
    if (y.is_type1()) return cls(x.cls().lower() & y.set());
    return MixedElement::type2(class_meet(space_, x.cls(), y.cls()));
  }

  /// As odot, with the mixed cases intersecting against the union of members.
  MixedElement circ(const MixedElement& x, const MixedElement& y) const {
    if (x.is_type1() && y.is_type1()) return MixedElement::type1(x.set() & y.set());
    if (x.is_type1()) return cls(x.set() & y.cls().upper());
    if (y.is_type1()) return cls(x.cls().upper() & y.set());
    return MixedElement::type2(class_meet(space_, x.cls(), y.cls()));
  }

  /// The commonality operation of this model: circ when soft, odot otherwise.
  MixedElement commonality(const MixedElement& x, const MixedElement& y) const {
    return soft_ ? circ(x, y) : odot(x, y);
  }

  MixedElement sim_neg(const MixedElement& x) const {
    if (x.is_type1()) return MixedElement::type1(x.set().complement());
    return MixedElement::type2(class_neg(space_, x.cls()));
  }

  /// ¬, defined on type-2 elements only.
  MixedElement partial_neg(const MixedElement& x) const {
    if (x.is_type1()) {
      throw Error(ErrorKind::Undefined, "neg is undefined on the type-1 element " + format(x));
    }
    return MixedElement::type2(class_neg(space_, x.cls()));
  }

  /// ⇝. The union over members z of y of (x ∪ z^c) is x ∪ (y^l)^c.
  MixedElement rightsquig(const MixedElement& x, const MixedElement& y) const {
    if (x.is_type1() && y.is_type1()) return MixedElement::type1(x.set() | y.set().complement());
    return implication_tail(x, y);
  }

  /// ↠. Differs from ⇝ only when both arguments are type-1.
  MixedElement two_head(const MixedElement& x, const MixedElement& y) const {
    if (x.is_type1() && y.is_type1()) return cls(x.set() | y.set().complement());
    return implication_tail(x, y);
  }

  std::string format(const MixedElement& m) const {
    if (m.is_type1()) return space_.format(m.set());
    return "[" + space_.format(m.cls().sample(space_)) + "]";
  }

  /// "[x] bounds=(l,u)" for classes, the subset literal otherwise.
  std::string describe(const MixedElement& m) const {
    if (m.is_type1()) return space_.format(m.set());
    return format(m) + " bounds=(" + space_.format(m.cls().lower()) + "," + space_.format(m.cls().upper()) + ")";
  }

private:
  MixedElement implication_tail(const MixedElement& x, const MixedElement& y) const {
    if (x.is_type1()) return cls(x.set() | y.cls().lower().complement());
    if (y.is_type1()) return cls(x.cls().upper() | y.set().complement());
    return MixedElement::type2(class_implies(space_, x.cls(), y.cls()));
  }

  ApproximationSpace space_;
  bool soft_ = false;
};

/// Exhaustive check of the CERA identity theorem over the model's carrier.
/// The commonality operation of the model (⊙ or ∘) stands in for ⊙.
inline MixedReport check_cera_identities(const CeraModel& w) {
  using M = MixedElement;
  const auto carrier = w.carrier();
  std::vector<M> t1, t2;
  for (const auto& x : carrier) (x.is_type1() ? t1 : t2).push_back(x);

  auto plus = [&](const M& a, const M& b) { return w.oplus(a, b); };
  auto times = [&](const M& a, const M& b) { return w.commonality(a, b); };
  auto L = [&](const M& a) { return w.frakL(a); };
  auto D = [&](const M& a) { return w.blacklozenge(a); };
  auto sim = [&](const M& a) { return w.sim_neg(a); };

  MixedReport r;
  auto over1 = [&](std::string name, const std::vector<M>& xs, auto&& ok) {
    detail::AxiomScan<M> s(std::move(name));
    for (const auto& x : xs) {
      if (s.failed()) break;
      s.check(ok(x), x);
    }
    r.results.push_back(s.take());
  };
  auto over2 = [&](std::string name, const std::vector<M>& xs, const std::vector<M>& ys, auto&& ok) {
    detail::AxiomScan<M> s(std::move(name));
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        if (s.failed()) break;
        s.check(ok(x, y), x, y);
      }
    }
    r.results.push_back(s.take());
  };
  auto over3 = [&](std::string name, const std::vector<M>& xs, auto&& ok) {
    detail::AxiomScan<M> s(std::move(name));
    for (const auto& x : xs) {
      for (const auto& y : xs) {
        for (const auto& z : xs) {
          if (s.failed()) break;
          s.check(ok(x, y, z), x, y, z);
        }
      }
    }
    r.results.push_back(s.take());
  };
  auto neg_defined = [&](const M& x) {
    try {
      (void)w.partial_neg(x);
      return true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Undefined) throw;
      return false;
    }
  };

  over1("type-1", carrier, [&](const M& x) { return (w.rightsquig(x, x) == w.top()) == x.is_type1(); });
  over1("type-2", carrier, [&](const M& x) { return neg_defined(x) == x.is_type2(); });
  over1("ov-1", carrier, [&](const M& x) { return sim(sim(x)) == x && L(L(x)) == L(x) && D(L(x)) == L(x); });
  over1("ov-2", carrier, [&](const M& x) {
    return plus(L(x), x) == x && times(L(x), x) == L(x) && plus(D(x), x) == D(x) && times(D(x), x) == x;
  });
  over1("ov-3", carrier, [&](const M& x) { return L(D(x)) == D(x) && plus(x, x) == x && times(x, x) == x; });
  over1("qov-1", carrier, [&](const M& x) {
    return x.is_type1() ? plus(sim(x), x) == w.top() : plus(sim(L(x)), L(x)) == w.one();
  });
  {
    detail::AxiomScan<M> s("qov-2");
    s.check(sim(w.bottom()) == w.top() && sim(w.zero()) == w.one(), w.bottom(), w.zero());
    r.results.push_back(s.take());
  }
  over2("u1", carrier, carrier, [&](const M& x, const M& y) {
    return plus(x, plus(x, plus(x, y))) == plus(x, plus(x, y)) &&
           times(x, times(x, times(x, y))) == times(x, times(x, y));
  });
  over2("u2", carrier, carrier,
        [&](const M& x, const M& y) { return plus(x, y) == plus(y, x) && times(x, y) == times(y, x); });
  for (int i = 1; i <= 2; ++i) {
    const auto& xs = i == 1 ? t1 : t2;
    const std::string tag = std::to_string(i);
    over3("ter(" + tag + "1)", xs,
          [&](const M& x, const M& y, const M& z) { return plus(x, plus(y, z)) == plus(plus(x, y), z); });
    over3("ter(" + tag + "2)", xs, [&](const M& x, const M& y, const M& z) {
      return plus(x, times(y, z)) == times(plus(x, y), plus(x, z));
    });
    over3("ter(" + tag + "3)", xs,
          [&](const M& x, const M& y, const M& z) { return times(x, times(y, z)) == times(times(x, y), z); });
    over2("bi(" + tag + ")", xs, xs, [&](const M& x, const M& y) {
      return plus(x, times(x, y)) == x && sim(times(x, y)) == plus(sim(x), sim(y));
    });
  }
  over2("bm", t1, t2, [&](const M& x, const M& y) { return !(plus(x, y) == y) || plus(D(x), y) == y; });
  over1("hra1", t1,
        [&](const M& x) { return times(w.one(), x).is_type2() && plus(x, w.zero()).is_type2(); });
  return r;
}

}  // namespace rough
