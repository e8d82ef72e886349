#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rough/cera.hpp"
#include "rough/error.hpp"

namespace rough {

struct DialecticalPair {
  MixedElement first;
  MixedElement second;

  friend bool operator==(const DialecticalPair&, const DialecticalPair&) = default;
  friend auto operator<=>(const DialecticalPair& a, const DialecticalPair& b) {
    if (auto c = a.first <=> b.first; c != 0) return c;
    return a.second <=> b.second;
  }
};

/// Result of a partial operation: a value, or the reason it is undefined.
template <class T>
struct Partial {
  std::optional<T> value;
  std::string reason;

  bool defined() const { return value.has_value(); }
  const T& get() const {
    if (!value) throw Error(ErrorKind::Undefined, reason);
    return *value;
  }

  static Partial ok(T v) { return {std::move(v), {}}; }
  static Partial undefined(std::string why) { return {std::nullopt, std::move(why)}; }
};

/// The concrete rough dialectical algebra on K.
class CradModel {
public:
  explicit CradModel(CeraModel cera) : w_(std::move(cera)) {
    for_each_subset(w_.space().size(), [&](const Subset& s) {
      const auto x = MixedElement::type1(s);
      k_.insert({x, w_.oplus(w_.zero(), x)});
      k_.insert({w_.oplus(x, w_.zero()), x});
    });
  }

  const CeraModel& cera() const { return w_; }
  const std::set<DialecticalPair>& K() const { return k_; }
  std::vector<DialecticalPair> carrier() const { return {k_.begin(), k_.end()}; }

  bool contains(const DialecticalPair& p) const { return k_.count(p) > 0; }

  DialecticalPair pair(const Subset& x) const { return {MixedElement::type1(x), w_.cls(x)}; }
  DialecticalPair mirrored(const Subset& x) const { return {w_.cls(x), MixedElement::type1(x)}; }

  DialecticalPair top_one() const { return {w_.top(), w_.one()}; }
  DialecticalPair one_top() const { return {w_.one(), w_.top()}; }
  DialecticalPair zero_bottom() const { return {w_.zero(), w_.bottom()}; }
  DialecticalPair bottom_zero() const { return {w_.bottom(), w_.zero()}; }

  Partial<DialecticalPair> plus(const DialecticalPair& p, const DialecticalPair& q) const {
    return combine(p, q, [&](const MixedElement& x, const MixedElement& y) { return w_.oplus(x, y); }, "(+)");
  }

  Partial<DialecticalPair> times(const DialecticalPair& p, const DialecticalPair& q) const {
    return combine(p, q, [&](const MixedElement& x, const MixedElement& y) { return w_.commonality(x, y); },
                   "(.)");
  }

  Partial<DialecticalPair> Lstar(const DialecticalPair& p) const {
    require(p);
    return in_k({w_.frakL(p.first), w_.frakL(p.second)});
  }

  Partial<DialecticalPair> sim_star(const DialecticalPair& p) const {
    require(p);
    return in_k({w_.sim_neg(p.first), w_.sim_neg(p.second)});
  }

  /// Componentwise comparison of classes; a type-2 component is its own class.
  bool natural_parthood(const DialecticalPair& p, const DialecticalPair& q) const {
    require(p);
    require(q);
    return class_of(p.first).leq(class_of(q.first)) && class_of(p.second).leq(class_of(q.second));
  }

  std::string format(const DialecticalPair& p) const {
    return "(" + w_.describe(p.first) + ", " + w_.describe(p.second) + ")";
  }

private:
  RoughClass class_of(const MixedElement& m) const {
    return m.is_type1() ? RoughClass::of(w_.space(), m.set()) : m.cls();
  }

  void require(const DialecticalPair& p) const {
    if (!contains(p)) throw Error(ErrorKind::Precondition, "pair " + format(p) + " is not in K");
  }

  Partial<DialecticalPair> in_k(DialecticalPair r) const {
    if (contains(r)) return Partial<DialecticalPair>::ok(std::move(r));
    return Partial<DialecticalPair>::undefined("result " + format(r) + " is not in K");
  }

  /// Shared case analysis of + and ·. Every defined result must also lie in K.
  template <class Op>
  Partial<DialecticalPair> combine(const DialecticalPair& p, const DialecticalPair& q, Op op,
                                   const std::string& sym) const {
    require(p);
    require(q);
    const auto& a = p.first;
    const auto& b = p.second;
    const auto& c = q.first;
    const auto& e = q.second;
    if (a.type() == c.type()) return in_k({op(a, c), op(b, e)});
    // (τ1 a, τ2 c): side condition (e∘a)∘0 = a∘c; the mirror case swaps roles.
    const bool first_is_set = a.is_type1();
    const MixedElement lhs = first_is_set ? op(op(e, a), w_.zero()) : op(op(c, b), w_.zero());
    const MixedElement rhs = first_is_set ? op(a, c) : op(a, e);
    if (!(lhs == rhs)) {
      const std::string l = first_is_set ? "(e" + sym + "a)" + sym + "0" : "(c" + sym + "b)" + sym + "0";
      const std::string r = first_is_set ? "a" + sym + "c" : "a" + sym + "e";
      return Partial<DialecticalPair>::undefined(l + " != " + r + ": " + w_.describe(lhs) + " != " +
                                                 w_.describe(rhs));
    }
    return in_k(first_is_set ? DialecticalPair{op(a, c), op(e, a)} : DialecticalPair{op(a, e), op(c, b)});
  }

  CeraModel w_;
  std::set<DialecticalPair> k_;
};

}  // namespace rough
