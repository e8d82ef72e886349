#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rough/approx.hpp"
#include "rough/cera.hpp"
#include "rough/crad.hpp"
#include "rough/error.hpp"

namespace rough {

enum class ParthoodKind {
  VeryCautious,
  Cautious,
  Lateral,
  Possibilist,
  UltraCautious,
  LateralPlus,
  Bilateral,
  LateralPlusPlus,
  GSimple,
  RoughlyConsistent,
  Additive,
  Common,
  NaturalCrad,
};

inline constexpr std::array<ParthoodKind, 13> kAllParthoods = {
    ParthoodKind::VeryCautious,  ParthoodKind::Cautious,          ParthoodKind::Lateral,
    ParthoodKind::Possibilist,   ParthoodKind::UltraCautious,     ParthoodKind::LateralPlus,
    ParthoodKind::Bilateral,     ParthoodKind::LateralPlusPlus,   ParthoodKind::GSimple,
    ParthoodKind::RoughlyConsistent, ParthoodKind::Additive,      ParthoodKind::Common,
    ParthoodKind::NaturalCrad,
};

enum class Carrier { PowerSet, Mixed, DialecticalPairs };

inline std::string to_string(ParthoodKind k) {
  switch (k) {
    case ParthoodKind::VeryCautious: return "very-cautious";
    case ParthoodKind::Cautious: return "cautious";
    case ParthoodKind::Lateral: return "lateral";
    case ParthoodKind::Possibilist: return "possibilist";
    case ParthoodKind::UltraCautious: return "ultra-cautious";
    case ParthoodKind::LateralPlus: return "lateral+";
    case ParthoodKind::Bilateral: return "bilateral";
    case ParthoodKind::LateralPlusPlus: return "lateral++";
    case ParthoodKind::GSimple: return "g-simple";
    case ParthoodKind::RoughlyConsistent: return "roughly-consistent";
    case ParthoodKind::Additive: return "additive";
    case ParthoodKind::Common: return "common";
    case ParthoodKind::NaturalCrad: return "natural";
  }
  return "?";
}

/// Accepts the canonical names case-insensitively, ignoring '-', '_' and
/// spaces; "plus" may stand for '+'.
inline ParthoodKind parse_parthood(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c == '-' || c == '_' || c == ' ') continue;
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  auto replace_all = [](std::string s, std::string_view from, std::string_view to) {
    for (std::size_t p; (p = s.find(from)) != std::string::npos;) s.replace(p, from.size(), to);
    return s;
  };
  key = replace_all(key, "plus", "+");
  for (auto k : kAllParthoods) {
    std::string canon;
    for (char c : to_string(k)) {
      if (c != '-') canon += c;
    }
    if (key == canon) return k;
  }
  if (key == "naturalcrad" || key == "aleph") return ParthoodKind::NaturalCrad;
  throw Error(ErrorKind::Parse, "unknown parthood kind '" + std::string(text) + "'");
}

inline Carrier carrier_of(ParthoodKind k) {
  switch (k) {
    case ParthoodKind::RoughlyConsistent:
    case ParthoodKind::Additive:
    case ParthoodKind::Common: return Carrier::Mixed;
    case ParthoodKind::NaturalCrad: return Carrier::DialecticalPairs;
    default: return Carrier::PowerSet;
  }
}

/// An argument of a parthood: a CERA element or a pair of K.
using PartTerm = std::variant<MixedElement, DialecticalPair>;

struct RelationReport {
  AxiomResult<PartTerm> reflexive{"reflexive", true, {}};
  AxiomResult<PartTerm> antisymmetric{"antisymmetric", true, {}};
  AxiomResult<PartTerm> transitive{"transitive", true, {}};
};

/// Evaluates every catalog parthood over one approximation space.
class ParthoodModel {
public:
  explicit ParthoodModel(ApproximationSpace space, std::optional<std::vector<Subset>> granules = std::nullopt,
                         std::size_t carrier_cap = 4096)
      : crad_(CeraModel(space)), cap_(carrier_cap) {
    granules_ = granules ? std::move(*granules) : crad_.cera().space().blocks();
  }

  const ApproximationSpace& space() const { return crad_.cera().space(); }
  const CeraModel& cera() const { return crad_.cera(); }
  const CradModel& crad() const { return crad_; }
  const std::vector<Subset>& granules() const { return granules_; }

  std::vector<PartTerm> carrier(ParthoodKind kind) const {
    std::vector<PartTerm> out;
    switch (carrier_of(kind)) {
      case Carrier::PowerSet:
        for_each_subset(space().size(), [&](const Subset& s) { out.emplace_back(MixedElement::type1(s)); });
        break;
      case Carrier::Mixed:
        for (auto& m : cera().carrier()) out.emplace_back(std::move(m));
        break;
      case Carrier::DialecticalPairs:
        for (const auto& p : crad_.K()) out.emplace_back(p);
        break;
    }
    if (out.size() > cap_) {
      throw Error(ErrorKind::CapExceeded, "carrier of " + to_string(kind) + " has " + std::to_string(out.size()) +
                                              " elements, above the cap of " + std::to_string(cap_));
    }
    return out;
  }

  bool holds(ParthoodKind kind, const PartTerm& a, const PartTerm& b) const {
    switch (carrier_of(kind)) {
      case Carrier::PowerSet: return holds_set(kind, as_set(kind, a), as_set(kind, b));
      case Carrier::Mixed: return holds_mixed(kind, as_mixed(kind, a), as_mixed(kind, b));
      case Carrier::DialecticalPairs: return crad_.natural_parthood(as_pair(kind, a), as_pair(kind, b));
    }
    return false;
  }

  bool holds(ParthoodKind kind, const Subset& a, const Subset& b) const {
    return holds(kind, PartTerm(MixedElement::type1(a)), PartTerm(MixedElement::type1(b)));
  }

  std::vector<std::vector<bool>> relation_matrix(ParthoodKind kind) const {
    const auto c = carrier(kind);
    std::vector<std::vector<bool>> m(c.size(), std::vector<bool>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c.size(); ++j) m[i][j] = holds(kind, c[i], c[j]);
    }
    return m;
  }

  RelationReport analyze(ParthoodKind kind) const {
    const auto c = carrier(kind);
    const auto m = relation_matrix(kind);
    const std::size_t n = c.size();
    detail::AxiomScan<PartTerm> refl("reflexive"), anti("antisymmetric"), trans("transitive");
    for (std::size_t i = 0; i < n; ++i) refl.check(m[i][i], c[i]);
    for (std::size_t i = 0; i < n && !anti.failed(); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) anti.check(!(m[i][j] && m[j][i]), c[i], c[j]);
      }
    }
    for (std::size_t i = 0; i < n && !trans.failed(); ++i) {
      for (std::size_t j = 0; j < n && !trans.failed(); ++j) {
        if (!m[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (m[j][k]) trans.check(m[i][k], c[i], c[j], c[k]);
        }
      }
    }
    return {refl.take(), anti.take(), trans.take()};
  }

  std::string format(const PartTerm& t) const {
    if (const auto* m = std::get_if<MixedElement>(&t)) return cera().format(*m);
    return crad_.format(std::get<DialecticalPair>(t));
  }

private:
  bool holds_set(ParthoodKind kind, const Subset& a, const Subset& b) const {
    const auto& s = space();
    const Subset al = s.lower(a), au = s.upper(a), bl = s.lower(b), bu = s.upper(b);
    switch (kind) {
      case ParthoodKind::VeryCautious: return al.subset_of(bl);
      case ParthoodKind::Cautious: return al.subset_of(bu);
      case ParthoodKind::Lateral: return al.subset_of(bu - bl);
      case ParthoodKind::Possibilist: return au.subset_of(bu);
      case ParthoodKind::UltraCautious: return au.subset_of(bl);
      case ParthoodKind::LateralPlus: return au.subset_of(bu - bl);
      case ParthoodKind::Bilateral: return (au - al).subset_of(bu - bl);
      case ParthoodKind::LateralPlusPlus: return (au - al).subset_of(bl);
      case ParthoodKind::GSimple:
        return std::all_of(granules_.begin(), granules_.end(),
                           [&](const Subset& g) { return !g.subset_of(a) || g.subset_of(b); });
      default: break;
    }
    throw Error(ErrorKind::CarrierMismatch, to_string(kind) + " is not defined on subsets");
  }

  bool holds_mixed(ParthoodKind kind, const MixedElement& a, const MixedElement& b) const {
    switch (kind) {
      case ParthoodKind::RoughlyConsistent: return class_of(a).leq(class_of(b));
      case ParthoodKind::Additive: return cera().oplus(a, b) == b;
      case ParthoodKind::Common: return cera().odot(a, b) == a;
      default: break;
    }
    throw Error(ErrorKind::CarrierMismatch, to_string(kind) + " is not defined on the mixed carrier");
  }

  RoughClass class_of(const MixedElement& m) const {
    return m.is_type1() ? RoughClass::of(space(), m.set()) : m.cls();
  }

  static const MixedElement& as_mixed(ParthoodKind kind, const PartTerm& t) {
    if (const auto* m = std::get_if<MixedElement>(&t)) return *m;
    throw Error(ErrorKind::CarrierMismatch, to_string(kind) + " takes CERA elements, not pairs of K");
  }
  static const Subset& as_set(ParthoodKind kind, const PartTerm& t) {
    const auto& m = as_mixed(kind, t);
    if (!m.is_type1()) throw Error(ErrorKind::CarrierMismatch, to_string(kind) + " takes subsets, not classes");
    return m.set();
  }
  static const DialecticalPair& as_pair(ParthoodKind kind, const PartTerm& t) {
    if (const auto* p = std::get_if<DialecticalPair>(&t)) return *p;
    throw Error(ErrorKind::CarrierMismatch, to_string(kind) + " takes pairs of K");
  }

  CradModel crad_;
  std::vector<Subset> granules_;
  std::size_t cap_;
};

}  // namespace rough
