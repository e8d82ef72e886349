#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rough/approx.hpp"
#include "rough/error.hpp"

namespace rough {

enum class Figure { Contradiction, Contrariety, SubContrariety, SubAlternation };

inline std::string to_string(Figure f) {
  switch (f) {
    case Figure::Contradiction: return "Contradiction";
    case Figure::Contrariety: return "Contrariety";
    case Figure::SubContrariety: return "SubContrariety";
    case Figure::SubAlternation: return "SubAlternation";
  }
  return "?";
}

/// Answers to "can they be true together" and "can they be false together".
inline Figure classify_from_questions(bool tt_possible, bool ff_possible) {
  if (tt_possible) return ff_possible ? Figure::SubAlternation : Figure::SubContrariety;
  return ff_possible ? Figure::Contrariety : Figure::Contradiction;
}

/// A four-state truth value: separate evidence for truth and for falsity.
struct TruthPair {
  bool t = false;
  bool f = false;
  bool classical() const { return t != f; }
  friend bool operator==(const TruthPair&, const TruthPair&) = default;
};

inline constexpr TruthPair kTrue{true, false};
inline constexpr TruthPair kFalse{false, true};
inline constexpr TruthPair kBoth{true, true};
inline constexpr TruthPair kNeither{false, false};

/// Worlds and the truth pair of every sentence in every world.
class CaseSpace {
public:
  CaseSpace(std::vector<std::string> worlds, std::vector<std::string> sentences,
            std::vector<std::vector<TruthPair>> valuation)
      : worlds_(std::move(worlds)), sentences_(std::move(sentences)), val_(std::move(valuation)) {
    if (worlds_.empty()) throw Error(ErrorKind::Model, "case space needs at least one world");
    if (val_.size() != worlds_.size()) throw Error(ErrorKind::Model, "valuation must list every world");
    for (const auto& row : val_) {
      if (row.size() != sentences_.size()) throw Error(ErrorKind::Model, "every sentence must be valued in every world");
    }
  }

  /// Worlds are the atoms of a universe; sentence k is "x ∈ regions[k]".
  static CaseSpace membership(const Universe& u, std::vector<std::string> names, const std::vector<Subset>& regions) {
    std::vector<std::vector<TruthPair>> val(u.size());
    for (std::size_t w = 0; w < u.size(); ++w) {
      for (const auto& r : regions) val[w].push_back(r.contains(w) ? kTrue : kFalse);
    }
    return CaseSpace(u.atoms(), std::move(names), std::move(val));
  }

  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::vector<std::string>& sentences() const { return sentences_; }
  const TruthPair& value(std::size_t world, std::size_t sentence) const { return val_.at(world).at(sentence); }

  std::size_t sentence(std::string_view name) const {
    for (std::size_t i = 0; i < sentences_.size(); ++i) {
      if (sentences_[i] == name) return i;
    }
    throw Error(ErrorKind::UnknownAtom, "unknown sentence '" + std::string(name) + "'");
  }

private:
  std::vector<std::string> worlds_;
  std::vector<std::string> sentences_;
  std::vector<std::vector<TruthPair>> val_;
};

/// Which of the four rows TT, TF, FT, FF occur in some world (by t-component).
struct RowProfile {
  bool tt = false, tf = false, ft = false, ff = false;
  friend bool operator==(const RowProfile&, const RowProfile&) = default;
};

struct PairClassification {
  Figure figure;
  RowProfile rows;
};

enum class Valuation { Classical, Belnap };

inline PairClassification classify_pair(const CaseSpace& cs, std::size_t a, std::size_t b,
                                        Valuation mode = Valuation::Classical) {
  RowProfile rows;
  for (std::size_t w = 0; w < cs.worlds().size(); ++w) {
    const auto& va = cs.value(w, a);
    const auto& vb = cs.value(w, b);
    if (mode == Valuation::Classical && (!va.classical() || !vb.classical())) {
      throw Error(ErrorKind::Precondition, "non-classical valuation in world '" + cs.worlds()[w] + "'");
    }
    rows.tt = rows.tt || (va.t && vb.t);
    rows.tf = rows.tf || (va.t && !vb.t);
    rows.ft = rows.ft || (!va.t && vb.t);
    rows.ff = rows.ff || (!va.t && !vb.t);
  }
  return {classify_from_questions(rows.tt, rows.ff), rows};
}

struct HexagonEdge {
  std::size_t from;
  std::size_t to;
  PairClassification result;
};

struct Hexagon {
  /// L, E, B, U, complement of L, L ∪ E.
  std::array<std::string, 6> names{"L", "E", "B", "U", "coL", "LE"};
  std::array<Subset, 6> regions;
  std::vector<HexagonEdge> edges;
  std::optional<std::string> warning;

  Figure figure(std::string_view a, std::string_view b) const {
    for (const auto& e : edges) {
      if ((names[e.from] == a && names[e.to] == b) || (names[e.from] == b && names[e.to] == a)) {
        return e.result.figure;
      }
    }
    throw Error(ErrorKind::Precondition, "no hexagon node pair " + std::string(a) + "/" + std::string(b));
  }
};

/// The tri-partition of a space by X (lower approximation, boundary,
/// exterior) and the six membership sentences built from it.
inline Hexagon hexagon(const ApproximationSpace& space, const Subset& x) {
  Hexagon h;
  const Subset l = space.lower(x), u = space.upper(x);
  const Subset e = u.complement(), b = u - l;
  h.regions = {l, e, b, u, l.complement(), l | e};
  std::vector<std::string> names(h.names.begin(), h.names.end());
  const auto cs = CaseSpace::membership(space.universe(), names, {h.regions.begin(), h.regions.end()});
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) h.edges.push_back({i, j, classify_pair(cs, i, j)});
  }
  std::vector<std::string> empty;
  if (l.is_empty()) empty.push_back("L");
  if (b.is_empty()) empty.push_back("B");
  if (e.is_empty()) empty.push_back("E");
  if (!empty.empty()) {
    std::string w = "degenerate partition: empty region";
    for (const auto& n : empty) w += " " + n;
    h.warning = w;
  }
  return h;
}

enum class Entry { T, F, NP, IN };
enum class Row { TT, TF, FT, FF };

inline std::string to_string(Entry e) {
  switch (e) {
    case Entry::T: return "T";
    case Entry::F: return "F";
    case Entry::NP: return "NP";
    case Entry::IN: return "IN";
  }
  return "?";
}

inline std::string to_string(Row r) {
  switch (r) {
    case Row::TT: return "TT";
    case Row::TF: return "TF";
    case Row::FT: return "FT";
    case Row::FF: return "FF";
  }
  return "?";
}

/// Truth values of the left and right predicate in a row.
inline std::pair<bool, bool> row_values(Row r) {
  return {r == Row::TT || r == Row::TF, r == Row::TT || r == Row::FT};
}

struct ReferenceTable {
  int number = 0;
  std::string left;
  std::string right;
  std::vector<std::pair<Row, Entry>> rows;
  std::string caption;

  std::optional<Entry> entry(Row r) const {
    for (const auto& [row, e] : rows) {
      if (row == r) return e;
    }
    return std::nullopt;
  }
};

/// Truth tables for AP/CP predicate pairs (Tables 7-12) and the answers to
/// the two simultaneity questions (Tables 13-18), as printed.
inline const std::vector<ReferenceTable>& reference_tables() {
  using enum Row;
  using E = Entry;
  static const std::vector<ReferenceTable> tables = {
      {7, "AP", "APN", {{TT, E::IN}, {TF, E::T}, {FT, E::T}, {FF, E::IN}}, "Contradiction?"},
      {8, "AP", "AP0", {{TT, E::IN}, {TF, E::T}, {FT, E::T}, {FF, E::IN}}, "Contradiction?"},
      {9, "CP", "CPN", {{TT, E::NP}, {TF, E::T}, {FT, E::T}, {FF, E::NP}}, "Contradiction"},
      {10, "CP", "CP0", {{TT, E::NP}, {TF, E::T}, {FT, E::T}, {FF, E::T}}, "Contrariety"},
      {11, "CPN", "CP0", {{TT, E::NP}, {TF, E::T}, {FT, E::T}, {FF, E::NP}}, "Contradiction"},
      {12, "CI", "CP", {{TT, E::T}, {TF, E::NP}, {FT, E::T}, {FF, E::T}}, "Sub-alternation"},
      {13, "AP", "APN", {{TT, E::NP}, {FF, E::NP}}, "Contradiction"},
      {14, "AP", "AP0", {{TT, E::T}, {FF, E::NP}}, "Sub-Contrariety"},
      {15, "CP", "CPN", {{TT, E::NP}, {FF, E::NP}}, "Contradiction"},
      {16, "CP", "CP0", {{TT, E::NP}, {FF, E::NP}}, "Contradiction"},
      {17, "CPN", "CP0", {{TT, E::NP}, {FF, E::NP}}, "Contradiction"},
      {18, "CI", "CP", {{TT, E::T}, {FF, E::T}}, "Sub-alternation"},
  };
  return tables;
}

inline const ReferenceTable& reference_table(int number) {
  for (const auto& t : reference_tables()) {
    if (t.number == number) return t;
  }
  throw Error(ErrorKind::Precondition, "no reference table " + std::to_string(number));
}

struct JointConsistency {
  bool satisfiable = false;
  std::vector<std::string> predicates;
  /// The largest family of joint assignments that violates no NP row.
  std::vector<std::vector<bool>> assignments;
  /// First T row that the family fails to realize, when unsatisfiable.
  std::optional<std::string> unmet;
};

/// Looks for a family of joint truth assignments to all predicates that
/// avoids every NP row and realizes every T row. IN entries are unconstrained.
inline JointConsistency joint_consistency(const std::vector<ReferenceTable>& tables) {
  JointConsistency out;
  std::map<std::string, std::size_t> idx;
  for (const auto& t : tables) {
    for (const auto* p : {&t.left, &t.right}) {
      if (idx.emplace(*p, out.predicates.size()).second) out.predicates.push_back(*p);
    }
  }
  const std::size_t k = out.predicates.size();
  for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
    std::vector<bool> a(k);
    for (std::size_t i = 0; i < k; ++i) a[i] = (bits >> i) & 1U;
    bool allowed = true;
    for (const auto& t : tables) {
      for (const auto& [row, e] : t.rows) {
        const auto [l, r] = row_values(row);
        if (e == Entry::NP && a[idx[t.left]] == l && a[idx[t.right]] == r) allowed = false;
      }
    }
    if (allowed) out.assignments.push_back(std::move(a));
  }
  if (out.assignments.empty()) {
    out.unmet = "no joint assignment avoids every NP row";
    return out;
  }
  for (const auto& t : tables) {
    for (const auto& [row, e] : t.rows) {
      if (e != Entry::T) continue;
      const auto [l, r] = row_values(row);
      bool realized = false;
      for (const auto& a : out.assignments) realized = realized || (a[idx[t.left]] == l && a[idx[t.right]] == r);
      if (!realized) {
        out.unmet = "table " + std::to_string(t.number) + " row " + to_string(row);
        return out;
      }
    }
  }
  out.satisfiable = true;
  return out;
}

/// The twelve columns of the potential-combination table, in printed order.
inline const std::array<std::string, 12>& combination_labels() {
  static const std::array<std::string, 12> labels = {"T/T", "F/F", "ℶ/ℶ", "δ/δ", "δ/ℶ", "β/β",
                                                     "β/ℶ", "β/T", "β/F", "δ/T", "δ/F", "δ/β"};
  return labels;
}

/// User-supplied dialectical annotations: sentences expressing dialectical
/// opposition (β) and pairs in dialectical opposition (ℶ, symmetric).
struct DialecticAnnotations {
  std::set<std::size_t> beta;
  std::set<std::pair<std::size_t, std::size_t>> beth;
};

/// Labels of the combination table realized in some world. A sentence X
/// carries T when t-true, F when f-true, δ when both, β when annotated and
/// t-true, and ℶ when the pair is annotated and X is t-true.
inline std::set<std::string> combination_profile(const CaseSpace& cs, std::size_t a, std::size_t b,
                                                 const std::optional<DialecticAnnotations>& notes) {
  if (!notes) throw Error(ErrorKind::Precondition, "missing annotation: β and ℶ must be supplied");
  const bool opposed = notes->beth.count({a, b}) || notes->beth.count({b, a});
  std::set<std::string> out;
  for (std::size_t w = 0; w < cs.worlds().size(); ++w) {
    auto labels = [&](std::size_t s) {
      const auto& v = cs.value(w, s);
      std::set<std::string> l;
      if (v.t) l.insert("T");
      if (v.f) l.insert("F");
      if (v.t && v.f) l.insert("δ");
      if (v.t && notes->beta.count(s)) l.insert("β");
      if (v.t && opposed) l.insert("ℶ");
      return l;
    };
    const auto la = labels(a), lb = labels(b);
    for (const auto& label : combination_labels()) {
      const auto slash = label.find('/');
      if (la.count(label.substr(0, slash)) && lb.count(label.substr(slash + 1))) out.insert(label);
    }
  }
  return out;
}

/// Nodes of the weak/strong truth graph.
enum class TruthGrade { TStar, TLowStar, T, TUpMinus, TLowMinus, FUpMinus, FLowMinus, F };

inline constexpr std::array<TruthGrade, 8> kAllGrades = {
    TruthGrade::TStar,    TruthGrade::TLowStar,  TruthGrade::T,         TruthGrade::TUpMinus,
    TruthGrade::TLowMinus, TruthGrade::FUpMinus, TruthGrade::FLowMinus, TruthGrade::F};

inline std::string to_string(TruthGrade g) {
  switch (g) {
    case TruthGrade::TStar: return "T*";
    case TruthGrade::TLowStar: return "T_*";
    case TruthGrade::T: return "T";
    case TruthGrade::TUpMinus: return "T^-";
    case TruthGrade::TLowMinus: return "T_-";
    case TruthGrade::FUpMinus: return "F^-";
    case TruthGrade::FLowMinus: return "F_-";
    case TruthGrade::F: return "F";
  }
  return "?";
}

inline TruthGrade parse_truth_grade(std::string_view s) {
  for (auto g : kAllGrades) {
    if (s == to_string(g)) return g;
  }
  throw Error(ErrorKind::Parse, "unknown truth grade '" + std::string(s) + "'");
}

/// Directed edges of the truth graph.
inline const std::vector<std::pair<TruthGrade, TruthGrade>>& truth_graph_edges() {
  using enum TruthGrade;
  static const std::vector<std::pair<TruthGrade, TruthGrade>> edges = {
      {TStar, TLowStar}, {TLowStar, T},         {T, FUpMinus},        {FUpMinus, FLowMinus},
      {FLowMinus, F},    {T, TUpMinus},         {TUpMinus, TLowMinus}, {TLowMinus, F}};
  return edges;
}

enum class Evidence { Support, Oppose };
enum class Branch { FBranch, TBranch };

/// Resolves the two forks of the graph: opposing at T, supporting at F.
struct BranchPolicy {
  Branch oppose_at_t = Branch::FBranch;
  Branch support_at_f = Branch::FBranch;
};

/// One step: opposition follows an edge, support goes back along one.
/// Sources and sinks saturate.
inline TruthGrade tsr_step(TruthGrade g, Evidence ev, BranchPolicy policy = {}) {
  using enum TruthGrade;
  if (ev == Evidence::Oppose) {
    switch (g) {
      case TStar: return TLowStar;
      case TLowStar: return T;
      case T: return policy.oppose_at_t == Branch::FBranch ? FUpMinus : TUpMinus;
      case TUpMinus: return TLowMinus;
      case TLowMinus: return F;
      case FUpMinus: return FLowMinus;
      case FLowMinus: return F;
      case F: return F;
    }
  }
  switch (g) {
    case TStar: return TStar;
    case TLowStar: return TStar;
    case T: return TLowStar;
    case TUpMinus: return T;
    case TLowMinus: return TUpMinus;
    case FUpMinus: return T;
    case FLowMinus: return FUpMinus;
    case F: return policy.support_at_f == Branch::FBranch ? FLowMinus : TLowMinus;
  }
  return g;
}

inline std::vector<TruthGrade> tsr_walk(TruthGrade start, const std::vector<Evidence>& evidence,
                                        BranchPolicy policy = {}) {
  std::vector<TruthGrade> path{start};
  for (auto e : evidence) path.push_back(tsr_step(path.back(), e, policy));
  return path;
}

}  // namespace rough
