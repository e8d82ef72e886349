#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rough/approx.hpp"
#include "rough/counting.hpp"
#include "rough/error.hpp"
#include "rough/granular.hpp"
#include "rough/negation.hpp"
#include "rough/opposition.hpp"
#include "rough/prerough.hpp"
#include "rough/propsys.hpp"

namespace rough {

struct NamedCaseSpace {
  std::string name;
  CaseSpace cases;
  std::optional<DialecticAnnotations> annotations;
};

struct NegationFixture {
  std::vector<std::string> elements;
  BoundedPoset poset;
  std::map<std::string, UnaryOp> ops;
};

struct IpcFixture {
  std::vector<std::string> sequence;
  IndiscernibilityRelation relation;
};

/// Everything a model file can describe. Only the approximation space is
/// mandatory.
struct ModelFile {
  ApproximationSpace space;
  std::optional<std::vector<Subset>> granules;
  std::optional<OperatorTable> lower_table;
  std::optional<OperatorTable> upper_table;
  std::optional<PropertySystem> property_system;
  std::vector<NamedCaseSpace> case_spaces;
  std::optional<FiniteAlgebraCandidate> algebra;
  std::optional<NegationFixture> negation;
  std::optional<IpcFixture> ipc;

  /// The granular model: explicit granules and tables where given, the
  /// classical ones otherwise.
  GranularModel granular() const {
    GranularModel m = from_space(space);
    if (granules) m.granules = *granules;
    if (lower_table) m.lower = *lower_table;
    if (upper_table) m.upper = *upper_table;
    return m;
  }
};

namespace detail {

using nlohmann::json;

[[noreturn]] inline void schema(const std::string& what) { throw Error(ErrorKind::Model, what); }

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::vector<std::string> strings(const json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) schema(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

/// A subset as a literal string ("abc", "0", "S") or an array of atom names.
inline Subset subset(const Universe& u, const json& j) {
  if (j.is_string()) return u.parse(j.get<std::string>());
  return u.make(strings(j, "subset"));
}

inline std::vector<std::pair<std::string, std::string>> name_pairs(const json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : j) {
    const auto v = strings(p, what);
    if (v.size() != 2) schema(std::string(what) + " entries must have two names");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

inline OperatorTable operator_table(const Universe& u, const json& j, const char* what) {
  if (!j.is_object()) schema(std::string(what) + " must map subsets to subsets");
  OperatorTable t(u.size());
  std::vector<bool> seen(std::size_t{1} << u.size(), false);
  for (const auto& [k, v] : j.items()) {
    const Subset in = u.parse(k);
    if (seen[in.bits()]) schema(std::string(what) + " lists " + k + " twice");
    seen[in.bits()] = true;
    t.set(in, subset(u, v));
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) schema(std::string(what) + " is not total: missing " + u.format(Subset(static_cast<Mask>(i), u.size())));
  }
  return t;
}

inline TruthPair truth_pair(const json& j) {
  const std::string s = j.is_string() ? j.get<std::string>() : "";
  if (s == "T") return kTrue;
  if (s == "F") return kFalse;
  if (s == "B") return kBoth;
  if (s == "N") return kNeither;
  schema("truth values must be one of T, F, B, N");
}

inline std::size_t element_index(const std::vector<std::string>& names, const json& j) {
  if (j.is_number_unsigned()) {
    const auto i = j.get<std::size_t>();
    if (i >= names.size()) schema("element index out of range");
    return i;
  }
  if (!j.is_string()) schema("elements must be names or indices");
  const auto s = j.get<std::string>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == s) return i;
  }
  schema("unknown element '" + s + "'");
}

inline Table1 table1(const std::vector<std::string>& names, const json& j, const char* what) {
  if (!j.is_array() || j.size() != names.size()) schema(std::string(what) + " must list one value per element");
  Table1 out;
  for (const auto& e : j) out.push_back(element_index(names, e));
  return out;
}

inline Table2 table2(const std::vector<std::string>& names, const json& j, const char* what) {
  if (!j.is_array() || j.size() != names.size()) schema(std::string(what) + " must have one row per element");
  Table2 out;
  for (const auto& row : j) out.push_back(table1(names, row, what));
  return out;
}

}  // namespace detail

inline ModelFile parse_model(const nlohmann::json& j, Limits limits = {}) {
  using namespace detail;
  try {
    Universe u(strings(field(j, "universe"), "universe"));
    const bool has_partition = j.contains("partition");
    const bool has_pairs = j.contains("relationPairs");
    if (has_partition == has_pairs) schema("exactly one of 'partition' and 'relationPairs' is required");
    std::optional<ApproximationSpace> space;
    if (has_partition) {
      std::vector<Subset> blocks;
      if (!j.at("partition").is_array()) schema("partition must be an array of subsets");
      for (const auto& b : j.at("partition")) blocks.push_back(subset(u, b));
      space = ApproximationSpace::from_blocks(u, std::move(blocks), limits);
    } else {
      space = ApproximationSpace::from_named_pairs(u, name_pairs(j.at("relationPairs"), "relationPairs"), limits);
    }
    ModelFile m{*space, {}, {}, {}, {}, {}, {}, {}, {}};
    if (j.contains("granules")) {
      std::vector<Subset> g;
      for (const auto& e : j.at("granules")) g.push_back(subset(u, e));
      m.granules = std::move(g);
    }
    if (j.contains("lowerTable")) m.lower_table = operator_table(u, j.at("lowerTable"), "lowerTable");
    if (j.contains("upperTable")) m.upper_table = operator_table(u, j.at("upperTable"), "upperTable");
    if (j.contains("propertySystem")) {
      const auto& ps = j.at("propertySystem");
      m.property_system = PropertySystem::from_names(Universe(strings(field(ps, "objects"), "objects")),
                                                     Universe(strings(field(ps, "properties"), "properties")),
                                                     name_pairs(field(ps, "manifests"), "manifests"));
    }
    if (j.contains("caseSpaces")) {
      for (const auto& c : j.at("caseSpaces")) {
        auto worlds = strings(field(c, "worlds"), "worlds");
        auto sentences = strings(field(c, "sentences"), "sentences");
        std::vector<std::vector<TruthPair>> val;
        for (const auto& row : field(c, "valuation")) {
          std::vector<TruthPair> r;
          for (const auto& v : row) r.push_back(truth_pair(v));
          val.push_back(std::move(r));
        }
        NamedCaseSpace ncs{c.value("name", std::string("cases")), CaseSpace(worlds, sentences, val), std::nullopt};
        if (c.contains("annotations")) {
          DialecticAnnotations a;
          const auto& an = c.at("annotations");
          if (an.contains("beta")) {
            for (const auto& s : an.at("beta")) a.beta.insert(element_index(sentences, s));
          }
          if (an.contains("beth")) {
            for (const auto& [x, y] : name_pairs(an.at("beth"), "beth")) {
              a.beth.insert({element_index(sentences, x), element_index(sentences, y)});
            }
          }
          ncs.annotations = std::move(a);
        }
        m.case_spaces.push_back(std::move(ncs));
      }
    }
    if (j.contains("algebra")) {
      const auto& a = j.at("algebra");
      FiniteAlgebraCandidate c;
      c.names = strings(field(a, "elements"), "algebra elements");
      c.size = c.names.size();
      c.meet = table2(c.names, field(a, "meet"), "meet");
      if (a.contains("join")) c.join = table2(c.names, a.at("join"), "join");
      if (a.contains("implies")) c.implies = table2(c.names, a.at("implies"), "implies");
      c.neg = table1(c.names, field(a, "neg"), "neg");
      c.L = table1(c.names, field(a, "L"), "L");
      c.zero = element_index(c.names, field(a, "zero"));
      c.one = element_index(c.names, field(a, "one"));
      c.validate();
      m.algebra = std::move(c);
    }
    if (j.contains("negation")) {
      const auto& n = j.at("negation");
      auto names = strings(field(n, "elements"), "negation elements");
      std::vector<std::pair<std::size_t, std::size_t>> le;
      for (const auto& [x, y] : name_pairs(field(n, "leq"), "leq")) {
        le.emplace_back(element_index(names, x), element_index(names, y));
      }
      NegationFixture fx{names, BoundedPoset::from_pairs(names.size(), le), {}};
      if (n.contains("ops")) {
        for (const auto& [op, vals] : n.at("ops").items()) {
          if (!vals.is_array() || vals.size() != names.size()) schema("operation " + op + " must list every element");
          UnaryOp f;
          for (const auto& v : vals) f.push_back(v.is_null() ? std::nullopt : std::optional(element_index(names, v)));
          fx.ops.emplace(op, std::move(f));
        }
      }
      m.negation = std::move(fx);
    }
    if (j.contains("ipc")) {
      const auto& c = j.at("ipc");
      auto seq = strings(field(c, "sequence"), "sequence");
      const auto mode = c.value("closure", std::string("eq"));
      if (mode != "eq" && mode != "rt") schema("closure must be 'eq' or 'rt'");
      std::vector<std::string> elements = c.contains("elements") ? strings(c.at("elements"), "elements") : seq;
      m.ipc = IpcFixture{seq, IndiscernibilityRelation::close(elements, name_pairs(field(c, "pairs"), "pairs"),
                                                               mode == "eq" ? ClosureMode::Equivalence
                                                                            : ClosureMode::ReflexiveTransitive)};
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Model, std::string("malformed model: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CapExceeded) throw;
    throw Error(ErrorKind::Model, e.what());
  }
}

inline ModelFile load_model(const std::string& path, Limits limits = {}) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Model, "cannot open model file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Model, "model file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_model(j, limits);
}

}  // namespace rough
