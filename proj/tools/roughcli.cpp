#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rough/rough.hpp"

namespace {

using namespace rough;
using nlohmann::json;

struct Globals {
  std::string model_path;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::optional<std::size_t> cap;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::UnknownAtom: return 2;
    case ErrorKind::Model:
    case ErrorKind::UniverseMismatch: return 3;
    case ErrorKind::CapExceeded: return 4;
    case ErrorKind::Undefined:
    case ErrorKind::Precondition:
    case ErrorKind::CarrierMismatch: return 1;
  }
  return 1;
}

/// The space S = abcefq with blocks abc, ef, q, and the worked counting sequence.
ModelFile builtin_model() {
  const Universe u = Universe::of_chars("abcefq");
  ModelFile m{ApproximationSpace::from_blocks(u, {u.parse("abc"), u.parse("ef"), u.parse("q")}),
              {}, {}, {}, {}, {}, {}, {}, {}};
  const std::vector<std::string> seq{"f", "b", "c", "a", "k", "i", "n", "h", "e", "l", "g", "m"};
  m.ipc = IpcFixture{seq, IndiscernibilityRelation::close(
                              seq, {{"a", "b"}, {"b", "c"}, {"e", "f"}, {"i", "k"}, {"l", "m"}, {"m", "n"}, {"g", "h"}})};
  return m;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class App {
public:
  explicit App(Globals& g) : g_(g) {}

  const ModelFile& model() {
    if (!model_) model_ = g_.model_path.empty() ? builtin_model() : load_model(g_.model_path);
    return *model_;
  }

  OutputFormat format() const { return parse_output_format(g_.format); }

  void emit(const ReportTable& t) { t.emit(std::cout, format()); }

  template <class W, class Fmt>
  bool emit_report(const AxiomReport<W>& r, Fmt&& fmt_witness) {
    ReportTable t{{"axiom", "holds", "witness"}, {}};
    for (const auto& a : r.results) {
      std::string w;
      for (std::size_t i = 0; i < a.witness.size(); ++i) w += (i ? " " : "") + fmt_witness(a.witness[i]);
      t.add({a.name, a.holds ? "pass" : "FAIL", w});
    }
    emit(t);
    return r.all_hold();
  }

  Globals& g_;

private:
  std::optional<ModelFile> model_;
};

std::string mixed_json_type(const MixedElement& m) { return m.is_type1() ? "type1" : "type2"; }

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  App app(g);
  CLI::App cli{"Rough set algebra toolkit"};
  cli.require_subcommand(1);
  cli.fallthrough();
  cli.add_option("--model", g.model_path, "Model file (JSON); the built-in example space when omitted");
  cli.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  cli.add_option("--seed", g.seed, "Seed for randomized suites");
  cli.add_option("--cap", g.cap, "Size cap for exhaustive searches");

  int status = 0;

  // space
  auto* space = cli.add_subcommand("space", "Inspect the approximation space");
  space->require_subcommand(1);
  space->add_subcommand("show", "Universe and blocks")->callback([&] {
    const auto& s = app.model().space;
    ReportTable t{{"block", "atoms"}, {}};
    for (std::size_t i = 0; i < s.blocks().size(); ++i) t.add({std::to_string(i + 1), s.format(s.blocks()[i])});
    if (app.format() == OutputFormat::Text) {
      std::cout << "atoms:";
      for (std::size_t i = 0; i < s.size(); ++i) std::cout << ' ' << s.universe().atom(i);
      std::cout << '\n';
    }
    app.emit(t);
  });
  space->add_subcommand("triples", "Lower and upper approximation of every nonempty subset")->callback([&] {
    const auto& s = app.model().space;
    ReportTable t{{"x", "lower", "upper"}, {}};
    for (const auto& tr : triples(s)) t.add({s.format(tr.x), s.format(tr.lower), s.format(tr.upper)});
    app.emit(t);
  });
  space->add_subcommand("classes", "Nonempty rough classes")->callback([&] {
    const auto& s = app.model().space;
    ReportTable t{{"class", "lower", "upper", "members"}, {}};
    for (const auto& c : rough_classes(s)) {
      std::string members;
      for (const auto& m : c.members(s)) members += (members.empty() ? "" : " ") + s.format(m);
      t.add({"[" + s.format(c.sample(s)) + "]", s.format(c.lower()), s.format(c.upper()), members});
    }
    app.emit(t);
  });

  // eval
  auto* eval = cli.add_subcommand("eval", "Evaluate a rough expression");
  std::string expr_text;
  bool soft = false;
  eval->add_option("expr", expr_text, "Expression")->required();
  eval->add_flag("--soft", soft, "Use the soft commonality operation");
  eval->callback([&] {
    const CeraModel w(app.model().space, soft);
    const auto v = eval_expr(w, expr_text);
    if (app.format() == OutputFormat::Json) {
      json j{{"type", mixed_json_type(v)}, {"value", w.format(v)}};
      if (v.is_type2()) {
        j["lower"] = w.space().format(v.cls().lower());
        j["upper"] = w.space().format(v.cls().upper());
      }
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << w.describe(v) << '\n';
    }
  });

  // check
  auto* check = cli.add_subcommand("check", "Run an axiom suite");
  check->require_subcommand(1);
  bool strict_growth = false;
  auto* gos = check->add_subcommand("gos", "General granular operator space axioms");
  gos->add_flag("--strict-growth", strict_growth, "Require strict upper growth");
  gos->callback([&] {
    const auto m = app.model().granular();
    auto fmt = [&](const Subset& s) { return m.universe->format(s); };
    if (!app.emit_report(check_gos_axioms(m, {strict_growth}), fmt)) status = 1;
  });
  bool strict_underlap = false;
  auto* adm = check->add_subcommand("admissible", "Admissibility of the granulation");
  adm->add_flag("--strict", strict_underlap, "Full underlap with proper parthood");
  adm->callback([&] {
    const auto m = app.model().granular();
    AdmissibilityOptions opts;
    opts.strict_underlap = strict_underlap;
    const auto a = check_admissibility(m, opts);
    auto fmt = [&](const Subset& s) { return m.universe->format(s); };
    if (!app.emit_report(SubsetReport{{a.wra, a.ls, a.fu}}, fmt)) status = 1;
  });
  std::size_t random_spaces = 0;
  bool cera_soft = false;
  auto* cera = check->add_subcommand("cera", "CERA identity suite");
  cera->add_option("--random", random_spaces, "Also check this many seeded random spaces");
  cera->add_flag("--soft", cera_soft, "Use the soft commonality operation");
  cera->callback([&] {
    std::vector<ApproximationSpace> spaces{app.model().space};
    Rng rng(g.seed);
    for (std::size_t i = 0; i < random_spaces; ++i) spaces.push_back(random_space(rng, 1 + uniform_index(rng, 6)));
    ReportTable t{{"space", "identity", "holds", "witness"}, {}};
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      const CeraModel w(spaces[i], cera_soft);
      for (const auto& r : check_cera_identities(w).results) {
        std::string wit;
        for (const auto& x : r.witness) wit += (wit.empty() ? "" : " ") + w.format(x);
        t.add({std::to_string(i), r.name, r.holds ? "pass" : "FAIL", wit});
        if (!r.holds) status = 1;
      }
    }
    app.emit(t);
  });
  auto algebra_check = [&](bool essential) {
    const auto& m = app.model();
    const FiniteAlgebraCandidate cand = m.algebra ? *m.algebra : QuotientAlgebra(m.space).to_candidate();
    const auto r = essential ? check_essential_pre_rough(cand) : check_pre_rough(cand);
    if (!app.emit_report(r, [&](std::size_t i) { return cand.name(i); })) status = 1;
  };
  check->add_subcommand("prerough", "Pre-rough algebra axioms")->callback([&] { algebra_check(false); });
  check->add_subcommand("essential", "Essential pre-rough axioms")->callback([&] { algebra_check(true); });

  // parthood
  auto* part = cli.add_subcommand("parthood", "Parthood relations");
  std::string kind_text, arg_a, arg_b;
  part->add_option("kind", kind_text, "Parthood name, or 'analyze'/'matrix' followed by a name")->required();
  part->add_option("a", arg_a, "First argument");
  part->add_option("b", arg_b, "Second argument");
  part->callback([&] {
    const auto& m = app.model();
    ParthoodModel pm(m.space, m.granules, g.cap.value_or(4096));
    auto term = [&](ParthoodKind k, const std::string& text) -> PartTerm {
      if (carrier_of(k) == Carrier::DialecticalPairs) return eval_pair(pm.cera(), text);
      return eval_expr(pm.cera(), text);
    };
    if (kind_text == "analyze" || kind_text == "matrix") {
      if (arg_a.empty()) throw Error(ErrorKind::Parse, kind_text + " needs a parthood name");
      const auto k = parse_parthood(arg_a);
      if (kind_text == "analyze") {
        const auto r = pm.analyze(k);
        ReportTable t{{"property", "holds", "witness"}, {}};
        for (const auto* a : {&r.reflexive, &r.antisymmetric, &r.transitive}) {
          std::string wit;
          for (const auto& x : a->witness) wit += (wit.empty() ? "" : " ") + pm.format(x);
          t.add({a->name, a->holds ? "yes" : "no", wit});
        }
        app.emit(t);
      } else {
        const auto c = pm.carrier(k);
        const auto mat = pm.relation_matrix(k);
        ReportTable t{{"a", "b"}, {}};
        for (std::size_t i = 0; i < c.size(); ++i) {
          for (std::size_t j = 0; j < c.size(); ++j) {
            if (mat[i][j]) t.add({pm.format(c[i]), pm.format(c[j])});
          }
        }
        app.emit(t);
      }
      return;
    }
    const auto k = parse_parthood(kind_text);
    if (arg_a.empty() || arg_b.empty()) throw Error(ErrorKind::Parse, "parthood needs two arguments");
    const bool v = pm.holds(k, term(k, arg_a), term(k, arg_b));
    if (app.format() == OutputFormat::Json) {
      std::cout << json{{"parthood", to_string(k)}, {"holds", v}}.dump(2) << '\n';
    } else {
      std::cout << (v ? "true" : "false") << '\n';
    }
  });

  // crad
  auto* crad = cli.add_subcommand("crad", "Rough dialectical pair operations");
  std::string crad_op, pair_a, pair_b;
  crad->add_option("op", crad_op, "plus, times or pnat")->required()->check(CLI::IsMember({"plus", "times", "pnat"}));
  crad->add_option("p", pair_a, "First pair, e.g. '(a, [a])'")->required();
  crad->add_option("q", pair_b, "Second pair")->required();
  crad->callback([&] {
    const CradModel d{CeraModel(app.model().space)};
    const auto p = eval_pair(d.cera(), pair_a);
    const auto q = eval_pair(d.cera(), pair_b);
    if (crad_op == "pnat") {
      std::cout << (d.natural_parthood(p, q) ? "true" : "false") << '\n';
      return;
    }
    const auto r = crad_op == "plus" ? d.plus(p, q) : d.times(p, q);
    if (app.format() == OutputFormat::Json) {
      json j{{"defined", r.defined()}};
      if (r.defined()) j["value"] = d.format(*r.value);
      else j["reason"] = r.reason;
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << (r.defined() ? d.format(*r.value) : "undefined: " + r.reason) << '\n';
    }
    if (!r.defined()) status = 1;
  });

  // negation
  auto* neg = cli.add_subcommand("negation", "Negation conditions on finite bounded posets");
  neg->require_subcommand(1);
  std::string neg_op;
  auto* ncheck = neg->add_subcommand("check", "Profile the model's negation operations");
  ncheck->add_option("--op", neg_op, "Operation name (all when omitted)");
  ncheck->callback([&] {
    const auto& m = app.model();
    if (!m.negation) throw Error(ErrorKind::Model, "model has no negation section");
    const auto& fx = *m.negation;
    ReportTable t{{"op", "N1", "N2", "N3", "N4", "N5", "N6", "N9", "index", "regular"}, {}};
    for (const auto& [name, f] : fx.ops) {
      if (!neg_op.empty() && name != neg_op) continue;
      const auto p = check_negation(fx.poset, f);
      auto h = [](const AxiomResult<std::size_t>& a) { return a.holds ? std::string("yes") : std::string("no"); };
      const std::string idx =
          p.index ? "(" + std::to_string(p.index->first) + "," + std::to_string(p.index->second) + ")" : "none";
      t.add({name, h(p.n1), h(p.n2), h(p.n3), h(p.n4), h(p.n5), h(p.n6), h(p.n9), idx, yes_no(p.regular())});
    }
    if (t.rows.empty()) throw Error(ErrorKind::Model, "no negation operation named '" + neg_op + "'");
    app.emit(t);
  });
  std::string claim_text;
  auto* nfals = neg->add_subcommand("falsify", "Search distributive lattices for counterexamples");
  nfals->add_option("--claim", claim_text, "Claim name (all when omitted)");
  nfals->callback([&] {
    std::vector<NegationClaim> claims{NegationClaim::NoIndexZeroN, NegationClaim::N123BottomTop,
                                      NegationClaim::N123NotN9Witness, NegationClaim::N9ImpliesN123,
                                      NegationClaim::InteriorG4G2};
    if (!claim_text.empty()) claims = {parse_negation_claim(claim_text)};
    ReportTable t{{"claim", "confirmed", "lattices", "operations", "witness"}, {}};
    for (auto c : claims) {
      const auto r = falsify_theorem(c, g.cap.value_or(5));
      std::string wit;
      if (r.witness) {
        wit = "size " + std::to_string(r.witness->lattice.size()) + " f=";
        for (std::size_t i = 0; i < r.witness->f.size(); ++i) {
          wit += (i ? "," : "") + (r.witness->f[i] ? std::to_string(*r.witness->f[i]) : std::string("-"));
        }
      }
      t.add({to_string(c), yes_no(r.confirmed), std::to_string(r.lattices), std::to_string(r.operations), wit});
      if (!r.confirmed) status = 1;
    }
    app.emit(t);
  });

  // opposition
  auto* opp = cli.add_subcommand("opposition", "Figures of opposition");
  opp->require_subcommand(1);
  std::string case_name, sent_a, sent_b, tt_answer, ff_answer;
  bool belnap = false;
  auto* classify = opp->add_subcommand("classify", "Classify a pair of sentences");
  classify->add_option("a", sent_a, "First sentence");
  classify->add_option("b", sent_b, "Second sentence");
  classify->add_option("--case", case_name, "Case space name (the first when omitted)");
  classify->add_flag("--belnap", belnap, "Accept four-valued valuations");
  classify->add_option("--tt", tt_answer, "Can both be true (yes/no)")->check(CLI::IsMember({"yes", "no"}));
  classify->add_option("--ff", ff_answer, "Can both be false (yes/no)")->check(CLI::IsMember({"yes", "no"}));
  classify->callback([&] {
    if (!tt_answer.empty() || !ff_answer.empty()) {
      if (tt_answer.empty() || ff_answer.empty()) throw Error(ErrorKind::Parse, "--tt and --ff go together");
      std::cout << to_string(classify_from_questions(tt_answer == "yes", ff_answer == "yes")) << '\n';
      return;
    }
    const auto& m = app.model();
    if (m.case_spaces.empty()) throw Error(ErrorKind::Model, "model has no case spaces");
    const NamedCaseSpace* cs = &m.case_spaces.front();
    if (!case_name.empty()) {
      cs = nullptr;
      for (const auto& c : m.case_spaces) {
        if (c.name == case_name) cs = &c;
      }
      if (!cs) throw Error(ErrorKind::Model, "no case space named '" + case_name + "'");
    }
    if (sent_a.empty() || sent_b.empty()) throw Error(ErrorKind::Parse, "classify needs two sentences");
    const auto r = classify_pair(cs->cases, cs->cases.sentence(sent_a), cs->cases.sentence(sent_b),
                                 belnap ? Valuation::Belnap : Valuation::Classical);
    std::cout << to_string(r.figure) << '\n';
  });
  std::string hex_x;
  auto* hex = opp->add_subcommand("hexagon", "Hexagon of a subset");
  hex->add_option("x", hex_x, "Subset literal")->required();
  hex->callback([&] {
    const auto& s = app.model().space;
    const auto h = hexagon(s, s.parse(hex_x));
    if (h.warning) std::cerr << "warning: " << *h.warning << '\n';
    ReportTable t{{"a", "b", "figure"}, {}};
    for (const auto& e : h.edges) t.add({h.names[e.from], h.names[e.to], to_string(e.result.figure)});
    app.emit(t);
  });
  std::vector<int> table_numbers;
  bool joint = false;
  auto* tables = opp->add_subcommand("tables", "Reference tables");
  tables->add_option("numbers", table_numbers, "Table numbers (all when omitted)");
  tables->add_flag("--joint", joint, "Decide joint consistency of the selected tables");
  tables->callback([&] {
    std::vector<ReferenceTable> sel;
    if (table_numbers.empty()) sel = reference_tables();
    for (int n : table_numbers) sel.push_back(reference_table(n));
    if (joint) {
      const auto r = joint_consistency(sel);
      std::cout << (r.satisfiable ? "satisfiable" : "unsatisfiable");
      if (r.unmet) std::cout << ": " << *r.unmet;
      std::cout << '\n';
      if (!r.satisfiable) status = 1;
      return;
    }
    ReportTable t{{"table", "left", "right", "TT", "TF", "FT", "FF", "caption"}, {}};
    for (const auto& rt : sel) {
      auto cell = [&](Row r) {
        const auto e = rt.entry(r);
        return e ? to_string(*e) : std::string("-");
      };
      t.add({std::to_string(rt.number), rt.left, rt.right, cell(Row::TT), cell(Row::TF), cell(Row::FT), cell(Row::FF),
             rt.caption});
    }
    app.emit(t);
  });
  std::string tsr_start;
  std::vector<std::string> tsr_evidence;
  std::string oppose_at_t = "F", support_at_f = "F";
  auto* tsr = opp->add_subcommand("tsr", "Walk the truth graph under evidence");
  tsr->add_option("start", tsr_start, "Starting grade, e.g. T or F^-")->required();
  tsr->add_option("evidence", tsr_evidence, "Sequence of support/oppose");
  tsr->add_option("--oppose-at-t", oppose_at_t, "Branch taken when opposing T")->check(CLI::IsMember({"T", "F"}));
  tsr->add_option("--support-at-f", support_at_f, "Branch taken when supporting F")->check(CLI::IsMember({"T", "F"}));
  tsr->callback([&] {
    std::vector<Evidence> ev;
    for (const auto& e : tsr_evidence) {
      if (e == "support") ev.push_back(Evidence::Support);
      else if (e == "oppose") ev.push_back(Evidence::Oppose);
      else throw Error(ErrorKind::Parse, "evidence must be 'support' or 'oppose', got '" + e + "'");
    }
    BranchPolicy policy;
    policy.oppose_at_t = oppose_at_t == "T" ? Branch::TBranch : Branch::FBranch;
    policy.support_at_f = support_at_f == "T" ? Branch::TBranch : Branch::FBranch;
    const auto path = tsr_walk(parse_truth_grade(tsr_start), ev, policy);
    std::string out;
    for (auto gr : path) out += (out.empty() ? "" : " ") + to_string(gr);
    std::cout << out << '\n';
  });

  // count
  auto* count = cli.add_subcommand("count", "Counting under indiscernibility");
  count->require_subcommand(1);
  std::string seq_text, pairs_text, closure = "eq";
  auto add_relation_options = [&](CLI::App* sub) {
    sub->add_option("--seq", seq_text, "Comma-separated sequence");
    sub->add_option("--pairs", pairs_text, "Comma-separated pairs x:y or x-y");
    sub->add_option("--closure", closure, "eq or rt")->check(CLI::IsMember({"eq", "rt"}));
  };
  auto relation = [&]() -> IpcFixture {
    if (seq_text.empty()) {
      const auto& m = app.model();
      if (!m.ipc) throw Error(ErrorKind::Model, "no --seq given and the model has no ipc section");
      return *m.ipc;
    }
    const auto seq = split(seq_text, ',');
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& p : split(pairs_text, ',')) {
      const auto xy = split(p, p.find(':') != std::string::npos ? ':' : '-');
      if (xy.size() != 2) throw Error(ErrorKind::Parse, "pair '" + p + "' is not of the form x:y or x-y");
      pairs.emplace_back(xy[0], xy[1]);
    }
    std::vector<std::string> elements;
    for (const auto& s : seq) {
      if (std::find(elements.begin(), elements.end(), s) == elements.end()) elements.push_back(s);
    }
    for (const auto& [x, y] : pairs) {
      for (const auto* s : {&x, &y}) {
        if (std::find(elements.begin(), elements.end(), *s) == elements.end()) elements.push_back(*s);
      }
    }
    return {seq, IndiscernibilityRelation::close(elements, pairs,
                                                 closure == "eq" ? ClosureMode::Equivalence
                                                                 : ClosureMode::ReflexiveTransitive)};
  };
  auto* ipc_cmd = count->add_subcommand("ipc", "Indiscernible-predecessor counting");
  add_relation_options(ipc_cmd);
  ipc_cmd->callback([&] {
    const auto fx = relation();
    const auto tags = ipc(fx.sequence, fx.relation);
    if (app.format() == OutputFormat::Text) {
      std::string out;
      for (const auto& t : tags) out += (out.empty() ? "" : " ") + t.str();
      std::cout << out << '\n';
      return;
    }
    ReportTable t{{"element", "tag"}, {}};
    for (std::size_t i = 0; i < tags.size(); ++i) t.add({fx.sequence[i], tags[i].str()});
    app.emit(t);
  });
  auto* square = count->add_subcommand("square", "Square of discernibility");
  add_relation_options(square);
  square->callback([&] {
    const auto sq = discernibility_square(relation().relation);
    ReportTable t{{"a", "b", "figure"}, {}};
    for (const auto& [names, f] : sq.figures) t.add({names.first, names.second, to_string(f)});
    app.emit(t);
  });

  // granulation
  auto* gran = cli.add_subcommand("granulation", "Granulation inverse problem");
  gran->require_subcommand(1);
  bool search_strict = false;
  auto* search = gran->add_subcommand("search", "Admissible granulations for the model's operator tables");
  search->add_flag("--strict", search_strict, "Full underlap with proper parthood");
  search->callback([&] {
    const auto m = app.model().granular();
    AdmissibilityOptions opts;
    opts.strict_underlap = search_strict;
    const auto found =
        search_admissible_granulations(m.universe, m.lower, m.upper, g.cap.value_or(3), Parthood::inclusion(), opts);
    ReportTable t{{"granules"}, {}};
    for (const auto& fam : found) {
      std::string s;
      for (const auto& x : fam) s += (s.empty() ? "" : " ") + m.universe->format(x);
      t.add({s});
    }
    app.emit(t);
  });

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return cli.exit(e) == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return status;
}
