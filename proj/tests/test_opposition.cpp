#include <gtest/gtest.h>

#include <cctype>
#include <tuple>

#include "fixture.hpp"

using namespace rough;

TEST(Opposition, QuestionGrid) {
  EXPECT_EQ(classify_from_questions(true, true), Figure::SubAlternation);
  EXPECT_EQ(classify_from_questions(true, false), Figure::SubContrariety);
  EXPECT_EQ(classify_from_questions(false, true), Figure::Contrariety);
  EXPECT_EQ(classify_from_questions(false, false), Figure::Contradiction);
}

TEST(Opposition, ClassicalPairsAndBelnapMode) {
  const CaseSpace cs({"w1", "w2"}, {"A", "B", "C"},
                     {{kTrue, kFalse, kBoth}, {kFalse, kTrue, kFalse}});
  const auto r = classify_pair(cs, 0, 1);
  EXPECT_EQ(r.figure, Figure::Contradiction);
  EXPECT_EQ(r.rows, (RowProfile{false, true, true, false}));
  try {
    (void)classify_pair(cs, 0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
  // Belnap mode reads the t-component: C is t-true in w1 alongside A.
  EXPECT_EQ(classify_pair(cs, 0, 2, Valuation::Belnap).figure, Figure::SubAlternation);
  EXPECT_EQ(cs.sentence("C"), 2u);
  EXPECT_THROW((void)cs.sentence("D"), Error);
  EXPECT_THROW(CaseSpace({}, {}, {}), Error);
}

TEST(Hexagon, FiguresOnTheFixture) {
  const auto s = fixture::space();
  const auto h = hexagon(s, s.parse("aef"));
  EXPECT_FALSE(h.warning);
  EXPECT_EQ(h.edges.size(), 15u);
  EXPECT_EQ(h.regions[0], s.parse("ef"));
  EXPECT_EQ(h.regions[2], s.parse("abc"));
  EXPECT_EQ(h.figure("L", "E"), Figure::Contrariety);
  EXPECT_EQ(h.figure("L", "B"), Figure::Contrariety);
  EXPECT_EQ(h.figure("E", "B"), Figure::Contrariety);
  EXPECT_EQ(h.figure("U", "coL"), Figure::SubContrariety);
  EXPECT_EQ(h.figure("L", "U"), Figure::SubAlternation);
  EXPECT_EQ(h.figure("B", "LE"), Figure::Contradiction);
  EXPECT_EQ(h.figure("coL", "L"), Figure::Contradiction);
  EXPECT_THROW((void)h.figure("L", "Z"), Error);
}

TEST(Hexagon, DegeneratePartitionWarns) {
  const auto s = fixture::space();
  const auto h = hexagon(s, s.parse("abc"));
  EXPECT_EQ(h.warning, std::optional<std::string>{"degenerate partition: empty region B"});
  EXPECT_EQ(hexagon(s, s.full()).warning, std::optional<std::string>{"degenerate partition: empty region B E"});
}

TEST(ReferenceTables, MatchThePrintedTables) {
  using enum Row;
  using E = Entry;
  // Transcribed row by row from the printed tables.
  const std::vector<std::tuple<int, std::string, std::string, std::vector<std::pair<Row, Entry>>>> printed = {
      {7, "AP", "APN", {{TT, E::IN}, {TF, E::T}, {FT, E::T}, {FF, E::IN}}},
      {8, "AP", "AP0", {{TT, E::IN}, {TF, E::T}, {FT, E::T}, {FF, E::IN}}},
      {9, "CP", "CPN", {{TT, E::NP}, {TF, E::T}, {FT, E::T}, {FF, E::NP}}},
      {10, "CP", "CP0", {{TT, E::NP}, {TF, E::T}, {FT, E::T}, {FF, E::T}}},
      {11, "CPN", "CP0", {{TT, E::NP}, {TF, E::T}, {FT, E::T}, {FF, E::NP}}},
      {12, "CI", "CP", {{TT, E::T}, {TF, E::NP}, {FT, E::T}, {FF, E::T}}},
      {13, "AP", "APN", {{TT, E::NP}, {FF, E::NP}}},
      {14, "AP", "AP0", {{TT, E::T}, {FF, E::NP}}},
      {15, "CP", "CPN", {{TT, E::NP}, {FF, E::NP}}},
      {16, "CP", "CP0", {{TT, E::NP}, {FF, E::NP}}},
      {17, "CPN", "CP0", {{TT, E::NP}, {FF, E::NP}}},
      {18, "CI", "CP", {{TT, E::T}, {FF, E::T}}},
  };
  ASSERT_EQ(reference_tables().size(), printed.size());
  for (const auto& [n, l, r, rows] : printed) {
    const auto& t = reference_table(n);
    EXPECT_EQ(t.left, l);
    EXPECT_EQ(t.right, r);
    EXPECT_EQ(t.rows, rows) << "table " << n;
  }
  EXPECT_THROW((void)reference_table(6), Error);
}

TEST(ReferenceTables, CaptionsAgreeWithTheQuestionGrid) {
  auto normalize = [](std::string c) {
    std::string out;
    for (char ch : c) {
      if (std::isalpha(static_cast<unsigned char>(ch))) out += static_cast<char>(std::tolower(ch));
    }
    return out;
  };
  for (const auto& t : reference_tables()) {
    const auto tt = t.entry(Row::TT), ff = t.entry(Row::FF);
    if (*tt == Entry::IN || *ff == Entry::IN) continue;
    const Figure f = classify_from_questions(*tt == Entry::T, *ff == Entry::T);
    EXPECT_EQ(normalize(to_string(f)), normalize(t.caption)) << "table " << t.number;
  }
}

TEST(JointConsistency, SingleAndGroupedTables) {
  const auto one = joint_consistency({reference_table(13)});
  EXPECT_TRUE(one.satisfiable);
  EXPECT_EQ(one.assignments.size(), 2u);
  const auto three = joint_consistency({reference_table(15), reference_table(16), reference_table(17)});
  EXPECT_FALSE(three.satisfiable);
  EXPECT_TRUE(three.assignments.empty());
  EXPECT_EQ(three.unmet, std::optional<std::string>{"no joint assignment avoids every NP row"});
  const auto none = joint_consistency({});
  EXPECT_TRUE(none.satisfiable);
  EXPECT_TRUE(joint_consistency({reference_table(14)}).satisfiable);
  EXPECT_TRUE(joint_consistency({reference_table(12)}).satisfiable);
  EXPECT_TRUE(joint_consistency({reference_table(7)}).satisfiable);
}

TEST(Combinations, ProfileWithAnnotations) {
  const CaseSpace cs({"w1", "w2"}, {"X", "Y"}, {{kBoth, kTrue}, {kFalse, kFalse}});
  const DialecticAnnotations notes{{0}, {{0, 1}}};
  const auto p = combination_profile(cs, 0, 1, notes);
  EXPECT_EQ(p, (std::set<std::string>{"T/T", "F/F", "ℶ/ℶ", "δ/ℶ", "β/ℶ", "β/T", "δ/T"}));
  EXPECT_EQ(combination_labels().size(), 12u);
  try {
    (void)combination_profile(cs, 0, 1, std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(TruthStates, Steps) {
  using enum TruthGrade;
  EXPECT_EQ(tsr_step(T, Evidence::Oppose), FUpMinus);
  EXPECT_EQ(tsr_step(T, Evidence::Support), TLowStar);
  EXPECT_EQ(tsr_step(T, Evidence::Oppose, {Branch::TBranch, Branch::FBranch}), TUpMinus);
  EXPECT_EQ(tsr_step(F, Evidence::Support, {Branch::FBranch, Branch::TBranch}), TLowMinus);
  EXPECT_EQ(tsr_step(F, Evidence::Oppose), F);
  EXPECT_EQ(tsr_step(TStar, Evidence::Support), TStar);
  const auto walk = tsr_walk(F, {Evidence::Oppose, Evidence::Support, Evidence::Support, Evidence::Support});
  EXPECT_EQ(walk, (std::vector<TruthGrade>{F, F, FLowMinus, FUpMinus, T}));
  for (auto g : kAllGrades) EXPECT_EQ(parse_truth_grade(to_string(g)), g);
  EXPECT_THROW((void)parse_truth_grade("U"), Error);
}

TEST(TruthStates, StepsFollowTheGraph) {
  const auto& edges = truth_graph_edges();
  auto is_edge = [&](TruthGrade a, TruthGrade b) {
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
  };
  for (auto oat : {Branch::FBranch, Branch::TBranch}) {
    for (auto saf : {Branch::FBranch, Branch::TBranch}) {
      const BranchPolicy pol{oat, saf};
      for (auto g : kAllGrades) {
        const auto o = tsr_step(g, Evidence::Oppose, pol);
        EXPECT_TRUE(o == g ? g == TruthGrade::F : is_edge(g, o));
        const auto s = tsr_step(g, Evidence::Support, pol);
        EXPECT_TRUE(s == g ? g == TruthGrade::TStar : is_edge(s, g));
        // Repeated evidence settles within seven steps.
        EXPECT_EQ(tsr_walk(g, std::vector<Evidence>(7, Evidence::Oppose), pol).back(), TruthGrade::F);
        EXPECT_EQ(tsr_walk(g, std::vector<Evidence>(7, Evidence::Support), pol).back(), TruthGrade::TStar);
      }
    }
  }
}
