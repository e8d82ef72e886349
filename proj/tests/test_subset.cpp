#include <gtest/gtest.h>

#include <set>

#include "fixture.hpp"
#include "rough/subset.hpp"

using namespace rough;

TEST(Universe, FormatsAndParsesLiterals) {
  const auto u = Universe::of_chars("abcefq");
  EXPECT_EQ(u.format(u.parse("aq")), "aq");
  EXPECT_EQ(u.format(u.parse("qa")), "aq");
  EXPECT_EQ(u.format(u.empty()), "0");
  EXPECT_EQ(u.format(u.full()), "S");
  EXPECT_EQ(u.parse("0"), u.empty());
  EXPECT_EQ(u.parse("S"), u.full());
  EXPECT_EQ(u.parse("abcefq"), u.full());
}

TEST(Universe, RejectsUnknownAtoms) {
  const auto u = Universe::of_chars("abc");
  try {
    (void)u.parse("abz");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownAtom);
  }
  EXPECT_THROW((void)u.index_of("q"), Error);
}

TEST(Universe, RejectsReservedAndDuplicateNames) {
  for (const char* bad : {"S", "0", "L", "D", "neg", "a-b", ""}) {
    EXPECT_THROW(Universe(std::vector<std::string>{"a", bad}), Error) << bad;
  }
  EXPECT_THROW(Universe(std::vector<std::string>{"a", "a"}), Error);
  EXPECT_THROW(Universe(std::vector<std::string>{}), Error);
}

TEST(Universe, MultiCharacterAtomsParseGreedily) {
  const Universe u(std::vector<std::string>{"x", "x1", "y"});
  EXPECT_EQ(u.parse("x1y"), u.make({"x1", "y"}));
  EXPECT_EQ(u.parse("xy"), u.make({"x", "y"}));
  EXPECT_EQ(u.format(u.make({"x", "x1"})), "xx1");
}

TEST(Universe, WidthMismatchIsReported) {
  const auto u = Universe::of_chars("abc");
  try {
    (void)u.format(Subset(1, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UniverseMismatch);
  }
}

TEST(Subset, SetAlgebra) {
  const auto u = Universe::of_chars("abcd");
  const Subset ab = u.parse("ab"), bc = u.parse("bc");
  EXPECT_EQ(ab | bc, u.parse("abc"));
  EXPECT_EQ(ab & bc, u.parse("b"));
  EXPECT_EQ(ab - bc, u.parse("a"));
  EXPECT_EQ(ab.complement(), u.parse("cd"));
  EXPECT_TRUE(u.parse("a").proper_subset_of(ab));
  EXPECT_FALSE(ab.proper_subset_of(ab));
  EXPECT_TRUE(ab.subset_of(ab));
  EXPECT_EQ(ab.count(), 2u);
  EXPECT_TRUE(u.full().is_full());
}

TEST(Subset, EnumerationCoversPowerSetInCountingOrder) {
  std::vector<Mask> seen;
  for_each_subset(4, [&](const Subset& s) { seen.push_back(s.bits()); });
  ASSERT_EQ(seen.size(), 16u);
  for (Mask i = 0; i < 16; ++i) EXPECT_EQ(seen[i], i);

  const auto u = Universe::of_chars("abcde");
  std::set<Mask> sub;
  for_each_subset_of(u.parse("ace"), [&](const Subset& s) { sub.insert(s.bits()); });
  EXPECT_EQ(sub.size(), 8u);
  for (Mask m : sub) EXPECT_EQ(m & ~u.parse("ace").bits(), 0u);
}
