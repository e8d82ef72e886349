#include <gtest/gtest.h>

#include "rough/negation.hpp"
#include "rough/random.hpp"

using namespace rough;

namespace {

/// Naive lattice operations read off the order matrix.
struct NaiveLattice {
  const BoundedPoset& p;

  std::size_t meet(std::size_t a, std::size_t b) const {
    std::size_t best = p.bottom();
    for (std::size_t z = 0; z < p.size(); ++z) {
      if (p.leq(z, a) && p.leq(z, b) && p.leq(best, z)) best = z;
    }
    return best;
  }

  bool n1(const std::vector<std::size_t>& f) const {
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (meet(x, f[x]) != p.bottom()) return false;
    }
    return true;
  }
  bool n2(const std::vector<std::size_t>& f) const {
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (p.leq(x, y) && !p.leq(f[y], f[x])) return false;
      }
    }
    return true;
  }
  bool n3(const std::vector<std::size_t>& f) const {
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!p.leq(x, f[f[x]])) return false;
    }
    return true;
  }
  bool n9(const std::vector<std::size_t>& f) const {
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        if ((meet(x, y) == p.bottom()) != p.leq(y, f[x])) return false;
      }
    }
    return true;
  }
};

std::vector<std::size_t> power(const std::vector<std::size_t>& f, std::size_t k) {
  std::vector<std::size_t> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    std::size_t v = x;
    for (std::size_t i = 0; i < k; ++i) v = f[v];
    out[x] = v;
  }
  return out;
}

}  // namespace

TEST(Poset, ConstructionAndBounds) {
  const auto b = BoundedPoset::boolean(2);
  EXPECT_EQ(b.size(), 4u);
  EXPECT_EQ(b.bottom(), 0u);
  EXPECT_EQ(b.top(), std::optional<std::size_t>{3});
  EXPECT_EQ(b.meet(1, 2), std::optional<std::size_t>{0});
  EXPECT_EQ(b.join(1, 2), std::optional<std::size_t>{3});
  EXPECT_TRUE(b.is_distributive());
  // A fork 0 < 1, 0 < 2 has no top and no join of 1 and 2.
  const auto fork = BoundedPoset::from_pairs(3, {{0, 1}, {0, 2}});
  EXPECT_FALSE(fork.top());
  EXPECT_FALSE(fork.join(1, 2));
  EXPECT_FALSE(fork.is_lattice());
}

TEST(Poset, InvalidOrdersAreModelErrors) {
  auto expect_model = [](auto&& make) {
    try {
      (void)make();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Model);
    }
  };
  expect_model([] { return BoundedPoset::from_pairs(2, {{0, 1}, {1, 0}}); });
  expect_model([] { return BoundedPoset::from_pairs(2, {}); });
  expect_model([] { return BoundedPoset::from_pairs(2, {{0, 2}}); });
  expect_model([] { return BoundedPoset(std::vector<std::vector<bool>>{}); });
}

TEST(Negation, BooleanComplementIsRegularWithIndexZeroTwo) {
  const auto b = BoundedPoset::boolean(2);
  const auto prof = check_negation(b, total_op({3, 2, 1, 0}));
  EXPECT_TRUE(prof.regular());
  EXPECT_TRUE(prof.n4.holds && prof.n6.holds && prof.n9.holds);
  EXPECT_EQ(prof.index, (std::optional<std::pair<std::size_t, std::size_t>>{{0, 2}}));
  EXPECT_EQ(prof.pace, std::optional<std::size_t>{2});
}

TEST(Negation, ConstantTopFailsN1AtTop) {
  const auto c = BoundedPoset::chain(2);
  const auto prof = check_negation(c, total_op({1, 1}));
  ASSERT_FALSE(prof.n1.holds);
  EXPECT_EQ(prof.n1.witness, std::vector<std::size_t>{1});
  EXPECT_EQ(prof.index, (std::optional<std::pair<std::size_t, std::size_t>>{{1, 2}}));
}

TEST(Negation, OneElementPoset) {
  const auto prof = check_negation(BoundedPoset::chain(1), total_op({0}));
  EXPECT_TRUE(prof.regular());
  EXPECT_EQ(prof.index, (std::optional<std::pair<std::size_t, std::size_t>>{{0, 1}}));
}

TEST(Negation, PartialOperationsHoldVacuouslyWhereUndefined) {
  const auto b = BoundedPoset::boolean(2);
  const UnaryOp f{3, std::nullopt, std::nullopt, 0};
  const auto prof = check_negation(b, f);
  EXPECT_TRUE(prof.regular());
  EXPECT_EQ(prof.index, (std::optional<std::pair<std::size_t, std::size_t>>{{1, 3}}));
  EXPECT_THROW((void)check_negation(b, total_op({0, 0})), Error);
  EXPECT_THROW((void)check_negation(b, total_op({0, 0, 0, 9})), Error);
}

TEST(Negation, DistributiveLatticesUpToFive) {
  const auto ls = enumerate_distributive_lattices(5);
  ASSERT_EQ(ls.size(), 8u);
  std::vector<std::size_t> by_size(6, 0);
  for (const auto& l : ls) {
    ++by_size[l.size()];
    EXPECT_TRUE(l.is_distributive());
    EXPECT_EQ(l.bottom(), 0u);
    EXPECT_EQ(l.top(), std::optional<std::size_t>{l.size() - 1});
  }
  EXPECT_EQ(by_size, (std::vector<std::size_t>{0, 1, 1, 1, 2, 3}));
}

TEST(Negation, InteriorOperators) {
  EXPECT_EQ(interior_operators(BoundedPoset::chain(2)).size(), 2u);
  const auto b = BoundedPoset::boolean(2);
  for (const auto& i : interior_operators(b)) EXPECT_FALSE(interior_violation(b, i));
  EXPECT_EQ(interior_violation(b, total_op({1, 1, 2, 3})), std::optional<std::string>{"deflation"});
  EXPECT_EQ(interior_violation(b, total_op({0, 0, 2, 1})), std::optional<std::string>{"monotonicity"});
  const auto ic = interior_compose(b, total_op({3, 2, 1, 0}), total_op({0, 1, 2, 3}));
  EXPECT_TRUE(ic.g4_equals_g2);
  try {
    (void)interior_compose(BoundedPoset::chain(2), total_op({1, 1}), total_op({0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(Falsify, ClaimsHoldUpToFiveElements) {
  for (auto c : {NegationClaim::NoIndexZeroN, NegationClaim::N123BottomTop, NegationClaim::N9ImpliesN123,
                 NegationClaim::InteriorG4G2}) {
    const auto r = falsify_theorem(c, 5);
    EXPECT_TRUE(r.confirmed) << to_string(c);
    EXPECT_FALSE(r.witness) << to_string(c);
    EXPECT_EQ(r.lattices, 8u);
  }
}

TEST(Falsify, RegularNegationWithoutN9) {
  const auto r = falsify_theorem(NegationClaim::N123NotN9Witness, 5);
  ASSERT_TRUE(r.confirmed);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->lattice.size(), 4u);
  EXPECT_EQ(r.witness->f, total_op({3, 0, 0, 0}));
  const auto prof = check_negation(r.witness->lattice, r.witness->f);
  EXPECT_TRUE(prof.regular());
  EXPECT_FALSE(prof.n9.holds);
}

TEST(Falsify, CapAndClaimNames) {
  try {
    (void)falsify_theorem(NegationClaim::NoIndexZeroN, kMaxFalsifySize + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  for (auto c : {NegationClaim::NoIndexZeroN, NegationClaim::N123BottomTop, NegationClaim::N123NotN9Witness,
                 NegationClaim::N9ImpliesN123, NegationClaim::InteriorG4G2}) {
    EXPECT_EQ(parse_negation_claim(to_string(c)), c);
  }
  EXPECT_THROW((void)parse_negation_claim("n10"), Error);
}

TEST(DialecticalPredicate, DisjointnessIsNotAntiReflexive) {
  std::vector<Subset> carrier;
  for_each_subset(2, [&](const Subset& s) { carrier.push_back(s); });
  const auto disjoint = [](const Subset& a, const Subset& b) { return (a & b).is_empty(); };
  const auto unite = [](const Subset& a, const Subset& b) { return a | b; };
  const auto r = check_dialectical_predicate(carrier, disjoint, unite);
  EXPECT_TRUE(r.at("Commutativity").holds);
  ASSERT_FALSE(r.at("Anti-Reflexivity").holds);
  EXPECT_EQ(r.at("Anti-Reflexivity").witness, std::vector<Subset>{Subset::empty(2)});
  EXPECT_FALSE(r.at("Aggregation").holds);
}

TEST(DialecticalPredicate, ComplementarityUnderSymmetricDifference) {
  std::vector<Subset> carrier;
  for_each_subset(3, [&](const Subset& s) { carrier.push_back(s); });
  const auto complementary = [](const Subset& a, const Subset& b) { return a == b.complement(); };
  const auto sym = [](const Subset& a, const Subset& b) { return (a | b) - (a & b); };
  EXPECT_TRUE(check_dialectical_predicate(carrier, complementary, sym).all_hold());
}

TEST(NegationProperties, ConditionsAgreeWithNaiveReadings) {
  Rng rng(77);
  for (const auto& p : enumerate_distributive_lattices(5)) {
    const NaiveLattice nv{p};
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<std::size_t> f(p.size());
      for (auto& v : f) v = uniform_index(rng, p.size());
      const auto prof = check_negation(p, total_op(f));
      EXPECT_EQ(prof.n1.holds, nv.n1(f));
      EXPECT_EQ(prof.n2.holds, nv.n2(f));
      EXPECT_EQ(prof.n3.holds, nv.n3(f));
      EXPECT_EQ(prof.n9.holds, nv.n9(f));
      if (prof.n9.holds) { EXPECT_TRUE(prof.regular()); }
      ASSERT_TRUE(prof.index);
      const auto [m, n] = *prof.index;
      EXPECT_EQ(power(f, m), power(f, n));
      for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t j = 0; j < k; ++j) EXPECT_NE(power(f, j), power(f, k));
      }
    }
  }
}
