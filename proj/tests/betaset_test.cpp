#include "cores/betaset.hpp"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "cores/oracle.hpp"

namespace cores {
namespace {

Partition P(std::initializer_list<Int> parts) { return Partition::from_parts(parts); }

// {lambda_i - i : 1 <= i <= depth}; enough to decide membership above -depth.
std::set<Int> raw_beta(const Partition& p, Int depth) {
  std::set<Int> out;
  for (Int i = 1; i <= depth; ++i) out.insert(p.part(i) - i);
  return out;
}

// Charge straight from the definition on a finite window.
std::vector<Int> charge_by_definition(const Partition& p, Int s) {
  const Int depth = p.length() + 2 * s + 2;
  const auto b = raw_beta(p, depth);
  std::vector<Int> c(static_cast<std::size_t>(s), 0);
  for (Int x = -depth + 1; x <= p.part(1) + 1; ++x) {
    const auto i = static_cast<std::size_t>(mod(-1 - x, s));
    if (x < 0 && !b.count(x)) ++c[i];
    if (x >= 0 && b.count(x)) --c[i];
  }
  return c;
}

TEST(BetaSetTest, FromPartition) {
  const BetaSet e = beta_from_partition(P({}));
  EXPECT_TRUE(e.members().empty());
  EXPECT_TRUE(e.gaps().empty());
  const BetaSet b = beta_from_partition(P({3, 2, 2}));
  EXPECT_EQ(b.members(), (std::vector<Int>{0, 2}));
  EXPECT_EQ(b.gaps(), (std::vector<Int>{-3, -2}));
  const BetaSet f = beta_from_partition(P({5, 5}));
  EXPECT_EQ(f.members(), (std::vector<Int>{3, 4}));
  EXPECT_EQ(f.gaps(), (std::vector<Int>{-2, -1}));
}

TEST(BetaSetTest, ToPartition) {
  EXPECT_EQ(partition_from_beta(BetaSet::make({}, {})), P({}));
  EXPECT_EQ(partition_from_beta(BetaSet::make({0, 2}, {-2, -3})), P({3, 2, 2}));
  EXPECT_EQ(partition_from_beta(BetaSet::make({3, 4}, {-1, -2})), P({5, 5}));
  try {
    BetaSet::make({0, 1}, {-1});
    FAIL() << "expected ChargeNonzero";
  } catch (const CoreError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ChargeNonzero);
  }
}

TEST(BetaSetTest, RoundTrip) {
  for (const auto& p : enum_partitions_up_to(20)) {
    ASSERT_EQ(partition_from_beta(beta_from_partition(p)), p);
  }
}

TEST(BetaSetTest, Charge) {
  EXPECT_EQ(charge(P({}), 4).c, (std::vector<Int>{0, 0, 0, 0}));
  EXPECT_EQ(charge(P({5, 5}), 4).c, (std::vector<Int>{0, 1, 0, -1}));
  EXPECT_EQ(charge(P({1, 1}), 4).c, (std::vector<Int>{0, 1, 0, -1}));
}

TEST(BetaSetTest, ChargeMatchesDefinition) {
  for (const auto& p : enum_partitions_up_to(12)) {
    for (Int s = 1; s <= 6; ++s) {
      const auto c = charge(p, s).c;
      ASSERT_EQ(c, charge_by_definition(p, s));
      Int total = 0;
      for (Int v : c) total += v;
      ASSERT_EQ(total, 0);
    }
  }
}

TEST(BetaSetTest, IsSCore) {
  EXPECT_TRUE(is_s_core(P({}), 3));
  EXPECT_FALSE(is_s_core(P({5, 5}), 4));
  EXPECT_TRUE(is_s_core(P({1, 1}), 4));
}

TEST(BetaSetTest, HookBijection) {
  for (const auto& p : enum_partitions_up_to(12)) {
    const auto hooks = hook_lengths(p);
    for (Int s = 1; s <= 6; ++s) {
      ASSERT_EQ(std::count(hooks.begin(), hooks.end(), s),
                count_removable_hooks(beta_from_partition(p), s));
    }
  }
}

TEST(BetaSetTest, SPush) {
  EXPECT_EQ(s_push(beta_from_partition(P({5, 5})), 4), beta_from_partition(P({1, 1})));
  EXPECT_EQ(s_push(beta_from_partition(P({3, 2, 2})), 1), beta_from_partition(P({})));
  const BetaSet core = beta_from_partition(P({2, 1}));
  EXPECT_EQ(s_push(core, 2), core);
}

TEST(BetaSetTest, ChargeConservedBySPush) {
  for (const auto& p : enum_partitions_up_to(14)) {
    const BetaSet b = beta_from_partition(p);
    for (Int s = 1; s <= 6; ++s) {
      const BetaSet pushed = s_push(b, s);
      ASSERT_TRUE(is_s_core(pushed, s));
      ASSERT_EQ(charge(pushed, s), charge(b, s));
    }
  }
}

TEST(BetaSetTest, TCore) {
  EXPECT_EQ(t_core(P({5, 5}), 4), P({1, 1}));
  EXPECT_EQ(t_core(P({1, 1}), 4), P({1, 1}));
  EXPECT_EQ(t_core(P({5, 5}), 3), t_core_by_diagram(P({5, 5}), 3));
  for (const auto& p : enum_partitions_up_to(14)) {
    for (Int t = 1; t <= 6; ++t) ASSERT_EQ(t_core(p, t), t_core_by_diagram(p, t));
  }
}

TEST(BetaSetTest, ACoords) {
  EXPECT_EQ(a_coords(P({}), 3).values(), (std::vector<Int>{0, 1, 2}));
  EXPECT_EQ(a_coords(P({1}), 3).values(), (std::vector<Int>{3, 1, -1}));
  try {
    a_coords(P({5, 5}), 4);
    FAIL() << "expected NotACore";
  } catch (const CoreError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACore);
  }
}

TEST(BetaSetTest, SSetIsShiftDifference) {
  for (const auto& p : enum_partitions_up_to(16)) {
    for (Int s = 1; s <= 5; ++s) {
      if (!is_s_core(p, s)) continue;
      const auto b = raw_beta(p, p.length() + 4 * s + 4);
      std::vector<Int> expected;
      for (Int x : b) {
        if (!b.count(x + s)) expected.push_back(x + s);
      }
      std::sort(expected.begin(), expected.end());
      ASSERT_EQ(s_set(p, s), expected);
      ASSERT_EQ(core_from_a(a_coords(p, s)), p);
    }
  }
}

TEST(BetaSetTest, CAConsistency) {
  for (const auto& p : enum_partitions_up_to(16)) {
    for (Int s = 1; s <= 5; ++s) {
      if (!is_s_core(p, s)) continue;
      const ATuple a = a_coords(p, s);
      const CTuple c = charge(p, s);
      EXPECT_EQ(a_from_c(c), a);
      EXPECT_EQ(c_from_a(a), c);
    }
  }
}

TEST(BetaSetTest, ConjugateBeta) {
  EXPECT_EQ(conjugate_beta(beta_from_partition(P({}))), beta_from_partition(P({})));
  EXPECT_EQ(conjugate_beta(beta_from_partition(P({3, 2, 2}))), beta_from_partition(P({3, 3, 1})));
  EXPECT_EQ(conjugate_beta(beta_from_partition(P({1, 1}))), beta_from_partition(P({2})));
  for (const auto& p : enum_partitions_up_to(14)) {
    const BetaSet b = beta_from_partition(p);
    ASSERT_EQ(conjugate_beta(b), beta_from_partition(conjugate(p)));
    for (Int s = 1; s <= 5; ++s) {
      const auto lhs = charge(conjugate_beta(b), s).c;
      const auto rhs = charge(b, s).c;
      for (Int i = 0; i < s; ++i) {
        ASSERT_EQ(lhs[static_cast<std::size_t>(i)], -rhs[static_cast<std::size_t>(mod(-1 - i, s))]);
      }
    }
  }
}

TEST(BetaSetTest, CoreCommutesWithConjugation) {
  for (const auto& p : enum_partitions_up_to(15)) {
    for (Int s = 1; s <= 5; ++s) ASSERT_EQ(t_core(conjugate(p), s), conjugate(t_core(p, s)));
  }
}

TEST(BetaSetTest, RandomCoresCoverTheBox) {
  std::mt19937_64 rng(7);
  std::set<std::vector<Int>> seen;
  for (int i = 0; i < 2000; ++i) {
    const CTuple c = random_c(3, 1, rng);
    ASSERT_EQ(c.c[0] + c.c[1] + c.c[2], 0);
    seen.insert(c.c);
    ASSERT_TRUE(is_s_core(core_from_a(a_from_c(c)), 3));
  }
  // Zero-sum triples in [-1,1]^3: 7 of them.
  EXPECT_EQ(seen.size(), 7u);
}

TEST(BetaSetTest, OlssonClosure) {
  std::mt19937_64 rng(11);
  for (Int s = 1; s <= 6; ++s) {
    for (int trial = 0; trial < 20; ++trial) {
      const Partition lambda = random_s_core(s, 4, rng);
      for (Int t = 1; t <= 6; ++t) {
        const Partition core = t_core(lambda, t);
        ASSERT_TRUE(is_s_core(core, s));
        std::multiset<Int> lhs, rhs;
        for (Int x : s_set(lambda, s)) lhs.insert(mod(x, t));
        for (Int x : s_set(core, s)) rhs.insert(mod(x, t));
        ASSERT_EQ(lhs, rhs);
      }
    }
  }
}

}  // namespace
}  // namespace cores
