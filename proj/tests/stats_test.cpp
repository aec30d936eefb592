#include "cores/stats.hpp"

#include <gtest/gtest.h>

#include "cores/enumerate.hpp"
#include "cores/oracle.hpp"

namespace cores {
namespace {

ExactRational Q(Int p, Int q = 1) { return ExactRational(p, q); }

TEST(StatsTest, Sizes) {
  EXPECT_EQ(size_from_a(ATuple::make(3, {0, 1, 2})), 0);
  EXPECT_EQ(size_from_a(ATuple::make(3, {3, 1, -1})), 1);
  EXPECT_EQ(size_from_c(CTuple{4, {0, 1, 0, -1}}), 2);
  for (const auto& p : enum_partitions_up_to(16)) {
    for (Int t = 1; t <= 6; ++t) {
      if (!is_s_core(p, t)) continue;
      ASSERT_EQ(size_from_a(a_coords(p, t)), p.size());
      ASSERT_EQ(size_from_c(charge(p, t)), p.size());
    }
  }
}

TEST(StatsTest, Stabilizers) {
  EXPECT_EQ(stab_size(ZTuple{3, 2, {0, 1, 1}}), 1);
  EXPECT_EQ(stab_size(ZTuple{3, 2, {2, 0, 0}}), 2);
  EXPECT_EQ(stab_size(ZTuple{1, 5, {5}}), 120);
  EXPECT_EQ(stab_size_sc(UTuple{3, 2, {0, 1}}), 1);
  EXPECT_EQ(stab_size_sc(UTuple{3, 2, {1, 0}}), 2);
  EXPECT_EQ(stab_size_sc(UTuple{2, 3, {0, 1}}), 2);
  try {
    stab_size(ZTuple{3, 2, {3, 0, -1}});
    FAIL() << "expected NegativeEntry";
  } catch (const CoreError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeEntry);
  }
}

TEST(StatsTest, StabilizerAgainstPermutationCount) {
  for (Int s = 1; s <= 6; ++s) {
    for (Int t = 1; t <= 6; ++t) {
      if (!coprime(s, t)) continue;
      for (const auto& r : enum_st_cores(s, t)) {
        const auto sset = s_set(r.partition, s);
        ASSERT_EQ(stab_size(r.z), brute_stab_count(sset, t, false, s));
        if (is_self_conjugate(r.partition)) {
          ASSERT_EQ(stab_size_sc(z_to_u(r.z)), brute_stab_count(sset, t, true, s));
        }
      }
    }
  }
}

TEST(StatsTest, Averages) {
  EXPECT_EQ(average_size(2, 3, {false, false}), Q(1, 2));
  EXPECT_EQ(average_size(2, 3, {true, false}), Q(1, 3));
  EXPECT_EQ(average_size(3, 2, {true, true}), Q(1, 2));
  EXPECT_EQ(average_size(3, 4, {true, false}), Q(5, 4));
  for (Int s = 1; s <= 7; ++s) {
    for (Int t = 1; t <= 7; ++t) {
      if (!coprime(s, t)) continue;
      for (bool w : {false, true}) {
        for (bool sc : {false, true}) {
          const CoreFamily f{w, sc};
          ASSERT_EQ(average_size(s, t, f), expected_average_size(s, t, f));
          ASSERT_TRUE(check_average_theorem(s, t, f).pass());
        }
      }
    }
  }
}

TEST(StatsTest, AveragesAgainstDirectMean) {
  for (auto [s, t] : {std::pair<Int, Int>{3, 5}, {4, 5}, {5, 6}}) {
    ExactRational total = 0, weight = 0;
    for (const auto& p : brute_st_cores({s, t}, 40)) {
      total += p.size();
      weight += 1;
    }
    ASSERT_EQ(total / weight, expected_average_size(s, t, {false, false}));
  }
}

TEST(StatsTest, Moments) {
  const CoreFamily plain{false, false};
  EXPECT_EQ(moment_sum(2, 3, 0, plain), Q(2));
  EXPECT_EQ(moment_sum(2, 3, 1, plain), Q(1));
  EXPECT_EQ(moment_sum(2, 3, 2, plain), Q(1));
  EXPECT_EQ(moment_sum(3, 4, 0, plain), Q(5));
  EXPECT_EQ(moment_sum(2, 3, 0, {true, false}), Q(1, 2) + Q(1));
}

TEST(StatsTest, CyclicSumIdentities) {
  const auto reports = verify_cyclic_sum_identities(3, 2);
  EXPECT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_TRUE(r.pass()) << r.name;
  for (Int s = 1; s <= 7; ++s) {
    for (Int t = 1; t <= 7; ++t) {
      if (!coprime(s, t)) continue;
      for (const auto& r : verify_cyclic_sum_identities(s, t)) {
        ASSERT_TRUE(r.pass()) << r.name << " s=" << s << " t=" << t;
      }
    }
  }
}

}  // namespace
}  // namespace cores
