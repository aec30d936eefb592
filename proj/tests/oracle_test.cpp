#include "cores/oracle.hpp"

#include <gtest/gtest.h>

namespace cores {
namespace {

using Parts = std::vector<Int>;

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const CoreError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no CoreError thrown";
  return ErrorKind::TooLarge;
}

TEST(OracleTest, PartitionCounts) {
  EXPECT_EQ(enum_partitions_up_to(0).size(), 1u);
  EXPECT_EQ(enum_partitions_up_to(3).size(), 7u);
  EXPECT_EQ(enum_partitions_up_to(10).size(), 139u);
  const auto three = enum_partitions_up_to(3);
  EXPECT_EQ(three[4].parts(), (Parts{3}));
  EXPECT_EQ(three[6].parts(), (Parts{1, 1, 1}));
  EXPECT_EQ(error_of([] { enum_partitions_up_to(41); }), ErrorKind::CapExceeded);
  EXPECT_EQ(error_of([] { enum_partitions_up_to(8, 5); }), ErrorKind::CapExceeded);
}

TEST(OracleTest, BruteCores) {
  std::vector<Parts> got;
  for (const auto& p : brute_st_cores({2, 3}, 5)) got.push_back(p.parts());
  EXPECT_EQ(got, (std::vector<Parts>{{}, {1}}));
  EXPECT_EQ(brute_st_cores({4}, 2).size(), 4u);
  EXPECT_EQ(brute_st_cores({3, 4}, 10).size(), 5u);
}

TEST(OracleTest, BruteStab) {
  EXPECT_EQ(brute_stab_count({0, 1}, 3, false, 2), 1);
  EXPECT_EQ(brute_stab_count({-1, 2}, 3, false, 2), 2);
  for (Int s = 1; s <= 6; ++s) {
    std::vector<Int> sset;
    for (Int i = 0; i < s; ++i) sset.push_back(i);
    BigInt fact = 1;
    for (Int i = 2; i <= s; ++i) fact *= i;
    BigInt sc = 1;
    for (Int i = 1; i <= s / 2; ++i) sc *= 2 * i;
    ASSERT_EQ(brute_stab_count(sset, 1, false, s), fact);
    ASSERT_EQ(brute_stab_count(sset, 1, true, s), sc);
  }
  EXPECT_EQ(error_of([] { brute_stab_count({0}, 3, false, 2); }), ErrorKind::InvalidSSet);
  EXPECT_EQ(error_of([] { brute_stab_count({0, 2}, 3, false, 2); }), ErrorKind::InvalidSSet);
  EXPECT_EQ(error_of([] { brute_stab_count({0, 0}, 3, false, 2); }), ErrorKind::InvalidSSet);
  EXPECT_EQ(error_of([] { brute_stab_count({3, -2, 2}, 2, true, 3); }), ErrorKind::InvalidSSet);
  std::vector<Int> big;
  for (Int i = 0; i < 9; ++i) big.push_back(i);
  EXPECT_EQ(error_of([&] { brute_stab_count(big, 1, false, 9); }), ErrorKind::TooLarge);
}

TEST(OracleTest, Motzkin) {
  const auto m = motzkin_numbers(8);
  EXPECT_EQ(m, (std::vector<BigInt>{1, 1, 2, 4, 9, 21, 51, 127, 323}));
}

TEST(OracleTest, SmallVerifySuitePasses) {
  for (const auto& r : run_verify_suite(3, 4, 10)) {
    EXPECT_TRUE(r.pass) << r.check << " " << r.params << " " << r.witness.value_or("");
  }
}

TEST(OracleTest, FaultInjectionIsCaught) {
  VerifyOptions options;
  options.s_max = 3;
  options.t_max = 4;
  options.n_max = 10;
  options.stab_formula = [](const ZTuple& z) {
    BigInt out = 1;
    for (Int v : z.z) out *= v + 1;
    return out;
  };
  bool caught = false;
  for (const auto& r : run_verify_suite(options)) {
    if (r.check == "stats.stab_vs_brute" && !r.pass) {
      caught = true;
      EXPECT_TRUE(r.witness.has_value());
    }
  }
  EXPECT_TRUE(caught);
}

}  // namespace
}  // namespace cores
