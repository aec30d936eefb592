#include "cores/coords.hpp"

#include <random>

#include <gtest/gtest.h>

#include "cores/oracle.hpp"

namespace cores {
namespace {

Partition P(std::initializer_list<Int> parts) { return Partition::from_parts(parts); }
ATuple A(Int t, std::vector<Int> a) { return ATuple::make(t, std::move(a)); }

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

TEST(CoordsTest, ATupleInvariants) {
  EXPECT_EQ(error_of([] { A(3, {0, 1, 3}); }), ErrorKind::InvalidA);
  EXPECT_EQ(error_of([] { A(3, {3, 1, 2}); }), ErrorKind::InvalidA);
}

TEST(CoordsTest, ZOffset) {
  EXPECT_EQ(z_offset(2, 3), 3);
  EXPECT_EQ(z_offset(3, 2), 2);
  for (Int s = 1; s <= 9; ++s) {
    for (Int t = 1; t <= 9; ++t) {
      if (coprime(s, t)) EXPECT_NO_THROW(z_offset(s, t));
    }
  }
  EXPECT_EQ(error_of([] { z_offset(2, 4); }), ErrorKind::NotCoprime);
}

TEST(CoordsTest, AToZ) {
  EXPECT_EQ(a_to_z(A(3, {0, 1, 2}), 2).z, (std::vector<Int>{0, 1, 1}));
  EXPECT_EQ(a_to_z(A(3, {3, 1, -1}), 2).z, (std::vector<Int>{2, 0, 0}));
  EXPECT_EQ(error_of([] { a_to_z(A(4, {0, 1, 2, 3}), 2); }), ErrorKind::NotCoprime);
}

TEST(CoordsTest, ZToA) {
  EXPECT_EQ(z_to_a(ZTuple{3, 2, {0, 1, 1}}).values(), (std::vector<Int>{0, 1, 2}));
  EXPECT_EQ(z_to_a(ZTuple{3, 2, {2, 0, 0}}).values(), (std::vector<Int>{3, 1, -1}));
  EXPECT_EQ(error_of([] { z_to_a(ZTuple{3, 2, {1, 1, 0}}); }), ErrorKind::InvalidZ);
  EXPECT_EQ(error_of([] { z_to_a(ZTuple{3, 2, {1, 1, 1}}); }), ErrorKind::InvalidZ);
}

TEST(CoordsTest, RoundTripsOnRandomInputs) {
  std::mt19937_64 rng(3);
  for (Int s = 1; s <= 9; ++s) {
    for (Int t = 1; t <= 9; ++t) {
      if (!coprime(s, t)) continue;
      for (int trial = 0; trial < 500; ++trial) {
        const ATuple a = a_from_c(random_c(t, 5, rng));
        const ZTuple z = a_to_z(a, s);
        Int sum = 0;
        for (Int v : z.z) sum += v;
        ASSERT_EQ(sum, s);
        ASSERT_EQ(z_to_a(z), a);
      }
    }
  }
}

TEST(CoordsTest, StCoreCriterion) {
  EXPECT_TRUE(is_st_core_a(A(3, {0, 1, 2}), 2));
  EXPECT_TRUE(is_st_core_a(A(3, {3, 1, -1}), 2));
  // Against the beta-set criterion on random 4-cores with s = 3.
  std::mt19937_64 rng(5);
  int hits = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const ATuple a = a_from_c(random_c(4, 2, rng));
    const bool expected = is_s_core(core_from_a(a), 3);
    hits += expected;
    ASSERT_EQ(is_st_core_a(a, 3), expected);
    ASSERT_EQ(a_to_z(a, 3).nonnegative(), expected);
  }
  EXPECT_GT(hits, 0);
  EXPECT_LT(hits, 200);
}

TEST(CoordsTest, SelfConjugateA) {
  EXPECT_TRUE(is_self_conjugate_a(A(3, {0, 1, 2})));
  EXPECT_TRUE(is_self_conjugate_a(A(3, {3, 1, -1})));
  EXPECT_EQ(a_coords(P({2}), 3).values(), (std::vector<Int>{0, 4, -1}));
  EXPECT_FALSE(is_self_conjugate_a(a_coords(P({2}), 3)));
  for (const auto& p : enum_partitions_up_to(18)) {
    for (Int t = 1; t <= 6; ++t) {
      if (is_s_core(p, t)) ASSERT_EQ(is_self_conjugate_a(a_coords(p, t)), is_self_conjugate(p));
    }
  }
}

TEST(CoordsTest, ZToU) {
  EXPECT_EQ(z_to_u(ZTuple{3, 2, {0, 1, 1}}).u, (std::vector<Int>{0, 1}));
  EXPECT_EQ(z_to_u(ZTuple{2, 3, {1, 2}}).u, (std::vector<Int>{0, 1}));
  EXPECT_EQ(z_to_u(ZTuple{2, 3, {3, 0}}).u, (std::vector<Int>{1, 0}));
  EXPECT_EQ(error_of([] { z_to_u(ZTuple{3, 4, {1, 0, 3}}); }), ErrorKind::NotSymmetric);
  EXPECT_EQ(error_of([] { z_to_u(ZTuple{4, 3, {0, 1, 1, 1}}); }), ErrorKind::ParityViolation);
}

TEST(CoordsTest, UToZ) {
  EXPECT_EQ(u_to_z(UTuple{3, 2, {0, 1}}).z, (std::vector<Int>{0, 1, 1}));
  EXPECT_EQ(u_to_z(UTuple{2, 3, {0, 1}}).z, (std::vector<Int>{1, 2}));
  EXPECT_EQ(u_to_z(UTuple{2, 3, {1, 0}}).z, (std::vector<Int>{3, 0}));
  EXPECT_EQ(u_to_z(UTuple{1, 5, {2}}).z, (std::vector<Int>{5}));
  EXPECT_EQ(error_of([] { u_to_z(UTuple{3, 2, {1, 1}}); }), ErrorKind::InvalidU);
}

TEST(CoordsTest, UZRoundTripAndSymmetryTransfer) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<Int> dist(-4, 4);
  for (Int s = 1; s <= 9; ++s) {
    for (Int t = 1; t <= 9; ++t) {
      if (!coprime(s, t)) continue;
      for (int trial = 0; trial < 500; ++trial) {
        UTuple u{t, s, std::vector<Int>(static_cast<std::size_t>(t / 2 + 1))};
        Int rest = s / 2;
        for (std::size_t i = 1; i < u.u.size(); ++i) rest -= (u.u[i] = dist(rng));
        u.u[0] = rest;
        const ZTuple z = u_to_z(u);
        ASSERT_EQ(z_to_u(z), u);
        ASSERT_TRUE(is_self_conjugate_a(z_to_a(z)));
      }
      for (int trial = 0; trial < 200; ++trial) {
        const ATuple a = a_from_c(random_c(t, 3, rng));
        ASSERT_EQ(is_self_conjugate_a(a), is_symmetric_z(a_to_z(a, s)));
      }
    }
  }
}

TEST(CoordsTest, ZCountsSSetResidues) {
  std::mt19937_64 rng(13);
  for (Int s = 1; s <= 7; ++s) {
    for (Int t = 1; t <= 7; ++t) {
      if (!coprime(s, t)) continue;
      const Int k = z_offset(s, t);
      for (int trial = 0; trial < 30; ++trial) {
        const Partition lambda = random_s_core(s, 3, rng);
        const auto sset = s_set(lambda, s);
        const ZTuple z = a_to_z(a_coords(t_core(lambda, t), t), s);
        for (Int j = 0; j < t; ++j) {
          Int count = 0;
          for (Int x : sset) count += mod(x - s - (s * j + k), t) == 0;
          ASSERT_EQ(z[j], count);
        }
      }
    }
  }
}

}  // namespace
}  // namespace cores
