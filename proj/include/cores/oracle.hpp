#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cores/common.hpp"
#include "cores/coords.hpp"
#include "cores/partition.hpp"

namespace cores {

// Brute-force references. These work on Partition values and raw integer
// sets only; none of them goes through beta-sets or coordinates.

inline constexpr Int kPartitionCap = 40;

/// Every partition of every n <= n_max, grouped by n, each group in
/// reverse lexicographic order. Throws CapExceeded above `cap`.
std::vector<Partition> enum_partitions_up_to(Int n_max, Int cap = kPartitionCap);

/// Partitions of size <= n_max with no hook length divisible by any modulus.
std::vector<Partition> brute_st_cores(const std::set<Int>& moduli, Int n_max,
                                      Int cap = kPartitionCap);

/// Counts permutations of an s-set that preserve residues mod t (and, when
/// `self_conjugate`, commute with m -> s-1-m) by listing all of them.
/// Throws InvalidSSet or TooLarge (more than 8 elements).
BigInt brute_stab_count(const std::vector<Int>& sset, Int t, bool self_conjugate, Int s);

/// Motzkin numbers M_0..M_n by the three-term recurrence.
std::vector<BigInt> motzkin_numbers(Int n);

struct VerifyReport {
  std::string check;
  std::string params;
  bool pass = true;
  std::optional<std::string> witness;
  std::string lhs;  // compared quantities, when the check is a count/equality
  std::string rhs;
};

struct VerifyOptions {
  Int s_max = 5;
  Int t_max = 6;
  Int n_max = 20;
  std::uint64_t seed = 20240601;
  /// Stabilizer formula under test; replaced by fixtures to exercise the
  /// failure path.
  std::function<BigInt(const ZTuple&)> stab_formula;
};

/// Runs every structural property at the given scale, one report per check,
/// sorted by check name then parameters.
std::vector<VerifyReport> run_verify_suite(const VerifyOptions& options);
inline std::vector<VerifyReport> run_verify_suite(Int s_max, Int t_max, Int n_max) {
  VerifyOptions options;
  options.s_max = s_max;
  options.t_max = t_max;
  options.n_max = n_max;
  return run_verify_suite(options);
}

}  // namespace cores
