#pragma once

#include <random>
#include <vector>

#include "cores/common.hpp"
#include "cores/partition.hpp"

namespace cores {

/// Finite encoding of a charge-zero beta-set B: the members >= 0 and the
/// missing negatives (gaps). Both vectors are sorted ascending.
class BetaSet {
 public:
  BetaSet() = default;

  /// Validates signs and the charge-zero condition |members| == |gaps|.
  /// Throws ChargeNonzero on a charge mismatch.
  static BetaSet make(std::vector<Int> members, std::vector<Int> gaps);

  const std::vector<Int>& members() const noexcept { return members_; }
  const std::vector<Int>& gaps() const noexcept { return gaps_; }

  bool contains(Int x) const;

  /// Smallest integer below which every integer belongs to B.
  Int floor_bound() const noexcept;
  /// Largest member, or -1 when the set is Z_{<0} minus gaps.
  Int top() const noexcept;

  auto operator<=>(const BetaSet&) const = default;

 private:
  BetaSet(std::vector<Int> members, std::vector<Int> gaps)
      : members_(std::move(members)), gaps_(std::move(gaps)) {}
  std::vector<Int> members_;
  std::vector<Int> gaps_;
};

/// Johnson charge coordinates c_{s,i}, i in 0..s-1.
struct CTuple {
  Int s = 1;
  std::vector<Int> c;
  auto operator<=>(const CTuple&) const = default;
};

/// a-coordinates of a t-core: a_i = t + max(B cap (i + tZ)), i in 0..t-1.
/// The entries form the t-set; a_i = i (mod t) and they sum to t(t-1)/2.
class ATuple {
 public:
  ATuple() = default;
  /// Throws InvalidA when the residue or sum condition fails.
  static ATuple make(Int t, std::vector<Int> a);

  Int t() const noexcept { return t_; }
  const std::vector<Int>& values() const noexcept { return a_; }
  /// Index taken mod t.
  Int operator[](Int i) const noexcept {
    return a_[static_cast<std::size_t>(mod(i, t_))];
  }

  auto operator<=>(const ATuple&) const = default;

 private:
  ATuple(Int t, std::vector<Int> a) : t_(t), a_(std::move(a)) {}
  Int t_ = 1;
  std::vector<Int> a_{0};
};

BetaSet beta_from_partition(const Partition& p);
Partition partition_from_beta(const BetaSet& b);

CTuple charge(const BetaSet& b, Int s);
inline CTuple charge(const Partition& p, Int s) {
  return charge(beta_from_partition(p), s);
}

/// B - s is contained in B.
bool is_s_core(const BetaSet& b, Int s);
inline bool is_s_core(const Partition& p, Int s) {
  return is_s_core(beta_from_partition(p), s);
}

/// Number of x in B with x - s outside B, i.e. the number of rim s-hooks.
Int count_removable_hooks(const BetaSet& b, Int s);

/// Slides every bead down its runner mod s until no gaps remain below it.
BetaSet s_push(const BetaSet& b, Int s);

Partition t_core(const Partition& p, Int t);

/// Throws NotACore unless p is an s-core.
ATuple a_coords(const Partition& p, Int s);

/// The s-set {a_{s,i}} = (B + s) \ B, sorted ascending.
std::vector<Int> s_set(const Partition& p, Int s);

/// Reconstructs the s-core whose a-coordinates are given.
Partition core_from_a(const ATuple& a);
BetaSet beta_from_a(const ATuple& a);

/// a_{s,i} = i - s c_{s,-1-i}; requires sum c = 0.
ATuple a_from_c(const CTuple& c);
CTuple c_from_a(const ATuple& a);

/// x in result iff -1-x not in b.
BetaSet conjugate_beta(const BetaSet& b);

/// Uniformly random c in [-bound, bound]^s with zero sum, via rejection on
/// the last coordinate. Every s-core in the box is reachable.
CTuple random_c(Int s, Int bound, std::mt19937_64& rng);
Partition random_s_core(Int s, Int bound, std::mt19937_64& rng);

}  // namespace cores
