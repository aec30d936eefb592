#pragma once

#include <vector>

#include "cores/betaset.hpp"
#include "cores/common.hpp"

namespace cores {

/// z-coordinates of a t-core relative to a parameter s coprime to t.
/// Entries sum to s and satisfy sum j z_j = 0 (mod t). They are all
/// nonnegative exactly when the t-core is also an s-core.
struct ZTuple {
  Int t = 1;
  Int s = 1;
  std::vector<Int> z;

  Int operator[](Int j) const noexcept {
    return z[static_cast<std::size_t>(mod(j, t))];
  }
  bool nonnegative() const noexcept;
  auto operator<=>(const ZTuple&) const = default;
};

/// Folded z-coordinates u_0..u_{t'} of a self-conjugate t-core, t' = t/2.
/// Entries sum to s' = s/2.
struct UTuple {
  Int t = 1;
  Int s = 1;
  std::vector<Int> u;
  auto operator<=>(const UTuple&) const = default;
};

/// k = (s+1)(t-1)/2, integral whenever gcd(s, t) = 1.
Int z_offset(Int s, Int t);

/// z_j = (a_{sj+k} - a_{s(j+1)+k} + s) / t. Throws NotCoprime.
ZTuple a_to_z(const ATuple& a, Int s);

/// Throws InvalidZ on a bad sum or congruence, NotCoprime on gcd(s,t) > 1.
ATuple z_to_a(const ZTuple& z);

/// Throws InvalidZ unless the sum and congruence conditions hold.
void validate_z(const ZTuple& z);

/// a_i >= a_{i+s} - s for every i mod t.
bool is_st_core_a(const ATuple& a, Int s);

/// a_i + a_{-1-i} = t - 1 for every i.
bool is_self_conjugate_a(const ATuple& a);

/// z_i = z_{-i} for every i.
bool is_symmetric_z(const ZTuple& z);

/// Throws NotSymmetric or ParityViolation.
UTuple z_to_u(const ZTuple& z);
/// Throws InvalidU when the entries do not sum to s/2 or t,s not coprime.
ZTuple u_to_z(const UTuple& u);

}  // namespace cores
