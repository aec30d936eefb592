#pragma once

#include <string>
#include <vector>

#include "cores/betaset.hpp"
#include "cores/coords.hpp"
#include "cores/enumerate.hpp"

namespace cores {

/// |lambda| = -(t^2-1)/24 + (1/2t) sum_i (a_i - (t-1)/2)^2.
Int size_from_a(const ATuple& a);

/// |lambda| = sum_i (t/2 c_i^2 - ((t-1)/2 - i) c_i).
Int size_from_c(const CTuple& c);

/// prod_j z_j!. Throws NegativeEntry.
BigInt stab_size(const ZTuple& z);

/// 2^{u_0} prod u_i! for odd t, 2^{u_0 + u_{t'}} prod u_i! for even t.
BigInt stab_size_sc(const UTuple& u);

/// Which finite set of cores a statistic ranges over.
struct CoreFamily {
  bool weighted = false;
  bool self_conjugate = false;
};

/// sum_lambda w(lambda) |lambda|^e with w = 1 or 1/stab.
ExactRational moment_sum(Int s, Int t, Int e, CoreFamily family);

/// sum w |lambda| / sum w, accumulated with integer weights scaled by
/// s! (general) or 2^{s'} s'! (self-conjugate).
ExactRational average_size(Int s, Int t, CoreFamily family);

/// Closed forms for the four average-size statements.
ExactRational expected_average_size(Int s, Int t, CoreFamily family);

/// Both sides of an exact identity.
struct IdentityReport {
  std::string name;
  Int s = 0;
  Int t = 0;
  ExactRational lhs;
  ExactRational rhs;
  bool pass() const { return lhs == rhs; }
};

IdentityReport check_average_theorem(Int s, Int t, CoreFamily family);

/// Sums over z in TD_t(s) against their closed forms: the three
/// multinomial-weighted (exponential) cases and the four ordinary cases.
/// The quadratic mixed cases are reported once per shift r = 1..t-1.
std::vector<IdentityReport> verify_cyclic_sum_identities(Int s, Int t);

}  // namespace cores
