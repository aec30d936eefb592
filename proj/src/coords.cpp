#include "cores/coords.hpp"

#include <algorithm>

namespace cores {

bool ZTuple::nonnegative() const noexcept {
  return std::all_of(z.begin(), z.end(), [](Int v) { return v >= 0; });
}

Int z_offset(Int s, Int t) {
  require_coprime(s, t);
  return exact_div((s + 1) * (t - 1), 2);
}

ZTuple a_to_z(const ATuple& a, Int s) {
  const Int t = a.t();
  const Int k = z_offset(s, t);
  ZTuple out{t, s, std::vector<Int>(static_cast<std::size_t>(t))};
  for (Int j = 0; j < t; ++j) {
    out.z[static_cast<std::size_t>(j)] =
        exact_div(a[s * j + k] - a[s * (j + 1) + k] + s, t);
  }
  return out;
}

void validate_z(const ZTuple& z) {
  require_coprime(z.s, z.t);
  if (static_cast<Int>(z.z.size()) != z.t) {
    throw CoreError(ErrorKind::InvalidZ, "z-tuple must have exactly t entries");
  }
  Int sum = 0;
  Int moment = 0;
  for (Int j = 0; j < z.t; ++j) {
    sum += z[j];
    moment += j * z[j];
  }
  if (sum != z.s) {
    throw CoreError(ErrorKind::InvalidZ, "z-coordinates must sum to s = " +
                                             std::to_string(z.s));
  }
  if (mod(moment, z.t) != 0) {
    throw CoreError(ErrorKind::InvalidZ,
                    "z-coordinates violate sum j*z_j = 0 mod t");
  }
}

ATuple z_to_a(const ZTuple& z) {
  validate_z(z);
  const Int t = z.t;
  const Int s = z.s;
  const Int k = z_offset(s, t);
  // a_{k + l s} = (t-1)/2 + sum_j ((t-1)/2 - j) z_{j+l}, evaluated at twice
  // the scale so the half-integers stay integral.
  std::vector<Int> a(static_cast<std::size_t>(t));
  for (Int l = 0; l < t; ++l) {
    Int twice = t - 1;
    for (Int j = 0; j < t; ++j) twice += (t - 1 - 2 * j) * z[j + l];
    a[static_cast<std::size_t>(mod(k + l * s, t))] = exact_div(twice, 2);
  }
  return ATuple::make(t, std::move(a));
}

bool is_st_core_a(const ATuple& a, Int s) {
  for (Int i = 0; i < a.t(); ++i) {
    if (a[i] < a[i + s] - s) return false;
  }
  return true;
}

bool is_self_conjugate_a(const ATuple& a) {
  for (Int i = 0; i < a.t(); ++i) {
    if (a[i] + a[-1 - i] != a.t() - 1) return false;
  }
  return true;
}

bool is_symmetric_z(const ZTuple& z) {
  for (Int i = 0; i < z.t; ++i) {
    if (z[i] != z[-i]) return false;
  }
  return true;
}

UTuple z_to_u(const ZTuple& z) {
  require_coprime(z.s, z.t);
  if (static_cast<Int>(z.z.size()) != z.t) {
    throw CoreError(ErrorKind::InvalidZ, "z-tuple must have exactly t entries");
  }
  if (!is_symmetric_z(z)) {
    throw CoreError(ErrorKind::NotSymmetric, "z-coordinates are not symmetric");
  }
  const Int t = z.t;
  const Int half_t = t / 2;
  const Int parity = z.s % 2;
  if (mod(z[0] - parity, 2) != 0) {
    throw CoreError(ErrorKind::ParityViolation, "z_0 must have the parity of s");
  }
  UTuple out{t, z.s, std::vector<Int>(static_cast<std::size_t>(half_t + 1))};
  out.u[0] = (z[0] - parity) / 2;
  if (t % 2 == 1) {
    for (Int i = 1; i <= half_t; ++i) out.u[static_cast<std::size_t>(i)] = z[i];
  } else {
    if (mod(z[half_t], 2) != 0) {
      throw CoreError(ErrorKind::ParityViolation, "z_{t/2} must be even");
    }
    for (Int i = 1; i < half_t; ++i) out.u[static_cast<std::size_t>(i)] = z[i];
    out.u[static_cast<std::size_t>(half_t)] = z[half_t] / 2;
  }
  validate_z(z);
  return out;
}

ZTuple u_to_z(const UTuple& u) {
  const Int t = u.t;
  const Int half_t = t / 2;
  if (t < 1 || u.s < 1 || !coprime(u.s, t)) {
    throw CoreError(ErrorKind::NotCoprime, "s and t must be coprime");
  }
  if (static_cast<Int>(u.u.size()) != half_t + 1) {
    throw CoreError(ErrorKind::InvalidU, "u-tuple must have floor(t/2)+1 entries");
  }
  Int sum = 0;
  for (Int v : u.u) sum += v;
  if (sum != u.s / 2) {
    throw CoreError(ErrorKind::InvalidU, "u-coordinates must sum to floor(s/2)");
  }
  ZTuple out{t, u.s, std::vector<Int>(static_cast<std::size_t>(t), 0)};
  out.z[0] = 2 * u.u[0] + u.s % 2;
  const Int paired_end = (t % 2 == 1) ? half_t : half_t - 1;
  for (Int i = 1; i <= paired_end; ++i) {
    out.z[static_cast<std::size_t>(i)] = u.u[static_cast<std::size_t>(i)];
    out.z[static_cast<std::size_t>(t - i)] = u.u[static_cast<std::size_t>(i)];
  }
  if (t % 2 == 0 && half_t >= 1) {
    out.z[static_cast<std::size_t>(half_t)] = 2 * u.u[static_cast<std::size_t>(half_t)];
  }
  return out;
}

}  // namespace cores
