#include "cores/stats.hpp"

namespace cores {

namespace {

ExactRational rational_pow(Int base, Int exponent) {
  ExactRational r = 1;
  const ExactRational b = base;
  for (Int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) r *= b;
  return exponent < 0 ? ExactRational(1) / r : r;
}

ExactRational half(Int n) { return ExactRational(n, 2); }

BigInt pow2(Int e) { return BigInt(1) << static_cast<unsigned>(e); }

Int nonnegative_integer(const ExactRational& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1 || q < 0) {
    throw std::logic_error(std::string(what) + " is not a nonnegative integer: " +
                           to_string(q));
  }
  return static_cast<Int>(boost::multiprecision::numerator(q));
}

std::vector<CoreRecord> family_cores(Int s, Int t, CoreFamily family) {
  return family.self_conjugate ? enum_sc_st_cores(s, t) : enum_st_cores(s, t);
}

BigInt stab_of(const CoreRecord& r, CoreFamily family) {
  return family.self_conjugate ? stab_size_sc(z_to_u(r.z)) : stab_size(r.z);
}

}  // namespace

Int size_from_a(const ATuple& a) {
  const Int t = a.t();
  ExactRational squares = 0;
  for (Int v : a.values()) {
    const ExactRational centered = ExactRational(v) - half(t - 1);
    squares += centered * centered;
  }
  const ExactRational size =
      ExactRational(-(t * t - 1), 24) + squares / ExactRational(2 * t);
  return nonnegative_integer(size, "size from a-coordinates");
}

Int size_from_c(const CTuple& c) {
  const Int t = c.s;
  ExactRational size = 0;
  for (Int i = 0; i < t; ++i) {
    const Int ci = c.c[static_cast<std::size_t>(i)];
    size += half(t) * ci * ci - (half(t - 1) - i) * ci;
  }
  return nonnegative_integer(size, "size from c-coordinates");
}

BigInt stab_size(const ZTuple& z) {
  BigInt out = 1;
  for (Int v : z.z) {
    if (v < 0) throw CoreError(ErrorKind::NegativeEntry, "stabilizer needs z >= 0");
    out *= factorial(v);
  }
  return out;
}

BigInt stab_size_sc(const UTuple& u) {
  BigInt out = 1;
  for (Int v : u.u) {
    if (v < 0) throw CoreError(ErrorKind::NegativeEntry, "stabilizer needs u >= 0");
    out *= factorial(v);
  }
  Int twos = u.u.front();
  if (u.t % 2 == 0) twos += u.u.back();
  return out * pow2(twos);
}

ExactRational moment_sum(Int s, Int t, Int e, CoreFamily family) {
  require_coprime(s, t);
  if (e < 0) throw std::domain_error("moment exponent must be nonnegative");
  ExactRational total = 0;
  for (const CoreRecord& r : family_cores(s, t, family)) {
    BigInt power = 1;
    for (Int i = 0; i < e; ++i) power *= r.size;
    if (family.weighted) {
      total += ExactRational(power, stab_of(r, family));
    } else {
      total += ExactRational(power);
    }
  }
  return total;
}

ExactRational average_size(Int s, Int t, CoreFamily family) {
  require_coprime(s, t);
  const BigInt scale = family.self_conjugate ? pow2(s / 2) * factorial(s / 2) : factorial(s);
  BigInt weight_sum = 0;
  BigInt weighted_size_sum = 0;
  for (const CoreRecord& r : family_cores(s, t, family)) {
    BigInt w = 1;
    if (family.weighted) {
      const BigInt stab = stab_of(r, family);
      if (scale % stab != 0) throw std::logic_error("stabilizer does not divide the scale");
      w = scale / stab;
    }
    weight_sum += w;
    weighted_size_sum += w * r.size;
  }
  return ExactRational(weighted_size_sum, weight_sum);
}

ExactRational expected_average_size(Int s, Int t, CoreFamily family) {
  require_coprime(s, t);
  if (!family.weighted) return ExactRational((s - 1) * (t - 1) * (s + t + 1), 24);
  if (family.self_conjugate && t % 2 == 0) return ExactRational((s - 1) * (t * t + 2), 24);
  return ExactRational((s - 1) * (t * t - 1), 24);
}

IdentityReport check_average_theorem(Int s, Int t, CoreFamily family) {
  std::string name = family.weighted ? "weighted" : "unweighted";
  name += family.self_conjugate ? "_self_conjugate_average" : "_average";
  return IdentityReport{name, s, t, average_size(s, t, family),
                        expected_average_size(s, t, family)};
}

std::vector<IdentityReport> verify_cyclic_sum_identities(Int s, Int t) {
  require_coprime(s, t);
  ExactRational exp_constant = 0, exp_linear = 0, exp_square = 0;
  ExactRational ord_constant = 0, ord_linear = 0, ord_square = 0;
  std::vector<ExactRational> exp_mixed(static_cast<std::size_t>(t), 0);
  std::vector<ExactRational> ord_mixed(static_cast<std::size_t>(t), 0);
  const ExactRational inv_t(1, t);

  for_each_weak_composition(s, t, [&](std::span<const Int> z) {
    Int moment = 0;
    for (Int j = 0; j < t; ++j) moment += j * z[static_cast<std::size_t>(j)];
    if (mod(moment, t) != 0) return;
    const ExactRational weight(multinomial({z.begin(), z.end()}));
    auto at = [&](Int i) { return z[static_cast<std::size_t>(mod(i, t))]; };
    Int linear = 0, square = 0;
    for (Int i = 0; i < t; ++i) {
      linear += at(i);
      square += at(i) * (at(i) - 1);
    }
    exp_constant += weight;
    exp_linear += weight * inv_t * linear;
    exp_square += weight * inv_t * square;
    ord_constant += 1;
    ord_linear += inv_t * linear;
    ord_square += inv_t * square;
    for (Int r = 1; r < t; ++r) {
      Int mixed = 0;
      for (Int i = 0; i < t; ++i) mixed += at(i) * at(i + r);
      exp_mixed[static_cast<std::size_t>(r)] += weight * inv_t * mixed;
      ord_mixed[static_cast<std::size_t>(r)] += inv_t * mixed;
    }
  });

  const ExactRational exp_quadratic_rhs = inv_t * s * (s - 1) * rational_pow(t, s - 2);
  const ExactRational ord_mixed_rhs = inv_t * ExactRational(binomial(s + t - 1, t + 1));
  std::vector<IdentityReport> out{
      {"exp_constant", s, t, exp_constant, inv_t * rational_pow(t, s)},
      {"exp_linear", s, t, exp_linear, inv_t * s * rational_pow(t, s - 1)},
      {"exp_square", s, t, exp_square, exp_quadratic_rhs},
  };
  for (Int r = 1; r < t; ++r) {
    out.push_back({"exp_mixed[r=" + std::to_string(r) + "]", s, t,
                   exp_mixed[static_cast<std::size_t>(r)], exp_quadratic_rhs});
  }
  out.push_back({"ord_constant", s, t, ord_constant,
                 inv_t * ExactRational(binomial(s + t - 1, t - 1))});
  out.push_back({"ord_linear", s, t, ord_linear, inv_t * ExactRational(binomial(s + t - 1, t))});
  out.push_back({"ord_square", s, t, ord_square,
                 inv_t * 2 * ExactRational(binomial(s + t - 1, t + 1))});
  for (Int r = 1; r < t; ++r) {
    out.push_back({"ord_mixed[r=" + std::to_string(r) + "]", s, t,
                   ord_mixed[static_cast<std::size_t>(r)], ord_mixed_rhs});
  }
  return out;
}

}  // namespace cores
