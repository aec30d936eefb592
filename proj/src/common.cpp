#include "cores/common.hpp"

#include <sstream>

namespace cores {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::OutOfDiagram: return "OutOfDiagram";
    case ErrorKind::ChargeNonzero: return "ChargeNonzero";
    case ErrorKind::NotACore: return "NotACore";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::InvalidZ: return "InvalidZ";
    case ErrorKind::InvalidA: return "InvalidA";
    case ErrorKind::InvalidU: return "InvalidU";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidSSet: return "InvalidSSet";
  }
  return "Unknown";
}

void require_coprime(Int a, Int b) {
  if (a < 1 || b < 1 || !coprime(a, b)) {
    throw CoreError(ErrorKind::NotCoprime, "s and t must be coprime (got " +
                                               std::to_string(a) + ", " +
                                               std::to_string(b) + ")");
  }
}

Int exact_div(Int num, Int den) {
  if (den == 0 || num % den != 0) {
    throw std::logic_error("inexact division " + std::to_string(num) + "/" +
                           std::to_string(den));
  }
  return num / den;
}

BigInt factorial(Int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt r = 1;
  for (Int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (Int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt multinomial(const std::vector<Int>& parts) {
  Int total = 0;
  BigInt r = 1;
  for (Int p : parts) {
    if (p < 0) return 0;
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

std::string to_string(const ExactRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

ExactRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return ExactRational(BigInt(text));
  return ExactRational(BigInt(text.substr(0, slash)),
                       BigInt(text.substr(slash + 1)));
}

}  // namespace cores
