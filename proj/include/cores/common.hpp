#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cores {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

enum class ErrorKind {
  NonMonotone,
  OutOfDiagram,
  ChargeNonzero,
  NotACore,
  NotCoprime,
  InvalidZ,
  InvalidA,
  InvalidU,
  NotSymmetric,
  ParityViolation,
  NegativeEntry,
  CapExceeded,
  TooLarge,
  InvalidSSet,
};

const char* to_string(ErrorKind kind);

// Recoverable domain error: bad input handed to a library operation.
class CoreError : public std::runtime_error {
 public:
  CoreError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Nonnegative residue of x modulo m (m >= 1).
constexpr Int mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

inline bool coprime(Int a, Int b) { return std::gcd(a, b) == 1; }

// Throws NotCoprime unless gcd(a, b) == 1 and both are positive.
void require_coprime(Int a, Int b);

// Exact quotient; a nonzero remainder means an invariant was broken upstream.
Int exact_div(Int num, Int den);

BigInt factorial(Int n);
BigInt binomial(Int n, Int k);  // 0 outside 0 <= k <= n
BigInt multinomial(const std::vector<Int>& parts);

// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const ExactRational& q);
ExactRational parse_rational(const std::string& text);

}  // namespace cores
