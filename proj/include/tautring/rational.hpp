#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tautring {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a caller reads a coefficient the truncation cannot vouch for.
class OutOfSpec : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// n/d in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// "n" for integers, "n/d" otherwise; always reduced.
std::string to_string(const Rational& q);

/// Accepts "n", "-n", "n/d". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);

/// Generalized binomial coefficient a(a-1)...(a-k+1)/k! for rational a.
Rational binomial(const Rational& a, unsigned k);

/// n!! for odd n >= -3, with (-1)!! = 1 and (-3)!! = -1.
Integer double_factorial(int n);

/// (-1)^n
inline int sign_power(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace tautring
