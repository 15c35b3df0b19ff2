#include "tautring/rational.hpp"

#include <cctype>

namespace tautring {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Rational binomial(const Rational& a, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) {
    out *= (a - i);
    out /= (i + 1);
  }
  return out;
}

Integer double_factorial(int n) {
  if (n == -1) return 1;
  if (n == -3) return -1;
  if (n < -3 || n % 2 == 0) {
    throw std::domain_error("double factorial only defined here for odd n >= -3");
  }
  Integer out = 1;
  for (int k = n; k > 1; k -= 2) out *= k;
  return out;
}

}  // namespace tautring
