#include "tautring/bernoulli.hpp"

#include <mutex>

namespace tautring {

std::vector<Rational> bernoulli_table(unsigned n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational s = 0;
    Integer c = 1;  // C(m+1, k)
    for (unsigned k = 0; k < m; ++k) {
      s += c * b[k];
      c = c * (m + 1 - k) / (k + 1);
    }
    b[m] = -s / (m + 1);
  }
  return b;
}

Rational bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (n >= cache.size()) cache = bernoulli_table(std::max(n, 2 * static_cast<unsigned>(cache.size()) + 8));
  return cache[n];
}

}  // namespace tautring
