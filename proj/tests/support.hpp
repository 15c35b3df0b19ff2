#pragma once

#include <random>
#include <vector>

#include "tautring/series.hpp"

namespace tautring::testing {

/// Deterministic source of small random rationals and series.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational rational(int span = 9) {
    int den = integer(1, 6);
    return frac(integer(-span, span), den);
  }

  /// Random series in `spec` (non-Laurent), about `density` fraction of slots filled.
  RSeries series(const TruncationSpec& spec, double density = 0.6, bool unit_constant = false) {
    RSeries out(spec);
    Exponents e{};
    fill(out, spec, 0, e, density);
    if (unit_constant) {
      out = out - RSeries::constant(spec, out.constant_term()) + RSeries::constant(spec, Rational(1));
    }
    return out;
  }

 private:
  void fill(RSeries& out, const TruncationSpec& spec, std::size_t k, Exponents& e, double density) {
    if (k == spec.size()) {
      if (spec.admits(e) && std::uniform_real_distribution<double>(0, 1)(rng_) < density) {
        out.add_term(e, rational());
      }
      return;
    }
    for (int v = 0; v <= spec.hi(k); ++v) {
      e[k] = static_cast<std::int16_t>(v);
      fill(out, spec, k + 1, e, density);
    }
    e[k] = 0;
  }

  std::mt19937 rng_;
};

/// Dense bivariate polynomial a[i][j] used as an arithmetic oracle.
struct Dense {
  std::vector<std::vector<Rational>> a;
  Dense(int n, int m) : a(static_cast<std::size_t>(n + 1), std::vector<Rational>(static_cast<std::size_t>(m + 1))) {}
  int n() const { return static_cast<int>(a.size()) - 1; }
  int m() const { return static_cast<int>(a[0].size()) - 1; }

  Dense mul(const Dense& o) const {
    Dense out(n(), m());
    for (int i = 0; i <= n(); ++i)
      for (int j = 0; j <= m(); ++j)
        for (int k = 0; k <= i; ++k)
          for (int l = 0; l <= j; ++l) out.a[i][j] += a[k][l] * o.a[i - k][j - l];
    return out;
  }
  Dense add(const Dense& o, const Rational& c = 1) const {
    Dense out = *this;
    for (int i = 0; i <= n(); ++i)
      for (int j = 0; j <= m(); ++j) out.a[i][j] += c * o.a[i][j];
    return out;
  }
};

}  // namespace tautring::testing
