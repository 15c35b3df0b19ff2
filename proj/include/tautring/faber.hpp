#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tautring/partitions.hpp"
#include "tautring/relation.hpp"
#include "tautring/series.hpp"

namespace tautring {

/// Theta(t, x) = sum_d prod_{i<=d} (1+it) (-1)^d / d! x^d / t^d, Laurent in t.
/// t_hi bounds the shifted exponent e_t + e_x.
RSeries theta_series(int d_max, int t_hi);
/// (1+x)^{-1} exp(-log(1+x)/t) in the same layout.
RSeries theta_closed_form(int d_max, int t_hi);

/// Laurent layout over t, x and the z_{i,j} dividing sigma.
TruncationSpec z_spec(const ZMonomial& sigma, int t_hi, int x_hi);
/// Monomials dividing sigma, the empty one included.
std::vector<ZMonomial> z_divisors(const ZMonomial& sigma);
Exponents z_exponents(const TruncationSpec& spec, const ZMonomial& sigma);

/// exp(D) Theta from its closed expansion, restricted to divisors of sigma.
RSeries theta_d_series(const ZMonomial& sigma, int d_max, int t_hi);
/// exp(D) Theta by iterating D = sum z_{i,j} t^j (x d/dx)^i; the oracle.
RSeries theta_d_by_operator(const ZMonomial& sigma, int d_max, int t_hi);

/// C^r_d(tau) for tau dividing sigma, 1 <= d <= d_max, -1 <= r <= r_max.
class ThetaDLog {
 public:
  ThetaDLog(const ZMonomial& sigma, int d_max, int r_max);
  const Rational& at(const ZMonomial& tau, int d, int r) const;
  /// log(Theta^D) with t bounded by r_max + d_max in shifted coordinates.
  const RSeries& series() const { return log_; }
  int d_max() const { return d_max_; }
  int r_max() const { return r_max_; }

 private:
  ZMonomial sigma_;
  int d_max_;
  int r_max_;
  RSeries log_;
  std::map<ZMonomial, std::vector<std::vector<Rational>>> c_;  // [d][r+1]
};

std::shared_ptr<const ThetaDLog> theta_d_log(const ZMonomial& sigma, int d_max, int r_max);

/// gamma = sum B_{2i}/(2i(2i-1)) kappa_{2i-1} t^{2i-1} + sum C^r_d(tau) kappa_r t^r x^d/d! z^tau,
/// kappa_{-1} dropped, in the power-series layout t <= r_max, x <= d_max.
KSeries faber_gamma(const ZMonomial& sigma, int d_max, int r_max);

bool thm1_applicable(int g, int r, int d, const ZMonomial& sigma);
/// [exp(-gamma)]_{t^r x^d z^sigma}; kappa_0 stays symbolic.
std::optional<Relation> thm1_relation(int g, int r, int d, const ZMonomial& sigma);

}  // namespace tautring
