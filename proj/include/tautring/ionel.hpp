#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tautring/partitions.hpp"
#include "tautring/relation.hpp"
#include "tautring/report.hpp"
#include "tautring/series.hpp"

namespace tautring {

/// q_{k,j}, c_{k,j}, c^n_{k,j} and b^n_j.
///
/// q and c are stored for k <= k_max, c^n for 1 <= n <= n_max and k <= k_max,
/// b^n for n <= max(n_max, 1). Entries outside the natural index ranges are 0;
/// requests beyond the stored bounds throw OutOfSpec.
class IonelTables {
 public:
  IonelTables(int k_max, int n_max);
  int k_max() const { return k_max_; }
  int n_max() const { return n_max_; }

  Rational q(int k, int j) const;
  Rational c(int k, int j) const;
  /// c^0 = c.
  Rational cn(int n, int k, int j) const;
  Rational b(int n, int j) const;

 private:
  int k_max_;
  int n_max_;
  std::vector<std::vector<Rational>> q_;
  std::vector<std::vector<Rational>> c_;
  std::vector<std::vector<std::vector<Rational>>> cn_;  // [n][k][j], n >= 1
  std::vector<std::vector<Rational>> b_;                // [n][j], n >= 1
};

std::shared_ptr<const IonelTables> ionel_tables(int k_max, int n_max = 1);

/// Gamma = -t (sum B_{2i}/(2i(2i-1)) t^{2i-1} + log Phi) as a power series.
RSeries big_gamma(int t_hi, int x_hi);

/// Checks the closed forms for Gamma_x and Gamma, both differential equations
/// and the initial conditions through t^order x^order.
CheckReport gamma_x_check(int order);

/// [P]_{t^r x^d} recomputed as (-1)^d [(1+4y)^{(r+2d-2)/2} P-hat]_{u^r y^d} under
/// u = t / sqrt(1+4x), y = -x / (1+4x).
template <class R>
R uy_extract(const Series<R>& p, int r, int d);

/// G_{n,m}(u, y) through u^{u_hi} y^{y_hi}.
KSeries g_series(int n, int m, int u_hi, int y_hi);
/// H_{n,m}(u) through u^{u_hi}.
KSeries h_series(int n, int m, int u_hi);
/// gamma^c(u, y) = sum kappa_k c_{k,j} u^k y^j.
KSeries gamma_c(int u_hi, int y_hi);

bool thm4_applicable(int g, int r, int d, const Partition& sigma);
std::optional<Relation> thm4_relation(int g, int r, int d, const Partition& sigma);

/// The sigma relation in (u, y) before the reduction: G+ + G- over m-weighted divisions.
/// Needs the nontrivial range and the plus parity.
bool gsigma_applicable(int g, int r, int d, const Partition& sigma);
std::optional<Relation> gsigma_relation(int g, int r, int d, const Partition& sigma);

bool prop3_applicable(int g, int r, const Partition& sigma);
/// The extraction itself, with no range or parity condition (zero when r - |sigma| + l(sigma) < 0).
KappaPoly prop3_extraction(int r, const Partition& sigma);
std::optional<Relation> prop3_relation(int g, int r, const Partition& sigma);

// ---------------------------------------------------------------------------

namespace detail {
/// [y^i] (1 + 4y)^{h/2}.
Rational binom4(int half_exponent, int i);
}  // namespace detail

template <class R>
R uy_extract(const Series<R>& p, int r, int d) {
  // P-hat: t^a x^b -> (-1)^b u^a y^b (1+4y)^{-(a+2b)/2}; only a = r reaches u^r.
  const int half = r + 2 * d - 2;
  R acc{};
  for (int b = 0; b <= d; ++b) {
    R coeff = p.extract({{VariableId::t(), r}, {VariableId::x(), b}});
    if (ring::is_zero(coeff)) continue;
    // [y^{d-b}] (1+4y)^{(half - r - 2b)/2}
    Rational w = detail::binom4(half - r - 2 * b, d - b);
    if ((b + d) % 2 != 0) w = -w;
    ring::scale(coeff, w);
    acc += coeff;
  }
  return acc;
}

}  // namespace tautring
