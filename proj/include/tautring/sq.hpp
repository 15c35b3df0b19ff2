#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tautring/partitions.hpp"
#include "tautring/relation.hpp"
#include "tautring/series.hpp"

namespace tautring {

/// C^r_d for 1 <= d <= d_max, -1 <= r <= r_max, read off log(Phi).
class LogPhiTable {
 public:
  LogPhiTable(int d_max, int r_max);
  int d_max() const { return d_max_; }
  int r_max() const { return r_max_; }
  const Rational& at(int d, int r) const;

 private:
  int d_max_;
  int r_max_;
  std::vector<std::vector<Rational>> c_;
};

/// Shared table covering at least the requested bounds.
std::shared_ptr<const LogPhiTable> log_phi_table(int d_max, int r_max);

/// Phi as a Laurent series in t (partner x): x^d slice has pole order d.
/// t_hi bounds the shifted exponent e_t + e_x.
RSeries phi_series(int d_max, int t_hi);

/// prod_{i=1}^{d} (1 - i t)^{-1} up to t^n.
std::vector<Rational> inverse_falling_product(int d, int n);

enum class GammaFlavor { Plain, PEnriched, PEnrichedHat };

/// How kappa_{-1} t^{-1} terms are treated: dropped at construction (the
/// default, making gamma a power series) or carried symbolically, which
/// requires a Laurent spec.
enum class KappaMinusOne { Drop, Symbolic };

/// gamma, gamma^p or its hat variant, laid out in `spec` (variables t, x and
/// any p_i; Plain ignores p_i).
KSeries sq_gamma(const LogPhiTable& table, GammaFlavor flavor, const TruncationSpec& spec,
                 KappaMinusOne mode = KappaMinusOne::Drop);

/// Both sides of the p^sigma relation, precomputed for t^{<= r_max} x^{<= d_max}.
class Thm3Evaluator {
 public:
  Thm3Evaluator(const Partition& sigma, int r_max, int d_max);
  /// [exp(-gamma^p)]_{t^r x^d p^sigma}
  KappaPoly lhs(int r, int d) const;
  /// [exp(-sum kappa_s t^s p_{s+1}) exp(-gamma-hat^p)]_{t^r x^d p^sigma}
  KappaPoly rhs_core(int r, int d) const;
  int r_max() const { return r_max_; }
  int d_max() const { return d_max_; }

 private:
  Exponents at(int r, int d) const;

  Partition sigma_;
  int r_max_;
  int d_max_;
  TruncationSpec spec_;
  KSeries lhs_;
  KSeries rhs_;
};

std::shared_ptr<const Thm3Evaluator> thm3_evaluator(const Partition& sigma, int r, int d);

/// Exponent spec with t <= t_hi, x <= x_hi and p_i bounded by the multiplicities of sigma.
TruncationSpec sigma_spec(const Partition& sigma, int t_hi, int x_hi);
Exponents sigma_exponents(const TruncationSpec& spec, const Partition& sigma);

bool thm2_applicable(int g, int r, int d);
bool thm3_applicable(int g, int r, int d, const Partition& sigma);
std::optional<Relation> thm2_relation(int g, int r, int d);
/// LHS minus (-1)^g RHS.
std::optional<Relation> thm3_relation(int g, int r, int d, const Partition& sigma);

/// F_{n,m} = -sum C^s_d kappa_{s+m} t^{s+m} d^n x^d / d!, direct construction.
KSeries f_series(int n, int m, const LogPhiTable& table, int t_hi, int x_hi);
/// -t^m (x d/dx)^n applied to the Laurent series sum C^s_d kappa_{s+m} t^s x^d / d!.
KSeries f_series_operator(int n, int m, const LogPhiTable& table, int t_hi, int x_hi);

/// [exp(-gamma) * sum_{marked divisions} m^{sign} prod kappa t prod F]_{t^r x^d}.
/// sign = -1 is the minus parity, +1 the plus parity.
KappaPoly expanded_poly(int r, int d, const Partition& sigma, int sign);
/// Parity sign dictated by (g, r, sigma): -1 if g = r + |sigma| mod 2, else +1.
int expanded_parity(int g, int r, const Partition& sigma);
std::optional<Relation> expanded_relation(int g, int r, int d, const Partition& sigma, int sign);

/// n! [a^n] tanh(a/2).
Rational tanh_half_coefficient(int n);

struct Prop2Term {
  Partition removed;   // S
  Rational weight;     // c_{l(S)} * number of labeled copies of S
  KappaPoly kappa;     // prod kappa_{s-1} over S
  Partition rest;      // sigma minus S
  int r = 0;           // r - |S| + l(S)
  KappaPoly plus;      // plus-parity expanded polynomial of rest at r
};

struct Prop2Report {
  bool applicable = false;
  bool ok = false;
  KappaPoly minus;
  KappaPoly combination;
  std::vector<Prop2Term> terms;
};

/// Expresses the minus-parity expanded relation of sigma as an explicit
/// combination of plus-parity relations of strictly smaller partitions.
Prop2Report prop2_check(int g, int r, int d, const Partition& sigma);

}  // namespace tautring
