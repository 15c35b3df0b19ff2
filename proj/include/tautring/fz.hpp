#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "tautring/partitions.hpp"
#include "tautring/relation.hpp"
#include "tautring/report.hpp"
#include "tautring/series.hpp"

namespace tautring {

/// (6i)! / ((3i)! (2i)!)
Rational fz_a_coeff(int i);
/// (6i)! / ((3i)! (2i)!) * (6i+1)/(6i-1)
Rational fz_b_coeff(int i);

/// A, B, C = B/A, E = exp(-{log A}_kappa) and C_1..C_n as series in z.
struct HypergeomPack {
  int order = 0;
  RSeries A, B, C, logA;
  KSeries E;
  std::vector<RSeries> Cn;  // Cn[n] for 1 <= n <= n_max; Cn[0] unused
};

HypergeomPack ab_series(int order, int n_max = 1);
std::shared_ptr<const HypergeomPack> hypergeom(int order, int n_max = 1);

/// {F}_kappa over z.
KSeries kappa_insert_z(const RSeries& f);

/// C_n as polynomials in z and C (variable u stands for C).
class FPoly {
 public:
  explicit FPoly(int n_max);
  int n_max() const { return static_cast<int>(cn_.size()) - 1; }
  const RSeries& cn(int n) const { return cn_.at(static_cast<std::size_t>(n)); }
  /// f_{ij} as coefficients in z (index = power of z).
  std::vector<Rational> f(int i, int j) const;
  /// Sum_j f_{nj}(z) C(z)^j for a series C in z.
  RSeries evaluate(int n, const RSeries& c) const;
  /// 1 + sum (-1)^{j-1} f_{ij} / (i! (j-1)!) x^i y^j, in x <= x_order, y <= x_order, z <= z_order.
  RSeries f_series(int x_order, int z_order) const;

 private:
  std::vector<RSeries> cn_;
};

std::shared_ptr<const FPoly> fpoly(int n_max);

/// The hypergeometric and sine identities, each to the given order.
CheckReport identity_suite(int order);

struct Lemma5Result {
  CheckReport report;
  RSeries g;  // [log f]_{y^1}
};
Lemma5Result lemma5_check(int x_order, int z_order);

/// C^r(tau) for tau inside sigma; sigma must avoid parts 2 mod 3.
class PsiLog {
 public:
  PsiLog(const Partition& sigma, int r_max);
  Rational at(const Partition& tau, int r) const;
  const RSeries& series() const { return log_; }

 private:
  Partition sigma_;
  int r_max_;
  RSeries log_;
};

std::shared_ptr<const PsiLog> psi_log(const Partition& sigma, int r_max);

bool thm5_applicable(int g, int r, const Partition& sigma);
/// Throws std::invalid_argument if sigma has a part 2 mod 3.
std::optional<Relation> thm5_relation(int g, int r, const Partition& sigma);

bool fz_reindexed_applicable(int g, int r, const Partition& sigma);
std::optional<Relation> fz_reindexed_relation(int g, int r, const Partition& sigma);

enum class SqFzSide { SQ, FZ };
/// [ ... ]_{p^sigma} as a series in z up to z_order.
KSeries sq_fz_sigma_series(const Partition& sigma, SqFzSide side, int z_order);
/// [E * SQ_sigma]_{z^r}
KappaPoly sq_relation_poly(const Partition& sigma, int r);

/// Polynomial in the symbols {z^a C^j}_kappa (j >= 1) with coefficients in Q[kappa][z].
class SymPoly {
 public:
  using Symbols = std::vector<std::pair<int, int>>;  // sorted (a, j)
  struct Key {
    int zpow = 0;
    Symbols syms;
    auto operator<=>(const Key&) const = default;
  };
  using Map = std::map<Key, KappaPoly>;

  SymPoly() = default;
  static SymPoly constant(const KappaPoly& c, int zpow = 0);
  static SymPoly symbol(int a, int j, const Rational& c = 1);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const KappaPoly& c);
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  SymPoly scaled(const Rational& c) const;
  bool operator==(const SymPoly&) const = default;

  /// Substitutes {z^a C^j}_kappa by its series in z up to z_order.
  KSeries to_series(int z_order) const;

 private:
  Map terms_;
};

/// FZ_sigma and SQ_sigma written in the symbols.
SymPoly fz_symbolic(const Partition& sigma);
SymPoly sq_symbolic(const Partition& sigma);

/// SQ_sigma = sum_tau coeff[tau] * FZ_tau, coefficients in Q[kappa][z] (symbol-free SymPoly).
struct SqFzRow {
  Partition sigma;
  std::map<Partition, SymPoly> coeff;
};
SqFzRow decompose_sq_row(const Partition& sigma);
std::vector<SqFzRow> decompose_sq_in_fz(int sigma_max);
/// Unit diagonal, support in smaller sizes, and the series identity to z_order.
CheckReport check_sq_row(const SqFzRow& row, int z_order);

}  // namespace tautring
