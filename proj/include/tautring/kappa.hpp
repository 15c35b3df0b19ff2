#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tautring/rational.hpp"

namespace tautring {

/// Product of kappa classes, exponents for kappa_{-1} .. kappa_{kMaxKappa}.
class KappaMonomial {
 public:
  static constexpr int kMinIndex = -1;
  static constexpr int kMaxKappa = 30;

  KappaMonomial() { exps_.fill(0); }
  static KappaMonomial kappa(int index, int power = 1);
  /// kappa_{parts[0]} kappa_{parts[1]} ...
  static KappaMonomial from_parts(const std::vector<int>& parts);

  int exponent(int index) const;
  /// Sum of index times multiplicity.
  int degree() const;
  bool is_one() const;
  /// Indices in descending order, with repetition.
  std::vector<int> parts() const;

  KappaMonomial operator*(const KappaMonomial& other) const;
  /// Removes all copies of kappa_index, returning how many there were.
  KappaMonomial without(int index) const;

  bool operator==(const KappaMonomial&) const = default;
  /// Degree first, then more copies of the highest differing index first.
  bool operator<(const KappaMonomial& other) const;

  std::string to_string() const;

 private:
  std::array<std::uint8_t, kMaxKappa + 2> exps_;
};

/// Polynomial in kappa_{-1}, kappa_0, kappa_1, ... over the rationals.
class KappaPoly {
 public:
  using Map = std::map<KappaMonomial, Rational>;

  KappaPoly() = default;
  KappaPoly(const Rational& c);  // NOLINT: scalars embed as constants
  KappaPoly(long c) : KappaPoly(Rational(c)) {}  // NOLINT
  static KappaPoly monomial(const KappaMonomial& m, const Rational& c = 1);
  static KappaPoly kappa(int index) { return monomial(KappaMonomial::kappa(index)); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const KappaMonomial& m) const;
  /// The constant term, if the polynomial is constant.
  std::optional<Rational> as_constant() const;
  void add_term(const KappaMonomial& m, const Rational& c);

  bool is_homogeneous(int degree) const;
  /// All monomial degrees, ascending.
  std::vector<int> degrees() const;

  KappaPoly& operator+=(const KappaPoly& o);
  KappaPoly& operator-=(const KappaPoly& o);
  KappaPoly& operator*=(const Rational& c);
  KappaPoly operator-() const;
  friend KappaPoly operator+(KappaPoly a, const KappaPoly& b) { return a += b; }
  friend KappaPoly operator-(KappaPoly a, const KappaPoly& b) { return a -= b; }
  friend KappaPoly operator*(const KappaPoly& a, const KappaPoly& b);
  friend KappaPoly operator*(KappaPoly a, const Rational& c) { return a *= c; }
  friend KappaPoly operator*(const Rational& c, KappaPoly a) { return a *= c; }
  bool operator==(const KappaPoly&) const = default;

  /// Substitutes kappa_index -> value.
  KappaPoly substitute(int index, const Rational& value) const;
  /// Sets every kappa to 1.
  Rational evaluate_ones() const;
  /// "(n/d)·κ_{a}κ_{b} + ..." in basis order; "0" for zero.
  std::string to_text() const;

 private:
  Map terms_;
};

inline bool is_zero(const KappaPoly& p) { return p.is_zero(); }

/// kappa_{-1} -> 0 and kappa_0 -> 2g - 2.
KappaPoly specialize_genus(const KappaPoly& p, int g);
/// kappa_{-1} -> 0 only.
KappaPoly kill_minus_one(const KappaPoly& p);

/// Partitions of r into positive parts, each in descending order, in basis order.
std::vector<std::vector<int>> kappa_basis(int r);

/// Coefficient vector over kappa_basis(r). Requires kappa_{-1} and kappa_0 to be
/// absent and p homogeneous of degree r (throws std::invalid_argument otherwise).
std::vector<Rational> vectorize(const KappaPoly& p, int r);
KappaPoly from_vector(const std::vector<Rational>& v, int r);

}  // namespace tautring
