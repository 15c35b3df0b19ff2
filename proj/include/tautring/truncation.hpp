#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tautring/rational.hpp"
#include "tautring/variable.hpp"

namespace tautring {

inline constexpr std::size_t kMaxVars = 16;

/// Raw exponent vector, aligned with the variables of a TruncationSpec.
using Exponents = std::array<std::int16_t, kMaxVars>;

/// Orders by total degree first, then lexicographically.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Describes which coefficients of a series are exact.
///
/// Every variable carries an upper exponent bound. At most one variable may be
/// Laurent: its exponent may go negative, but never below minus the exponent of
/// its partner variable (in practice t with partner x: the x^d slice has pole
/// order at most d). For the Laurent variable the upper bound applies to the
/// shifted exponent e_t + e_x. With this convention every admissible region is
/// downward closed in shifted coordinates, so products truncate exactly.
///
/// Optional linear caps sum(w_v * e_v) <= bound (w_v >= 0) bound weighted
/// degrees, e.g. |sigma| over a set of p-variables.
class TruncationSpec {
 public:
  TruncationSpec() = default;

  /// Adds a variable with upper bound `hi` (keeps variables sorted).
  TruncationSpec& add(VariableId v, int hi);
  /// Marks `v` as the Laurent variable with pole order tied to `partner`.
  TruncationSpec& laurent(VariableId v, VariableId partner);
  /// Adds sum(w * e) <= bound over the listed variables.
  TruncationSpec& cap(const std::vector<std::pair<VariableId, int>>& weights, int bound);

  std::size_t size() const { return vars_.size(); }
  const VariableId& var(std::size_t k) const { return vars_[k]; }
  const std::vector<VariableId>& vars() const { return vars_; }
  std::optional<std::size_t> index_of(const VariableId& v) const;
  std::size_t require_index(const VariableId& v) const;
  int hi(std::size_t k) const { return hi_[k]; }
  bool has_laurent() const { return laurent_ >= 0; }
  bool is_laurent(std::size_t k) const { return laurent_ == static_cast<int>(k); }
  bool is_laurent_partner(std::size_t k) const { return partner_ == static_cast<int>(k); }
  std::optional<std::size_t> laurent_index() const;

  /// e_k, shifted by the partner exponent when k is the Laurent variable.
  int shifted(const Exponents& e, std::size_t k) const;
  /// Lower-bound invariant: non-negative exponents, bounded pole order.
  bool lower_ok(const Exponents& e) const;
  /// Inside the exact region (assumes lower_ok).
  bool admits(const Exponents& e) const;
  /// Sum of shifted exponents; positive for every non-constant admissible monomial.
  int degree(const Exponents& e) const;
  int max_degree() const;

  /// Variables = union; constraints = all constraints of both (exactness of a
  /// product needs both factors exact).
  static TruncationSpec intersect(const TruncationSpec& a, const TruncationSpec& b);

  /// True if every monomial admitted by `other` is admitted here. Conservative.
  bool covers(const TruncationSpec& other) const;

  /// Maps exponents laid out for `from` into this spec. Returns nullopt if a
  /// variable of `from` with nonzero exponent is absent here.
  std::optional<Exponents> embed(const Exponents& e, const TruncationSpec& from) const;

  Exponents exponents(std::initializer_list<std::pair<VariableId, int>> parts) const;

  /// Region of the v^k slice with v removed. Throws for the Laurent variable or
  /// its partner, and OutOfSpec when k lies outside the region.
  TruncationSpec without(VariableId v, int k) const;
  /// Same region with variable `from` renamed to `to` (which must be absent).
  TruncationSpec renamed(VariableId from, VariableId to) const;
  /// Region of exact coefficients after multiplying by v^k (k may be negative
  /// for division or differentiation).
  TruncationSpec shifted_by(VariableId v, int k) const;

  bool operator==(const TruncationSpec& other) const = default;

 private:
  struct Cap {
    std::vector<int> weights;
    int bound;
    bool operator==(const Cap&) const = default;
  };

  std::vector<VariableId> vars_;
  std::vector<int> hi_;
  int laurent_ = -1;
  int partner_ = -1;
  std::vector<Cap> caps_;
};

}  // namespace tautring
