#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace tautring {

enum class VarKind : std::uint8_t { T, X, U, Y, Z, P, Zij };

/// A series variable from the fixed alphabet {t, x, u, y, z} ∪ {p_i} ∪ {z_{i,j}}.
class VariableId {
 public:
  static VariableId t() { return {VarKind::T, 0, 0}; }
  static VariableId x() { return {VarKind::X, 0, 0}; }
  static VariableId u() { return {VarKind::U, 0, 0}; }
  static VariableId y() { return {VarKind::Y, 0, 0}; }
  static VariableId z() { return {VarKind::Z, 0, 0}; }
  /// p_i, i >= 1.
  static VariableId p(int i);
  /// z_{i,j}, i >= 1 and j >= i - 1.
  static VariableId zij(int i, int j);

  VarKind kind() const { return kind_; }
  int i() const { return i_; }
  int j() const { return j_; }
  std::string name() const;

  auto operator<=>(const VariableId&) const = default;

 private:
  VariableId(VarKind kind, int i, int j) : kind_(kind), i_(i), j_(j) {}

  VarKind kind_;
  int i_;
  int j_;
};

}  // namespace tautring
