#include "tautring/variable.hpp"

#include <stdexcept>

namespace tautring {

VariableId VariableId::p(int i) {
  if (i < 1) throw std::invalid_argument("p_i requires i >= 1");
  return {VarKind::P, i, 0};
}

VariableId VariableId::zij(int i, int j) {
  if (i < 1 || j < i - 1) {
    throw std::invalid_argument("z_{i,j} requires i >= 1 and j >= i - 1");
  }
  return {VarKind::Zij, i, j};
}

std::string VariableId::name() const {
  switch (kind_) {
    case VarKind::T: return "t";
    case VarKind::X: return "x";
    case VarKind::U: return "u";
    case VarKind::Y: return "y";
    case VarKind::Z: return "z";
    case VarKind::P: return "p" + std::to_string(i_);
    case VarKind::Zij: return "z_{" + std::to_string(i_) + "," + std::to_string(j_) + "}";
  }
  return "?";
}

}  // namespace tautring
