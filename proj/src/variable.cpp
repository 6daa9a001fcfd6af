#include "variable.hpp"

#include <stdexcept>

namespace gklo {

Variable Variable::make(VarKind k, int vertex, int slot) {
  if (vertex < 0 || vertex >= (1 << 15) || slot < 0 || slot >= (1 << 15))
    throw std::out_of_range("variable index out of range");
  Variable v;
  v.code_ = (static_cast<uint32_t>(k) << 30) |
            (static_cast<uint32_t>(vertex) << 15) | static_cast<uint32_t>(slot);
  return v;
}

std::string Variable::str() const {
  switch (kind()) {
    case VarKind::X:
      return "x[" + std::to_string(vertex()) + "," + std::to_string(slot()) + "]";
    case VarKind::W:
      return "w[" + std::to_string(vertex()) + "," + std::to_string(slot()) + "]";
    case VarKind::Hbar:
      return "hbar";
    case VarKind::Series:
      switch (static_cast<SeriesName>(slot())) {
        case SeriesName::U: return "u";
        case SeriesName::V: return "v";
        case SeriesName::U1: return "u1";
        case SeriesName::U2: return "u2";
      }
  }
  return "?";
}

}  // namespace gklo
