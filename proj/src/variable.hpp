#ifndef GKLOVERIFY_VARIABLE_HPP
#define GKLOVERIFY_VARIABLE_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace gklo {

enum class VarKind : uint8_t { X = 0, W = 1, Hbar = 2, Series = 3 };

enum class SeriesName : uint8_t { U = 0, V = 1, U1 = 2, U2 = 3 };

// A torus character variable, packed into one word.  The packing fixes the
// total variable order used for canonical scaling of linear forms and for
// monomial comparison: all x variables first (by vertex then slot), then w
// variables, then hbar, then the series variables u, v, u1, u2.
class Variable {
public:
  static Variable x(int vertex, int slot) { return make(VarKind::X, vertex, slot); }
  static Variable w(int vertex, int slot) { return make(VarKind::W, vertex, slot); }
  static Variable hbar() { return make(VarKind::Hbar, 0, 0); }
  static Variable series(SeriesName n) {
    return make(VarKind::Series, 0, static_cast<int>(n));
  }
  static Variable u() { return series(SeriesName::U); }
  static Variable v() { return series(SeriesName::V); }
  static Variable u1() { return series(SeriesName::U1); }
  static Variable u2() { return series(SeriesName::U2); }

  VarKind kind() const { return static_cast<VarKind>(code_ >> 30); }
  int vertex() const { return static_cast<int>((code_ >> 15) & 0x7fff); }
  int slot() const { return static_cast<int>(code_ & 0x7fff); }
  uint32_t hash_code() const { return code_; }

  friend std::strong_ordering operator<=>(Variable a, Variable b) = default;

  std::string str() const;

private:
  static Variable make(VarKind k, int vertex, int slot);
  uint32_t code_ = 0;
};

}  // namespace gklo

#endif
