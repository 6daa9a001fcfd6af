#ifndef GKLOVERIFY_LINEAR_FORM_HPP
#define GKLOVERIFY_LINEAR_FORM_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "variable.hpp"

namespace gklo {

// Degree-one expression c0 + sum c_v * v.  These are the only objects allowed
// as denominator factors; pole identity is decided by monic normalization.
class LinearForm {
public:
  using Coeff = std::pair<Variable, Rational>;

  LinearForm() = default;
  static LinearForm constant(Rational c);
  static LinearForm variable(Variable v);

  bool is_zero() const { return coeffs_.empty() && constant_ == 0; }
  bool is_constant() const { return coeffs_.empty(); }
  const Rational& constant_term() const { return constant_; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  // Coefficient of a variable (0 if absent).
  Rational coeff_of(Variable v) const;

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  LinearForm operator-() const { return scaled(Rational(-1)); }
  LinearForm scaled(const Rational& s) const;
  LinearForm& add_term(Variable v, const Rational& c);
  LinearForm& add_constant(const Rational& c);

  // Leading coefficient in the fixed variable order (constant term for a
  // constant form).
  const Rational& leading_coeff() const;

  // Splits into (monic form, scale) with *this == scale * monic.
  // Requires a non-constant form.
  std::pair<LinearForm, Rational> monic() const;

  LinearForm substituted(const std::map<Variable, LinearForm>& map) const;
  Rational evaluate(const std::map<Variable, Rational>& point) const;

  friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b);
  friend bool operator==(const LinearForm& a, const LinearForm& b) = default;

  std::string str() const;

private:
  Rational constant_ = 0;
  std::vector<Coeff> coeffs_;  // sorted by variable, nonzero coefficients
};

inline LinearForm operator*(const LinearForm& f, const Rational& s) { return f.scaled(s); }
inline LinearForm operator*(const Rational& s, const LinearForm& f) { return f.scaled(s); }

// Convenience builders used throughout the operator constructions.
inline LinearForm lf(Variable v) { return LinearForm::variable(v); }
inline LinearForm lf(const Rational& c) { return LinearForm::constant(c); }
inline LinearForm lf(long c) { return LinearForm::constant(Rational(c)); }
inline LinearForm hbar_times(const Rational& c) {
  return LinearForm::variable(Variable::hbar()).scaled(c);
}

}  // namespace gklo

#endif
