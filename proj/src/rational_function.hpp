#ifndef GKLOVERIFY_RATIONAL_FUNCTION_HPP
#define GKLOVERIFY_RATIONAL_FUNCTION_HPP

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace gklo {

// scalar * num / prod(form^mult).  Denominator factors are monic linear forms,
// pairwise distinct; proportional factors merge their multiplicities.  Nothing
// is ever reduced to lowest terms: equality goes through a common denominator
// and an exact zero test of the combined numerator.
class RationalFunction {
public:
  struct Factor {
    LinearForm form;  // monic
    int mult;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  RationalFunction() = default;  // zero
  static RationalFunction constant(Rational c);
  static RationalFunction from_poly(Polynomial p);
  static RationalFunction from_linear(const LinearForm& f);
  static RationalFunction fraction(Polynomial num, const std::vector<LinearForm>& den);
  static RationalFunction reciprocal(const LinearForm& f);
  // scale * top / bottom, both products of linear forms
  static RationalFunction ratio(const std::vector<LinearForm>& top,
                                const std::vector<LinearForm>& bottom,
                                Rational scale = Rational(1));

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  // Numerator with the scalar folded in; requires is_polynomial().
  Polynomial as_polynomial() const;
  // The value if the function is a constant (requires is_polynomial()).
  Rational constant_value() const { return as_polynomial().constant_value(); }

  const Polynomial& numerator() const { return num_; }
  const std::vector<Factor>& denominator() const { return den_; }
  const Rational& scalar() const { return scalar_; }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& mul_scalar(const Rational& s);
  RationalFunction& mul_poly(const Polynomial& p);
  RationalFunction& div_linear(const LinearForm& f, int mult = 1);

  static RationalFunction sum(std::span<const RationalFunction> fs);

  bool equals(const RationalFunction& o) const;

  RationalFunction substituted(const std::map<Variable, LinearForm>& map) const;

  // Exact evaluation; nullopt when the point lies on a denominator factor.
  std::optional<Rational> evaluate(const std::map<Variable, Rational>& point) const;
  // Evaluation at a seeded random rational point, resampling on pole hits;
  // nullopt once the retry budget is exhausted.
  std::optional<Rational> random_eval(uint64_t seed, int retries = 8) const;

  void collect_support(std::set<Variable>& out) const;

  std::string str() const;

private:
  void canonicalize_zero();
  Rational scalar_ = 1;
  Polynomial num_;
  std::vector<Factor> den_;  // sorted by form
};

inline bool rf_equal(const RationalFunction& a, const RationalFunction& b) { return a.equals(b); }

// Point assignment derived from (seed, attempt, variable) alone, so separate
// evaluations at one seed land on one common point.
Rational seeded_point_value(uint64_t seed, int attempt, Variable v);
std::map<Variable, Rational> seeded_point(uint64_t seed, int attempt,
                                          const std::set<Variable>& support);

// True only when a clean common sample separates the two functions; a pole
// hit on every retry returns false (no verdict).
bool random_refutes(const RationalFunction& a, const RationalFunction& b, uint64_t seed,
                    int retries = 8);

}  // namespace gklo

#endif
