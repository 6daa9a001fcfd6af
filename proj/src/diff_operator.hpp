#ifndef GKLOVERIFY_DIFF_OPERATOR_HPP
#define GKLOVERIFY_DIFF_OPERATOR_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "rational_function.hpp"

namespace gklo {

// Group element of the cocharacter lattice: a product of the elementary
// shifts d_{i,r} with integer exponents.  Entries are keyed by the paired
// torus variable x_{i,r}; only canonical slots (vertices of the positive
// half) appear, the negative half is normalized away at construction.
class ShiftMonomial {
public:
  using Entry = std::pair<Variable, int>;

  ShiftMonomial() = default;  // identity
  static ShiftMonomial unit(Variable xvar, int exp = 1);

  bool is_identity() const { return e_.empty(); }
  const std::vector<Entry>& entries() const { return e_; }
  int exponent_of(Variable xvar) const;

  ShiftMonomial times(const ShiftMonomial& o) const;
  ShiftMonomial inverse() const;

  friend std::strong_ordering operator<=>(const ShiftMonomial&, const ShiftMonomial&) = default;

  std::string str() const;

private:
  std::vector<Entry> e_;  // sorted by variable, nonzero exponents
};

// d_lambda conjugation on coefficients: substitutes x -> x + lambda(x)*hbar
// for every slot in the monomial's support; all other variables are inert.
RationalFunction shift_action(const ShiftMonomial& lambda, const RationalFunction& f);

// Finite sum of (rational function coefficient) * (shift monomial), with the
// product rule (f d_lambda)(g d_mu) = f * shift_action(lambda, g) * d_{lambda+mu}.
class DiffOperator {
public:
  using Term = std::pair<ShiftMonomial, RationalFunction>;

  DiffOperator() = default;  // zero
  static DiffOperator identity();
  static DiffOperator scalar(RationalFunction f);
  static DiffOperator term(ShiftMonomial m, RationalFunction f);
  static DiffOperator from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  // Coefficient at a given shift monomial (zero if absent).
  RationalFunction coefficient(const ShiftMonomial& m) const;

  DiffOperator operator-() const;
  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
  DiffOperator& operator*=(const DiffOperator& o);

  // Left multiplication by a central-or-not scalar function: f * A.
  DiffOperator scaled_left(const RationalFunction& f) const;
  DiffOperator& mul_scalar(const Rational& s);

  // Coefficient-wise substitution (inert series variables only; shifts are
  // untouched, so substituting shifted variables is the caller's business).
  DiffOperator substituted(const std::map<Variable, LinearForm>& map) const;

  bool equals(const DiffOperator& o) const;
  // Equality with a randomized refutation pre-check at the given seed; the
  // exact path still decides every answer the pre-check cannot refute.
  bool equals(const DiffOperator& o, uint64_t seed) const;

  std::string str() const;

private:
  void normalize();
  std::vector<Term> terms_;  // sorted by shift monomial, nonzero coefficients
};

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);
DiffOperator anticommutator(const DiffOperator& a, const DiffOperator& b);
inline bool op_equal(const DiffOperator& a, const DiffOperator& b) { return a.equals(b); }
// Coefficient-wise randomized separation at a common seeded point.
bool random_refutes_equal(const DiffOperator& a, const DiffOperator& b, uint64_t seed);

}  // namespace gklo

#endif
