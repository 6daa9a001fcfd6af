#ifndef GKLOVERIFY_POLYNOMIAL_HPP
#define GKLOVERIFY_POLYNOMIAL_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linear_form.hpp"
#include "rational.hpp"
#include "variable.hpp"

namespace gklo {

class Monomial {
public:
  using Entry = std::pair<Variable, int>;

  Monomial() = default;
  static Monomial var(Variable v, int exp = 1);

  bool is_one() const { return e_.empty(); }
  int total_degree() const;
  int degree_in(Variable v) const;
  const std::vector<Entry>& entries() const { return e_; }

  Monomial times(const Monomial& o) const;
  // Factors this as var^k * rest; returns (k, rest).
  std::pair<int, Monomial> split(Variable v) const;

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) = default;

  std::string str() const;

private:
  std::vector<Entry> e_;  // sorted by variable, exponents > 0
};

// Exact multivariate polynomial over the rationals, kept as sorted sparse
// terms.  Addition is a linear merge; multiplication expands, sorts and folds.
class Polynomial {
public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  static Polynomial constant(Rational c);
  static Polynomial variable(Variable v);
  static Polynomial from_linear(const LinearForm& f);
  static Polynomial from_terms(std::vector<Term> terms);  // sorts and merges

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The value if constant (including zero); throws otherwise.
  Rational constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  int total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& mul_scalar(const Rational& s);
  Polynomial& mul_monomial(const Monomial& m);
  Polynomial pow(int e) const;

  int degree_in(Variable v) const;  // -1 for the zero polynomial
  // Polynomial coefficients of powers of v (only nonzero entries present).
  std::map<int, Polynomial> coefficients_in(Variable v) const;
  bool depends_on(Variable v) const { return degree_in(v) > 0; }

  Polynomial substituted(const std::map<Variable, LinearForm>& map) const;
  Rational evaluate(const std::map<Variable, Rational>& point) const;
  void collect_support(std::set<Variable>& out) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string str() const;

private:
  void normalize();  // sort + fold (on raw term list)
  std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
};

// Product of a list of linear forms, expanded.
Polynomial expand_product(const std::vector<LinearForm>& forms);

}  // namespace gklo

#endif
