#ifndef GKLOVERIFY_RATIONAL_HPP
#define GKLOVERIFY_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gklo {

// Exact arbitrary-precision rational, the coefficient domain of everything.
using Rational = mpq_class;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SubstitutionDegenerate : public Error {
public:
  using Error::Error;
};

class RepeatedPole : public Error {
public:
  using Error::Error;
};

// Denominator factors are linear forms by construction, so this cannot fire
// from within the library; it is kept so callers can catch one error family.
class NonLinearPole : public Error {
public:
  using Error::Error;
};

class NotAPole : public Error {
public:
  using Error::Error;
};

class CoefficientNotPolynomial : public Error {
public:
  using Error::Error;
};

class NoScalarRelation : public Error {
public:
  using Error::Error;
};

class ConventionUnresolved : public Error {
public:
  using Error::Error;
};

class IndexError : public Error {
public:
  using Error::Error;
};

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational pow_rational(const Rational& base, int exp) {
  if (exp == 0) return Rational(1);
  Rational b = exp > 0 ? base : Rational(1) / base;
  int e = exp > 0 ? exp : -exp;
  Rational acc(1);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline int sign_pow(long exp) { return (exp % 2 == 0) ? 1 : -1; }

std::string rational_str(const Rational& r);

}  // namespace gklo

#endif
