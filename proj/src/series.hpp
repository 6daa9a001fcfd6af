#ifndef GKLOVERIFY_SERIES_HPP
#define GKLOVERIFY_SERIES_HPP

#include "diff_operator.hpp"
#include "rational_function.hpp"

namespace gklo {

// Pole data of a rational function in one designated variable.  Every
// denominator factor is globally linear, so each factor involving the
// variable is automatically degree one in it.
struct PoleProfile {
  struct Pole {
    LinearForm root;     // in the remaining variables
    int mult;            // multiplicity of the factor
    Rational lead;       // coefficient of var in the (monic) factor
  };
  Variable var;
  std::vector<Pole> poles;
};

PoleProfile pole_profile(const RationalFunction& f, Variable var);

// Residue at a simple pole var = root.  Errors: NotAPole, RepeatedPole.
RationalFunction residue_at(const RationalFunction& f, Variable var, const LinearForm& root);

// Projection onto strictly negative powers of var, computed as the sum of
// residue terms over the simple poles.  Requires all poles in var simple.
RationalFunction truncate(const RationalFunction& f, Variable var);
DiffOperator truncate(const DiffOperator& op, Variable var);

// Coefficient of var^k in the expansion at var = infinity, by long division
// of the numerator by the denominator's var-part (poles of any multiplicity).
RationalFunction laurent_coeff_at_infinity(const RationalFunction& f, Variable var, int k);

// Coefficient of var^{-m-1}, m >= 0 (the mode-extraction convention).
RationalFunction series_coeff_at_infinity(const RationalFunction& f, Variable var, int m);
DiffOperator series_coeff_at_infinity(const DiffOperator& op, Variable var, int m);

}  // namespace gklo

#endif
