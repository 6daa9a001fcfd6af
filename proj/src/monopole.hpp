#ifndef GKLOVERIFY_MONOPOLE_HPP
#define GKLOVERIFY_MONOPOLE_HPP

#include <functional>

#include "gklo.hpp"

namespace gklo {

// Polynomial dressing in the tautological class; applied to the fiber weight.
using Dressing = std::function<Polynomial(const LinearForm&)>;

Dressing dressing_one();
// x -> (-x - hbar/2)^m and x -> (x + hbar/2)^m
Dressing dressing_minus_shifted_power(int m);
Dressing dressing_plus_shifted_power(int m);

// Closed forms of the dressed minuscule monopole operators attached to the
// coweights +e_{i,1} and -e_{i,v_i}; i must lie in the positive half.
DiffOperator closed_form_plus(const GkloContext& ctx, int i, const Dressing& f);
DiffOperator closed_form_minus(const GkloContext& ctx, int i, const Dressing& f);

// Equivariant weight of one matter line, tagged by its origin.
struct WeightDatum {
  enum class Origin { Edge, SymmetricSquare, Framing };
  LinearForm form;
  Origin origin;
};
std::vector<WeightDatum> matter_weights(const GkloContext& ctx);

// Small family of Euler-class offset conventions; the right member is pinned
// once against the closed forms on a smallest instance and then frozen.
struct EulerConvention {
  Rational matter_offset = 0;  // loop index shift in the matter factors
  bool tangent_positive = true;  // tangent roots taken positive on the coweight
  friend bool operator==(const EulerConvention&, const EulerConvention&) = default;
};
EulerConvention frozen_convention();
std::vector<EulerConvention> convention_family();

// Weight-enumeration evaluation of the monopole formula at +-e coweights.
DiffOperator euler_oracle(const GkloContext& ctx, int i, bool plus_coweight, const Dressing& f,
                          const EulerConvention& conv = frozen_convention());

// Searches the convention family for the member reproducing both closed forms
// on the given (smallest) instance; throws ConventionUnresolved when none does.
EulerConvention pin_convention(const GkloContext& ctx);

// Sign prefactor making the dressed monopoles reproduce the B modes.
Rational b_image_sign(const GkloContext& ctx, int i);

}  // namespace gklo

#endif
