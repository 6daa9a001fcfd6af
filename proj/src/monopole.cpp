#include "monopole.hpp"

namespace gklo {

namespace {

const Rational kHalf(1, 2);
const Rational kThreeHalves(3, 2);

LinearForm half_hbar() { return hbar_times(kHalf); }

}  // namespace

Dressing dressing_one() {
  return [](const LinearForm&) { return Polynomial::constant(Rational(1)); };
}

Dressing dressing_minus_shifted_power(int m) {
  return [m](const LinearForm& x) {
    return Polynomial::from_linear(-x - half_hbar()).pow(m);
  };
}

Dressing dressing_plus_shifted_power(int m) {
  return [m](const LinearForm& x) {
    return Polynomial::from_linear(x + half_hbar()).pow(m);
  };
}

DiffOperator closed_form_plus(const GkloContext& ctx, int i, const Dressing& f) {
  if (!ctx.quiver().in_q0_plus(i))
    throw IndexError("plus-coweight monopole needs a positive-half vertex");
  const Quiver& q = ctx.quiver();
  int ti = ctx.tau(i);
  DiffOperator out;
  for (int r = 1; r <= ctx.v(i); ++r) {
    LinearForm xr = ctx.x(i, r);
    Polynomial num = f(xr);
    for (size_t h = 0; h < q.edges().size(); ++h) {
      const Edge& e = q.edges()[h];
      if (e.source != i) continue;
      if (q.edge_is_tau_fixed(static_cast<int>(h))) {
        num.mul_scalar(Rational(sign_pow(ctx.v(i) - 1)));
        num *= Polynomial::from_linear(xr.scaled(Rational(2)) + hbar_times(kThreeHalves));
        num *= ctx.v_poly(e.target, xr + half_hbar());
      } else {
        num.mul_scalar(Rational(sign_pow(ctx.v(e.target))));
        num *= ctx.v_poly(e.target, xr + half_hbar());
      }
    }
    num *= ctx.w_poly(ti, ctx.x(ti, r) - half_hbar());
    RationalFunction coeff = RationalFunction::from_poly(std::move(num));
    for (const LinearForm& g : ctx.v_punctured_factors(i, r, xr)) coeff.div_linear(g);
    out += DiffOperator::term(ctx.shift(i, r), std::move(coeff));
  }
  return out;
}

DiffOperator closed_form_minus(const GkloContext& ctx, int i, const Dressing& f) {
  if (!ctx.quiver().in_q0_plus(i))
    throw IndexError("minus-coweight monopole needs a positive-half vertex");
  const Quiver& q = ctx.quiver();
  int ti = ctx.tau(i);
  DiffOperator out;
  for (int r = 1; r <= ctx.v(i); ++r) {
    LinearForm xr = ctx.x(i, r);
    LinearForm xtr = ctx.x(ti, r);
    Polynomial num = f(xr - hbar_times(Rational(1)));
    for (size_t h = 0; h < q.edges().size(); ++h) {
      const Edge& e = q.edges()[h];
      bool fixed = q.edge_is_tau_fixed(static_cast<int>(h));
      if (!fixed && e.source == ti) {
        num.mul_scalar(Rational(sign_pow(ctx.v(e.target))));
        num *= ctx.v_poly(e.target, xtr + half_hbar());
      } else if (fixed && e.target == i) {
        num.mul_scalar(Rational(sign_pow(ctx.v(i))));
        num *= Polynomial::from_linear(xr.scaled(Rational(2)) - hbar_times(kThreeHalves));
        num *= ctx.v_poly(i, xtr + half_hbar());
      }
    }
    num *= ctx.w_poly(i, xr - half_hbar());
    RationalFunction coeff = RationalFunction::from_poly(std::move(num));
    coeff.mul_scalar(Rational(sign_pow(ctx.v(i) - 1)));  // denominator sign
    for (const LinearForm& g : ctx.v_punctured_factors(i, r, xr)) coeff.div_linear(g);
    out += DiffOperator::term(ctx.shift(i, r, -1), std::move(coeff));
  }
  return out;
}

std::vector<WeightDatum> matter_weights(const GkloContext& ctx) {
  const Quiver& q = ctx.quiver();
  std::vector<WeightDatum> out;
  for (size_t h = 0; h < q.edges().size(); ++h) {
    const Edge& e = q.edges()[h];
    if (q.edge_is_tau_fixed(static_cast<int>(h))) {
      // S^2 of the target fiber, matter-twisted by hbar/2
      for (int a = 1; a <= ctx.v(e.target); ++a)
        for (int b = a; b <= ctx.v(e.target); ++b)
          out.push_back({ctx.x(e.target, a) + ctx.x(e.target, b) + half_hbar(),
                         WeightDatum::Origin::SymmetricSquare});
    } else if (q.in_q1_plus(static_cast<int>(h))) {
      for (int a = 1; a <= ctx.v(e.source); ++a)
        for (int b = 1; b <= ctx.v(e.target); ++b)
          out.push_back({ctx.x(e.target, b) - ctx.x(e.source, a) + half_hbar(),
                         WeightDatum::Origin::Edge});
    }
  }
  for (int i : q.vertices())
    for (int a = 1; a <= ctx.v(i); ++a)
      for (int k = 1; k <= ctx.w(i); ++k)
        out.push_back({ctx.x(i, a) - lf(ctx.w_var(i, k)) + half_hbar(),
                       WeightDatum::Origin::Framing});
  return out;
}

EulerConvention frozen_convention() { return EulerConvention{Rational(0), true}; }

std::vector<EulerConvention> convention_family() {
  std::vector<EulerConvention> fam;
  for (long num : {0L, 1L, -1L, 2L, -2L})
    for (bool pos : {true, false}) fam.push_back({Rational(num, 2), pos});
  return fam;
}

DiffOperator euler_oracle(const GkloContext& ctx, int i, bool plus_coweight, const Dressing& f,
                          const EulerConvention& conv) {
  if (!ctx.quiver().in_q0_plus(i))
    throw IndexError("euler_oracle needs a positive-half vertex");
  std::vector<WeightDatum> weights = matter_weights(ctx);
  DiffOperator out;
  for (int r = 1; r <= ctx.v(i); ++r) {
    Variable xvar = Variable::x(i, r);
    int lambda_sign = plus_coweight ? 1 : -1;
    // matter Euler factor: for each weight with <mu, lambda> < 0, the product
    // of mu + (k + offset) hbar over the negative loop degrees k
    Polynomial num = f(plus_coweight ? ctx.x(i, r) : ctx.x(i, r) - hbar_times(Rational(1)));
    for (const WeightDatum& wd : weights) {
      int pairing = lambda_sign * static_cast<int>(wd.form.coeff_of(xvar).get_num().get_si());
      for (int k = pairing; k < 0; ++k)
        num *= Polynomial::from_linear(wd.form + hbar_times(Rational(k) + conv.matter_offset));
    }
    // tangent Euler factor: roots of the gauge group with the chosen sign of
    // pairing against the coweight
    RationalFunction coeff = RationalFunction::from_poly(std::move(num));
    for (int s = 1; s <= ctx.v(i); ++s) {
      if (s == r) continue;
      LinearForm root = ctx.x(i, r) - ctx.x(i, s);  // pairs to +1 with e_{i,r}
      if (lambda_sign < 0) root = -root;
      if (!conv.tangent_positive) root = -root;
      coeff.div_linear(root);
    }
    out += DiffOperator::term(ctx.shift(i, r, lambda_sign), std::move(coeff));
  }
  return out;
}

EulerConvention pin_convention(const GkloContext& ctx) {
  std::vector<int> plus = ctx.quiver().q0_plus();
  for (const EulerConvention& conv : convention_family()) {
    bool ok = true;
    for (int i : plus) {
      if (!euler_oracle(ctx, i, true, dressing_one(), conv)
               .equals(closed_form_plus(ctx, i, dressing_one())) ||
          !euler_oracle(ctx, i, false, dressing_one(), conv)
               .equals(closed_form_minus(ctx, i, dressing_one()))) {
        ok = false;
        break;
      }
    }
    if (ok) return conv;
  }
  throw ConventionUnresolved(
      "no Euler-class offset convention in the candidate family matches the closed forms");
}

Rational b_image_sign(const GkloContext& ctx, int i) {
  const Quiver& q = ctx.quiver();
  int exponent = 1;
  for (size_t h = 0; h < q.edges().size(); ++h) {
    const Edge& e = q.edges()[h];
    if (e.source != i) continue;
    if (q.edge_is_tau_fixed(static_cast<int>(h)))
      exponent += ctx.v(i) - 1;
    else
      exponent += ctx.v(e.target);
  }
  return Rational(sign_pow(exponent));
}

}  // namespace gklo
