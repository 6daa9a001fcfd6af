#include "gklo.hpp"

#include <algorithm>

namespace gklo {

namespace {

const Rational kHalf(1, 2);
const Rational kThreeHalves(3, 2);

LinearForm half_hbar() { return hbar_times(kHalf); }

}  // namespace

GkloContext::GkloContext(Quiver q, DimensionData d, Perturbation pert)
    : quiver_(std::move(q)), dims_(std::move(d)), cartan_(quiver_, dims_), pert_(pert) {}

void GkloContext::check_vertex(int i) const {
  if (!quiver_.has_vertex(i)) throw IndexError("unknown vertex " + std::to_string(i));
}

void GkloContext::check_slot(int i, int r) const {
  check_vertex(i);
  if (r < 1 || r > v(i))
    throw IndexError("slot " + std::to_string(r) + " out of range at vertex " +
                     std::to_string(i));
}

LinearForm GkloContext::x(int i, int r) const {
  check_slot(i, r);
  if (quiver_.in_q0_plus(i)) return LinearForm::variable(Variable::x(i, r));
  LinearForm base = LinearForm::variable(Variable::x(quiver_.tau(i), r));
  if (pert_ == Perturbation::FlipXSign) return base;
  return -base;
}

Variable GkloContext::w_var(int i, int k) const {
  check_vertex(i);
  if (k < 1 || k > w(i)) throw IndexError("framing slot out of range");
  return Variable::w(i, k);
}

ShiftMonomial GkloContext::shift(int i, int r, int exp) const {
  check_slot(i, r);
  if (quiver_.in_q0_plus(i)) return ShiftMonomial::unit(Variable::x(i, r), exp);
  return ShiftMonomial::unit(Variable::x(quiver_.tau(i), r), -exp);
}

std::vector<LinearForm> GkloContext::v_factors(int i, const LinearForm& z) const {
  check_vertex(i);
  std::vector<LinearForm> out;
  out.reserve(v(i));
  for (int k = 1; k <= v(i); ++k) out.push_back(z - x(i, k));
  return out;
}

std::vector<LinearForm> GkloContext::v_punctured_factors(int i, int r, const LinearForm& z) const {
  check_slot(i, r);
  std::vector<LinearForm> out;
  out.reserve(v(i) - 1);
  for (int k = 1; k <= v(i); ++k)
    if (k != r) out.push_back(z - x(i, k));
  return out;
}

std::vector<LinearForm> GkloContext::w_factors(int i, const LinearForm& z) const {
  check_vertex(i);
  std::vector<LinearForm> out;
  out.reserve(w(i));
  for (int k = 1; k <= w(i); ++k) out.push_back(z - lf(w_var(i, k)));
  return out;
}

GkloFamily::GkloFamily(Quiver q, DimensionData d, Perturbation pert, int max_mode)
    : ctx_(std::move(q), std::move(d), pert), max_mode_(std::max(max_mode, 0)) {
  const Quiver& quiver = ctx_.quiver();
  for (int i : quiver.vertices()) {
    for (int r = 1; r <= ctx_.v(i); ++r) y_.emplace(std::pair(i, r), build_y(i, r));
    h_u_.emplace(i, h_at_u(i));
  }
  // Mode caches.  Checks reach B modes up to max_mode+2 (mode-form relations
  // shift indices by two) and H modes up to 2*max_mode+1.
  for (int i : quiver.vertices()) {
    DiffOperator b = B(i, Variable::u());
    for (int m = 0; m <= max_mode_ + 2; ++m)
      b_modes_.emplace(std::pair(i, m), series_coeff_at_infinity(b, Variable::u(), m));
    int mu = ctx_.cartan().mu_pairing(i);
    int lo = -mu - 3;
    int hi = std::max(mu + 5, 2 * max_mode_ + 1);
    for (int r = lo; r <= hi; ++r) h_modes_.emplace(std::pair(i, r), H_coeff(i, r));
  }
}

DiffOperator GkloFamily::build_y(int i, int r) const {
  const Quiver& q = ctx_.quiver();
  LinearForm xr = ctx_.x(i, r);
  LinearForm arg_up = xr + half_hbar();  // x_{i,r} + hbar/2

  std::vector<LinearForm> num;
  for (size_t h = 0; h < q.edges().size(); ++h) {
    if (q.edges()[h].source != i) continue;
    if (q.edge_is_tau_fixed(static_cast<int>(h))) {
      Rational c = ctx_.perturbation() == Perturbation::TauEdgeHbar ? Rational(1) : kThreeHalves;
      num.push_back(xr.scaled(Rational(2)) + hbar_times(c));
    }
    for (const LinearForm& f : ctx_.v_factors(q.edges()[h].target, arg_up)) num.push_back(f);
  }
  for (const LinearForm& f : ctx_.w_factors(q.tau(i), -xr - half_hbar())) num.push_back(f);

  RationalFunction coeff = RationalFunction::from_poly(expand_product(num));
  for (const LinearForm& f : ctx_.v_punctured_factors(i, r, xr)) coeff.div_linear(f);
  return DiffOperator::term(ctx_.shift(i, r), std::move(coeff));
}

const DiffOperator& GkloFamily::y(int i, int r) const {
  ctx_.check_slot(i, r);
  return y_.at(std::pair(i, r));
}

DiffOperator GkloFamily::B(int i, Variable var) const {
  ctx_.check_vertex(i);
  DiffOperator out;
  for (int r = 1; r <= ctx_.v(i); ++r) {
    LinearForm pole = -lf(var) - ctx_.x(i, r) - half_hbar();
    out += y(i, r).scaled_left(RationalFunction::reciprocal(pole));
  }
  return out;
}

RationalFunction GkloFamily::h_at_u(int i) const {
  const Quiver& q = ctx_.quiver();
  int ti = ctx_.tau(i);
  LinearForm u = lf(Variable::u());

  std::vector<LinearForm> num, den;
  for (const LinearForm& f : ctx_.w_factors(i, -u)) num.push_back(f);
  for (const LinearForm& f : ctx_.w_factors(ti, u)) num.push_back(f);
  for (const Edge& e : q.edges()) {
    if (e.source == i)
      for (const LinearForm& f : ctx_.v_factors(e.target, -u)) num.push_back(f);
    if (e.source == ti)
      for (const LinearForm& f : ctx_.v_factors(e.target, u)) num.push_back(f);
  }
  for (const LinearForm& f : ctx_.v_factors(i, -u + half_hbar())) den.push_back(f);
  for (const LinearForm& f : ctx_.v_factors(i, -u - half_hbar())) den.push_back(f);

  int c = ctx_.cartan().c(i, ti);
  if (c == -1 && ctx_.perturbation() != Perturbation::DropHPrefactor) {
    num.push_back(u.scaled(Rational(2)) - half_hbar());
    num.push_back(u.scaled(Rational(2)) + half_hbar());
    den.push_back(u.scaled(Rational(2)));
  }

  int exponent = ctx_.v(i) - 1 + ctx_.cartan().delta_arrow(i);
  RationalFunction out = RationalFunction::from_poly(expand_product(num));
  out.mul_scalar(Rational(sign_pow(exponent)));
  for (const LinearForm& f : den) out.div_linear(f);
  return out;
}

RationalFunction GkloFamily::H(int i, Variable var) const {
  ctx_.check_vertex(i);
  const RationalFunction& at_u = h_u_.at(i);
  if (var == Variable::u()) return at_u;
  return at_u.substituted({{Variable::u(), lf(var)}});
}

DiffOperator GkloFamily::B_coeff(int i, int m) const {
  if (m < 0) throw IndexError("B mode index must be nonnegative");
  auto it = b_modes_.find(std::pair(i, m));
  if (it != b_modes_.end()) return it->second;
  return series_coeff_at_infinity(B(i, Variable::u()), Variable::u(), m);
}

RationalFunction GkloFamily::H_coeff(int i, int r) const {
  auto it = h_modes_.find(std::pair(i, r));
  if (it != h_modes_.end()) return it->second;
  int mu = ctx_.cartan().mu_pairing(i);
  if (r < -mu - 1) return RationalFunction();
  RationalFunction c = laurent_coeff_at_infinity(H(i, Variable::u()), Variable::u(), -r - 1);
  if (!c.is_polynomial())
    throw CoefficientNotPolynomial("H mode (" + std::to_string(i) + "," + std::to_string(r) +
                                   ") is not polynomial");
  return c;
}

RationalFunction GkloFamily::C_coeff(int i, int j, int r, int s) const {
  ctx_.check_slot(i, r);
  ctx_.check_slot(j, s);
  int ti = ctx_.tau(i);
  if (j == i && s == r) return RationalFunction::constant(Rational(1));
  LinearForm hb = hbar_times(Rational(1));
  if (j == i) {
    LinearForm diff = ctx_.x(i, r) - ctx_.x(i, s);
    return RationalFunction::ratio({diff + hb}, {diff - hb});
  }
  if (j == ti && s == r)
    throw NoScalarRelation("no scalar relation between y at slot (" + std::to_string(i) + "," +
                           std::to_string(r) + ") and its involute");
  if (j == ti) {
    if (ctx_.cartan().c(i, ti) == 0) return RationalFunction::constant(Rational(1));
    LinearForm sum = ctx_.x(i, r) + ctx_.x(i, s);
    return RationalFunction::ratio({sum - half_hbar()}, {sum + half_hbar()});
  }
  if (ctx_.cartan().c(i, j) == 0) return RationalFunction::constant(Rational(1));
  LinearForm diff = ctx_.x(i, r) - ctx_.x(j, s);
  return RationalFunction::ratio({diff - half_hbar()}, {diff + half_hbar()});
}

RationalFunction GkloFamily::C_unified(int i, int j, int r, int s) const {
  Rational chalf = Rational(ctx_.cartan().c(i, j)) / 2;
  LinearForm diff = ctx_.x(i, r) - ctx_.x(j, s);
  return RationalFunction::ratio({diff + hbar_times(chalf)}, {diff - hbar_times(chalf)});
}

RationalFunction GkloFamily::D_coeff(int i, int j, int s, Variable var) const {
  ctx_.check_vertex(i);
  ctx_.check_slot(j, s);
  Rational cij(ctx_.cartan().c(i, j));
  Rational ctj(ctx_.cartan().c(ctx_.tau(i), j));
  LinearForm u = lf(var);
  LinearForm xs = ctx_.x(j, s);
  return RationalFunction::ratio(
      {u + xs + hbar_times((1 - cij) / 2), u - xs - hbar_times((1 - ctj) / 2)},
      {u + xs + hbar_times((1 + cij) / 2), u - xs - hbar_times((1 + ctj) / 2)});
}

RationalFunction GkloFamily::D_table(int i, int j, int s, Variable var) const {
  int ti = ctx_.tau(i);
  LinearForm u = lf(var);
  LinearForm hb = hbar_times(Rational(1));
  int c = ctx_.cartan().c(i, ti);
  if (j == i) {
    LinearForm xs = ctx_.x(i, s);
    RationalFunction out =
        RationalFunction::ratio({u + xs - half_hbar()}, {u + xs + hbar_times(kThreeHalves)});
    if (c == -1) out *= RationalFunction::ratio({u - xs - hb}, {u - xs});
    return out;
  }
  if (j == ti) {
    LinearForm xs = ctx_.x(i, s);
    RationalFunction out =
        RationalFunction::ratio({u + xs + half_hbar()}, {u + xs - hbar_times(kThreeHalves)});
    if (c == -1) out *= RationalFunction::ratio({u - xs + hb}, {u - xs});
    return out;
  }
  LinearForm xs = ctx_.x(j, s);
  RationalFunction out = RationalFunction::constant(Rational(1));
  if (ctx_.cartan().c(i, j) == -1) out *= RationalFunction::ratio({u + xs + hb}, {u + xs});
  if (ctx_.cartan().c(ti, j) == -1) out *= RationalFunction::ratio({u - xs - hb}, {u - xs});
  return out;
}

DiffOperator GkloFamily::H_residue(int i, int r, bool minus_side) const {
  ctx_.check_slot(i, r);
  int ti = ctx_.tau(i);
  int c = ctx_.cartan().c(i, ti);
  LinearForm m2x = ctx_.x(i, r).scaled(Rational(-2));
  RationalFunction coeff = RationalFunction::reciprocal(hbar_times(Rational(1)));
  if (minus_side) {
    coeff.mul_scalar(Rational(-1));
    if (c == -1)
      coeff *= RationalFunction::ratio({m2x - half_hbar()}, {m2x - hbar_times(Rational(1))});
    return (y(i, r) * y(ti, r)).scaled_left(coeff);
  }
  if (c == -1)
    coeff *= RationalFunction::ratio({m2x + half_hbar()}, {m2x + hbar_times(Rational(1))});
  return (y(ti, r) * y(i, r)).scaled_left(coeff);
}

DiffOperator GkloFamily::H_special(int i, int r) const {
  ctx_.check_slot(i, r);
  int ti = ctx_.tau(i);
  if (ctx_.cartan().c(i, ti) != -1)
    throw Error("H_special requires c_{i,tau i} = -1 at vertex " + std::to_string(i));
  LinearForm x2 = ctx_.x(i, r).scaled(Rational(2));
  RationalFunction coeff =
      RationalFunction::ratio({x2 + hbar_times(kThreeHalves)},
                              {x2 + hbar_times(Rational(3)), hbar_times(Rational(1)),
                               hbar_times(Rational(1))},
                              kHalf);
  DiffOperator d = DiffOperator::term(ctx_.shift(i, r), RationalFunction::constant(Rational(1)));
  DiffOperator d_inv =
      DiffOperator::term(ctx_.shift(i, r, -1), RationalFunction::constant(Rational(1)));
  return (d * y(i, r) * y(ti, r) * d_inv).scaled_left(coeff);
}

DiffOperator GkloFamily::two_uH_truncated(int i, Variable var) const {
  ctx_.check_vertex(i);
  int ti = ctx_.tau(i);
  Rational chalf = Rational(ctx_.cartan().c(i, ti)) / 2;
  DiffOperator out;
  for (int r = 1; r <= ctx_.v(i); ++r) {
    LinearForm xr = ctx_.x(i, r);
    RationalFunction first = RationalFunction::ratio(
        {xr.scaled(Rational(-2)) + hbar_times(1 + chalf)}, {lf(var) + xr - half_hbar()});
    RationalFunction second = RationalFunction::ratio(
        {xr.scaled(Rational(-2)) - hbar_times(1 + chalf)}, {lf(var) + xr + half_hbar()});
    out += (y(ti, r) * y(i, r)).scaled_left(first);
    out -= (y(i, r) * y(ti, r)).scaled_left(second);
  }
  return out;
}

DiffOperator GkloFamily::y_tau_display(int i, int r) const {
  // Explicit formula for y at tau(i) written in vertex-i data; the prefactor
  // (-1)^{v_i - 1} sits in the denominator.
  ctx_.check_slot(i, r);
  const Quiver& q = ctx_.quiver();
  int ti = ctx_.tau(i);
  LinearForm xr = ctx_.x(i, r);
  LinearForm arg = -xr + half_hbar();  // -x_{i,r} + hbar/2

  std::vector<LinearForm> num;
  for (size_t h = 0; h < q.edges().size(); ++h) {
    const Edge& e = q.edges()[h];
    if (q.edge_is_tau_fixed(static_cast<int>(h)) && e.target == i) {
      num.push_back(xr.scaled(Rational(-2)) + hbar_times(kThreeHalves));
      for (const LinearForm& f : ctx_.v_factors(i, arg)) num.push_back(f);
    } else if (!q.edge_is_tau_fixed(static_cast<int>(h)) && e.source == ti) {
      for (const LinearForm& f : ctx_.v_factors(e.target, arg)) num.push_back(f);
    }
  }
  for (const LinearForm& f : ctx_.w_factors(i, xr - half_hbar())) num.push_back(f);

  RationalFunction coeff = RationalFunction::from_poly(expand_product(num));
  coeff.mul_scalar(Rational(sign_pow(ctx_.v(i) - 1)));
  for (const LinearForm& f : ctx_.v_punctured_factors(i, r, xr)) coeff.div_linear(f);
  return DiffOperator::term(ctx_.shift(i, r, -1), std::move(coeff));
}

}  // namespace gklo
