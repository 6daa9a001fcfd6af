#include "series.hpp"

#include <algorithm>

namespace gklo {

namespace {

struct VarSplit {
  std::vector<RationalFunction::Factor> plain;  // factors free of var
  std::vector<PoleProfile::Pole> poles;
};

VarSplit split_by_var(const RationalFunction& f, Variable var) {
  VarSplit out;
  for (const auto& fac : f.denominator()) {
    Rational a = fac.form.coeff_of(var);
    if (a == 0) {
      out.plain.push_back(fac);
      continue;
    }
    // form = a*var + rest, root = -rest/a
    LinearForm rest = fac.form;
    rest.add_term(var, -a);
    out.poles.push_back({rest.scaled(Rational(-1) / a), fac.mult, a});
  }
  return out;
}

}  // namespace

PoleProfile pole_profile(const RationalFunction& f, Variable var) {
  PoleProfile p;
  p.var = var;
  p.poles = split_by_var(f, var).poles;
  return p;
}

RationalFunction residue_at(const RationalFunction& f, Variable var, const LinearForm& root) {
  VarSplit split = split_by_var(f, var);
  const PoleProfile::Pole* hit = nullptr;
  for (const auto& p : split.poles)
    if (p.root == root) {
      hit = &p;
      break;
    }
  if (!hit) throw NotAPole("no denominator factor of " + f.str() + " vanishes at " +
                           var.str() + " = " + root.str());
  if (hit->mult > 1)
    throw RepeatedPole("pole at " + var.str() + " = " + root.str() + " has multiplicity " +
                       std::to_string(hit->mult));

  std::map<Variable, LinearForm> at_root{{var, root}};
  RationalFunction res = RationalFunction::from_poly(f.numerator().substituted(at_root));
  res.mul_scalar(f.scalar() / hit->lead);
  for (const auto& fac : split.plain) res.div_linear(fac.form, fac.mult);
  for (const auto& p : split.poles) {
    if (&p == hit) continue;
    // (a*var + rest) at var = root
    LinearForm form_at_root = root.scaled(p.lead);
    form_at_root += p.root.scaled(-p.lead);
    res.div_linear(form_at_root, p.mult);
  }
  return res;
}

RationalFunction truncate(const RationalFunction& f, Variable var) {
  VarSplit split = split_by_var(f, var);
  for (const auto& p : split.poles)
    if (p.mult > 1)
      throw RepeatedPole("truncation requires simple poles; " + var.str() +
                         " pole of multiplicity " + std::to_string(p.mult));
  std::vector<RationalFunction> parts;
  parts.reserve(split.poles.size());
  for (const auto& p : split.poles) {
    RationalFunction res = residue_at(f, var, p.root);
    if (res.is_zero()) continue;
    LinearForm var_minus_root = LinearForm::variable(var) - p.root;
    res.div_linear(var_minus_root);
    parts.push_back(std::move(res));
  }
  return RationalFunction::sum(parts);
}

DiffOperator truncate(const DiffOperator& op, Variable var) {
  std::vector<DiffOperator::Term> terms;
  terms.reserve(op.size());
  for (const auto& [m, f] : op.terms()) terms.emplace_back(m, truncate(f, var));
  return DiffOperator::from_terms(std::move(terms));
}

RationalFunction laurent_coeff_at_infinity(const RationalFunction& f, Variable var, int k) {
  if (f.is_zero()) return RationalFunction();
  VarSplit split = split_by_var(f, var);

  // Expand the var-part of the denominator as a polynomial in var.
  Polynomial den = Polynomial::constant(Rational(1));
  for (const auto& p : split.poles) {
    LinearForm factor = LinearForm::variable(var).scaled(p.lead) + p.root.scaled(-p.lead);
    for (int t = 0; t < p.mult; ++t) den *= Polynomial::from_linear(factor);
  }

  std::map<int, Polynomial> n_coeffs = f.numerator().coefficients_in(var);
  std::map<int, Polynomial> d_coeffs = den.coefficients_in(var);
  int e = n_coeffs.empty() ? 0 : n_coeffs.rbegin()->first;
  int d = d_coeffs.empty() ? 0 : d_coeffs.rbegin()->first;

  // f = scalar/plain * N/D with N = sum n_j var^j, D = sum D_j var^j, and the
  // leading D_d a nonzero rational.  The Laurent expansion at infinity is
  // sum_{t>=0} a_t var^{e-d-t} with
  //   a_t = (n_{e-t} - sum_{p=1..t} D_{d-p} a_{t-p}) / D_d.
  int t_target = e - d - k;
  if (t_target < 0) return RationalFunction();

  Rational lead = d_coeffs.empty() ? Rational(1) : d_coeffs[d].constant_value();
  if (lead == 0) throw Error("laurent_coeff: zero leading denominator coefficient");

  auto n_at = [&](int j) -> Polynomial {
    auto it = n_coeffs.find(j);
    return it == n_coeffs.end() ? Polynomial() : it->second;
  };
  auto d_at = [&](int j) -> Polynomial {
    auto it = d_coeffs.find(j);
    return it == d_coeffs.end() ? Polynomial() : it->second;
  };

  std::vector<Polynomial> a;
  a.reserve(t_target + 1);
  for (int t = 0; t <= t_target; ++t) {
    Polynomial acc = n_at(e - t);
    for (int p = 1; p <= std::min(t, d); ++p) acc -= d_at(d - p) * a[t - p];
    acc.mul_scalar(Rational(1) / lead);
    a.push_back(std::move(acc));
  }

  RationalFunction out = RationalFunction::from_poly(std::move(a.back()));
  out.mul_scalar(f.scalar());
  for (const auto& fac : split.plain) out.div_linear(fac.form, fac.mult);
  return out;
}

RationalFunction series_coeff_at_infinity(const RationalFunction& f, Variable var, int m) {
  if (m < 0) throw Error("series_coeff_at_infinity: mode index must be nonnegative");
  return laurent_coeff_at_infinity(f, var, -m - 1);
}

DiffOperator series_coeff_at_infinity(const DiffOperator& op, Variable var, int m) {
  std::vector<DiffOperator::Term> terms;
  terms.reserve(op.size());
  for (const auto& [sm, f] : op.terms())
    terms.emplace_back(sm, series_coeff_at_infinity(f, var, m));
  return DiffOperator::from_terms(std::move(terms));
}

}  // namespace gklo
