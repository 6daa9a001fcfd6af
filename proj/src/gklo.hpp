#ifndef GKLOVERIFY_GKLO_HPP
#define GKLOVERIFY_GKLO_HPP

#include <map>
#include <vector>

#include "diff_operator.hpp"
#include "quiver.hpp"
#include "series.hpp"

namespace gklo {

// Single-constant mutations used as negative controls: each one must break
// at least one relation check.
enum class Perturbation {
  None,
  TauEdgeHbar,      // 3/2 hbar -> hbar in the tau-fixed edge factor of y
  DropHPrefactor,   // drop the (2u/((2u-hbar/2)(2u+hbar/2)))^{c} prefactor of H
  FlipXSign,        // x_{tau i, r} = +x_{i,r} instead of -x_{i,r}
};

// Quiver-aware factory for torus data: variables for the negative half of the
// vertex set are rewritten onto the positive half at construction, via
// x_{tau i,r} = -x_{i,r} and d_{tau i,r} = d_{i,r}^{-1}.
class GkloContext {
public:
  GkloContext(Quiver q, DimensionData d, Perturbation pert = Perturbation::None);

  const Quiver& quiver() const { return quiver_; }
  const DimensionData& dims() const { return dims_; }
  const CartanData& cartan() const { return cartan_; }
  Perturbation perturbation() const { return pert_; }

  int tau(int i) const { return quiver_.tau(i); }
  int v(int i) const { return dims_.v_at(i); }
  int w(int i) const { return dims_.w_at(i); }

  LinearForm x(int i, int r) const;
  Variable w_var(int i, int k) const;
  ShiftMonomial shift(int i, int r, int exp = 1) const;

  // V_i(z), W_i(z) and V_{i,r}(z) as lists of linear factors (z a linear form).
  std::vector<LinearForm> v_factors(int i, const LinearForm& z) const;
  std::vector<LinearForm> v_punctured_factors(int i, int r, const LinearForm& z) const;
  std::vector<LinearForm> w_factors(int i, const LinearForm& z) const;

  Polynomial v_poly(int i, const LinearForm& z) const { return expand_product(v_factors(i, z)); }
  Polynomial w_poly(int i, const LinearForm& z) const { return expand_product(w_factors(i, z)); }

  void check_vertex(int i) const;
  void check_slot(int i, int r) const;

private:
  Quiver quiver_;
  DimensionData dims_;
  CartanData cartan_;
  Perturbation pert_;
};

// The operator family: y_{i,r}, B_i(u), H_i(u) and their mode coefficients,
// plus the commutation coefficients and the residue / special-value /
// truncation displays used as verification oracles.
class GkloFamily {
public:
  GkloFamily(Quiver q, DimensionData d, Perturbation pert = Perturbation::None,
             int max_mode = 3);

  const GkloContext& ctx() const { return ctx_; }
  int max_mode() const { return max_mode_; }

  const DiffOperator& y(int i, int r) const;
  DiffOperator B(int i, Variable var) const;
  RationalFunction H(int i, Variable var) const;

  // Coefficient of u^{-m-1} of B_i(u), m >= 0.
  DiffOperator B_coeff(int i, int m) const;
  // Coefficient of u^{-r-1} of H_i(u), any integer r; zero below the boundary
  // index.  The result is asserted to be a polynomial.
  RationalFunction H_coeff(int i, int r) const;

  // Scalar conjugation coefficients: y_{j,s} y_{i,r} = C * y_{i,r} y_{j,s}.
  RationalFunction C_coeff(int i, int j, int r, int s) const;  // table form
  RationalFunction C_unified(int i, int j, int r, int s) const;
  // y_{j,s} H_i(u) = D(u) * H_i(u) y_{j,s}.
  RationalFunction D_coeff(int i, int j, int s, Variable var) const;  // unified form
  RationalFunction D_table(int i, int j, int s, Variable var) const;

  // Residues of H_i(u) at u = -x_{i,r} -+ hbar/2 (minus_side picks the pole
  // below).  Ordered products of y's, landing on the identity shift.
  DiffOperator H_residue(int i, int r, bool minus_side) const;
  // H_i(-x_{i,r} - 3 hbar/2); requires c_{i,tau i} = -1.
  DiffOperator H_special(int i, int r) const;
  // The closed form of (2 u hbar H_i(u)) truncated to negative powers of u.
  DiffOperator two_uH_truncated(int i, Variable var) const;

  // The explicit display for y at the involuted vertex, built from vertex-i
  // data only; used as an independent oracle against y(tau(i), r).
  DiffOperator y_tau_display(int i, int r) const;

private:
  RationalFunction h_at_u(int i) const;
  DiffOperator build_y(int i, int r) const;

  GkloContext ctx_;
  int max_mode_;
  std::map<std::pair<int, int>, DiffOperator> y_;
  std::map<int, RationalFunction> h_u_;                 // H_i at the variable u
  std::map<std::pair<int, int>, DiffOperator> b_modes_;
  std::map<std::pair<int, int>, RationalFunction> h_modes_;
};

}  // namespace gklo

#endif
