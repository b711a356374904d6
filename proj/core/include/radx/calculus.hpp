#ifndef RADX_CALCULUS_HPP
#define RADX_CALCULUS_HPP

#include <vector>

#include "radx/fields.hpp"
#include "radx/polynomial.hpp"

namespace radx {

inline Polynomial partial_derivative(const Polynomial& p, int var_1based) {
  return p.derivative(var_1based);
}

/// (df/dx1, ..., df/dxn) as a vector field.
VectorField gradient(const Polynomial& f);

/// Exact determinant of a square matrix of polynomials (Laplace expansion
/// with memoization on column subsets).
Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& mat);

/// Rows are components, columns are variables.
std::vector<std::vector<Polynomial>> jacobian_matrix(const VectorField& v);

/// det D(V); requires a square field.
Polynomial jacobian_determinant(const VectorField& v);

/// Determinant of the partials of (f_1..f_k) with respect to the listed
/// variables (the paper-style k x k Jacobian minor).
Polynomial jacobian_minor(const std::vector<Polynomial>& fs, const std::vector<int>& vars_1based);

/// The (k+1)x(k+1) restriction minor m_j for omega restricted to
/// {f_1 = ... = f_k = 0}: top row (a_1..a_k a_j), below it the rows
/// (df_i/dx_1 .. df_i/dx_k  df_i/dx_j). Requires 1 <= k < n and k+1 <= j <= n.
Polynomial restriction_minor(const OneForm& omega, const std::vector<Polynomial>& f_list, int j);

/// The Lagrange-multiplier zero system H(x, l) in n+k variables:
/// (a_i(x) + sum_j l_j df_j/dx_i ; f_1(x) .. f_k(x)), with l_j = x_{n+j}.
/// Requires k >= 1.
VectorField lagrange_zero_system(const OneForm& omega, const std::vector<Polynomial>& f_list);

}  // namespace radx

#endif  // RADX_CALCULUS_HPP
