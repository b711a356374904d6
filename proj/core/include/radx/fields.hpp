#ifndef RADX_FIELDS_HPP
#define RADX_FIELDS_HPP

#include <string>
#include <vector>

#include "radx/polynomial.hpp"

namespace radx {

/// Polynomial vector field (V1,...,Vn) on R^n; components all share the
/// ambient dimension, which also equals the number of components unless
/// stated otherwise (auxiliary zero-finding systems may be rectangular).
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::vector<Polynomial> components);

  static VectorField identity(int dimension);

  int dimension() const { return comps_.empty() ? 0 : comps_.front().dimension(); }
  int component_count() const { return static_cast<int>(comps_.size()); }
  bool is_square() const { return component_count() == dimension(); }

  const Polynomial& component(int index_1based) const {
    return comps_[static_cast<std::size_t>(index_1based - 1)];
  }
  const std::vector<Polynomial>& components() const { return comps_; }

  bool vanishes_at_origin() const;

  VectorField operator-() const;
  std::vector<double> evaluate(const std::vector<double>& point) const;
  std::vector<Rational> evaluate(const std::vector<Rational>& point) const;

  std::string str() const;

 private:
  std::vector<Polynomial> comps_;
};

/// 1-form a1 dx1 + ... + an dxn, stored through its coefficient vector. The
/// dual vector field is the identity reinterpretation of the same data.
class OneForm {
 public:
  OneForm() = default;
  explicit OneForm(std::vector<Polynomial> coefficients) : coeffs_(VectorField(std::move(coefficients))) {}
  explicit OneForm(VectorField dual) : coeffs_(std::move(dual)) {}

  int dimension() const { return coeffs_.dimension(); }
  const Polynomial& coefficient(int index_1based) const { return coeffs_.component(index_1based); }
  const std::vector<Polynomial>& coefficients() const { return coeffs_.components(); }

  /// The dual field V(omega) with the same component polynomials.
  const VectorField& dual() const { return coeffs_; }

  std::string str() const;

 private:
  VectorField coeffs_;
};

/// Euclidean pairing <a, b> = sum a_i b_i as an exact polynomial.
Polynomial inner_product(const VectorField& a, const VectorField& b);

/// x1^2 + ... + xn^2.
Polynomial radius_squared(int dimension);

/// d(rho)/... the radial 1-form 2*(x1 dx1 + ... + xn dxn).
OneForm radial_one_form(int dimension);

}  // namespace radx

#endif  // RADX_FIELDS_HPP
