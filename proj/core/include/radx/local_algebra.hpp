#ifndef RADX_LOCAL_ALGEBRA_HPP
#define RADX_LOCAL_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "radx/fields.hpp"
#include "radx/polynomial.hpp"

namespace radx {

/// Local monomial order used throughout: anti-graded with lexicographic
/// tie-break, so the constant monomial is the largest and leading terms pick
/// out the tangent cone. Kept as a named type so signatures say what they
/// order by.
struct LocalOrder {
  bool less(const Monomial& a, const Monomial& b) const { return local_less(a, b); }
};

struct StandardBasisOptions {
  /// Abort with a cap-reached diagnostic once leading terms pass this total
  /// degree; converts divergence on non-isolated input into a typed error.
  int degree_cap = 30;
};

/// Leading monomial/coefficient with respect to the local order.
const Monomial& local_leading_monomial(const Polynomial& p);
Rational local_leading_coefficient(const Polynomial& p);

/// Quotient of the local ring at the origin by the ideal spanned by the
/// components of a vector field. Built through a Mora standard basis; exposes
/// the monomial basis of the quotient and an exact normal-form reducer.
///
/// Normal forms here are strong (true coset representatives): every class is
/// computed inside the truncation R[x]/m^(D+1), legitimate because all
/// monomials of degree > D lie in the leading ideal, hence m^(D+1) is
/// contained in the localized ideal.
class LocalAlgebra {
 public:
  /// May throw NotAlgebraicallyIsolated (genuinely infinite quotient, or the
  /// degree cap was hit). Generators need not vanish at the origin; a unit in
  /// the ideal produces the zero algebra (dimension 0).
  static LocalAlgebra build(const VectorField& ideal_generators, const LocalOrder& order = {},
                            const StandardBasisOptions& options = {});

  const VectorField& generators() const { return generators_; }
  const std::vector<Polynomial>& standard_basis() const { return basis_; }
  const std::vector<Monomial>& quotient_basis() const { return quotient_basis_; }
  int dimension() const { return static_cast<int>(quotient_basis_.size()); }
  /// Max total degree appearing in the quotient basis (-1 for the zero algebra).
  int truncation_degree() const { return truncation_degree_; }

  /// The unique representative of [p] supported on quotient basis monomials;
  /// idempotent, exact, and zero exactly on ideal members.
  Polynomial normal_form(const Polynomial& p) const;

  bool ideal_member(const Polynomial& p) const { return normal_form(p).is_zero(); }

  /// Coefficient of a quotient-basis monomial in normal_form(p).
  Rational coefficient_in_basis(const Polynomial& p, const Monomial& basis_monomial) const;

 private:
  LocalAlgebra() = default;
  VectorField generators_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> quotient_basis_;  // sorted descending in the local order
  int truncation_degree_ = -1;
};

/// Spec-level entry point: validates that the field is square and vanishes at
/// the origin, then builds the quotient algebra.
LocalAlgebra standard_basis(const VectorField& ideal, const LocalOrder& order = {},
                            const StandardBasisOptions& options = {});

}  // namespace radx

#endif  // RADX_LOCAL_ALGEBRA_HPP
