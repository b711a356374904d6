#ifndef RADX_POLYNOMIAL_HPP
#define RADX_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "radx/monomial.hpp"
#include "radx/rational.hpp"

namespace radx {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored; the term map is graded-lex ordered.
/// Values are immutable in spirit: every operation returns a fresh object.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  Polynomial() : dim_(0) {}
  explicit Polynomial(int dimension) : dim_(dimension) {}

  static Polynomial zero(int dimension) { return Polynomial(dimension); }
  static Polynomial constant(int dimension, const Rational& c);
  static Polynomial variable(int dimension, int index_1based);
  static Polynomial term(const Monomial& m, const Rational& c);

  int dimension() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial::one(dim_)); }

  /// Max total degree of the support; -1 for the zero polynomial.
  int total_degree() const;
  /// Min total degree of the support (the local-analysis order); -1 for zero.
  int order() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator*(const Rational& c) const;
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial derivative(int var_1based) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  double evaluate(const std::vector<double>& point) const;

  /// Substitute x_i -> replacement[i-1]; replacements share one dimension.
  Polynomial substitute(const std::vector<Polynomial>& replacement) const;
  /// Set x_i = 0, keeping the ambient dimension.
  Polynomial substitute_zero(int var_1based) const;
  /// Set x_i = 0 and remove the variable slot (dimension drops by one).
  Polynomial drop_variable(int var_1based) const;
  /// Reinterpret in a larger ambient dimension.
  Polynomial extend(int new_dimension) const;
  /// Drop every term of total degree > cap.
  Polynomial truncate_degree(int cap) const;

  /// Canonical text form, leading (highest graded-lex) term first. Parses back
  /// through parse_polynomial to an equal polynomial.
  std::string str() const;

 private:
  int dim_;
  TermMap terms_;
};

/// Parse the shared polynomial grammar: variables x1..xN, integer and rational
/// p/q literals, operators + - * ^ and parentheses; juxtaposition is not
/// multiplication; whitespace is ignored. Throws ParseError with a position.
Polynomial parse_polynomial(const std::string& text, int dimension);

}  // namespace radx

#endif  // RADX_POLYNOMIAL_HPP
