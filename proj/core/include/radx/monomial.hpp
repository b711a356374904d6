#ifndef RADX_MONOMIAL_HPP
#define RADX_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace radx {

/// Power product x1^e1 ... xn^en. The exponent vector length is the ambient
/// dimension and is fixed per problem instance.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int dimension) : exps_(static_cast<std::size_t>(dimension), 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}

  static Monomial one(int dimension) { return Monomial(dimension); }
  static Monomial variable(int dimension, int index_1based);

  int dimension() const { return static_cast<int>(exps_.size()); }
  std::uint32_t exponent(int var_1based) const { return exps_[static_cast<std::size_t>(var_1based - 1)]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  int degree() const;
  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& rhs) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other) in the caller's sense: *this = other / rhs.
  Monomial divide_by(const Monomial& rhs) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }
  bool operator!=(const Monomial& rhs) const { return exps_ != rhs.exps_; }

  /// Set the exponent of one variable to zero (same dimension).
  Monomial with_zero_exponent(int var_1based) const;
  /// Remove one variable slot entirely (dimension drops by one).
  Monomial drop_variable(int var_1based) const;
  /// Append zero exponents up to new_dimension.
  Monomial extend(int new_dimension) const;

  std::string str() const;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Plain lexicographic comparison with x1 > x2 > ... (no grading).
bool lex_less(const Monomial& a, const Monomial& b);

/// Graded lexicographic: lower total degree first, lex tie-break. Canonical
/// term-map order; printing walks it backwards so leading terms come first.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Anti-graded lexicographic (a local order): 1 is the largest monomial,
/// lower total degree means larger, lex breaks ties. local_less(a,b) means
/// a is smaller in the local order.
bool local_less(const Monomial& a, const Monomial& b);

}  // namespace radx

#endif  // RADX_MONOMIAL_HPP
