#include "radx/fields.hpp"

#include <stdexcept>

namespace radx {

VectorField::VectorField(std::vector<Polynomial> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw std::invalid_argument("empty vector field");
  int d = comps_.front().dimension();
  for (const auto& p : comps_)
    if (p.dimension() != d) throw std::invalid_argument("vector field components disagree on dimension");
}

VectorField VectorField::identity(int dimension) {
  std::vector<Polynomial> comps;
  comps.reserve(static_cast<std::size_t>(dimension));
  for (int i = 1; i <= dimension; ++i) comps.push_back(Polynomial::variable(dimension, i));
  return VectorField(std::move(comps));
}

bool VectorField::vanishes_at_origin() const {
  for (const auto& p : comps_)
    if (sgn(p.constant_term()) != 0) return false;
  return true;
}

VectorField VectorField::operator-() const {
  std::vector<Polynomial> comps;
  comps.reserve(comps_.size());
  for (const auto& p : comps_) comps.push_back(-p);
  return VectorField(std::move(comps));
}

std::vector<double> VectorField::evaluate(const std::vector<double>& point) const {
  std::vector<double> out;
  out.reserve(comps_.size());
  for (const auto& p : comps_) out.push_back(p.evaluate(point));
  return out;
}

std::vector<Rational> VectorField::evaluate(const std::vector<Rational>& point) const {
  std::vector<Rational> out;
  out.reserve(comps_.size());
  for (const auto& p : comps_) out.push_back(p.evaluate(point));
  return out;
}

std::string VectorField::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i > 0) out += ", ";
    out += comps_[i].str();
  }
  return out + ")";
}

std::string OneForm::str() const {
  std::string out;
  for (int i = 1; i <= dimension(); ++i) {
    if (!out.empty()) out += " + ";
    out += "(" + coefficient(i).str() + ")*dx" + std::to_string(i);
  }
  return out;
}

Polynomial inner_product(const VectorField& a, const VectorField& b) {
  if (a.component_count() != b.component_count() || a.dimension() != b.dimension())
    throw std::invalid_argument("inner product shape mismatch");
  Polynomial acc(a.dimension());
  for (int i = 1; i <= a.component_count(); ++i) acc += a.component(i) * b.component(i);
  return acc;
}

Polynomial radius_squared(int dimension) {
  Polynomial acc(dimension);
  for (int i = 1; i <= dimension; ++i) {
    Polynomial xi = Polynomial::variable(dimension, i);
    acc += xi * xi;
  }
  return acc;
}

OneForm radial_one_form(int dimension) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(static_cast<std::size_t>(dimension));
  for (int i = 1; i <= dimension; ++i)
    coeffs.push_back(Polynomial::variable(dimension, i) * Rational(2));
  return OneForm(std::move(coeffs));
}

}  // namespace radx
