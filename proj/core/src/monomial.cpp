#include "radx/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace radx {

Monomial Monomial::variable(int dimension, int index_1based) {
  if (index_1based < 1 || index_1based > dimension)
    throw std::invalid_argument("variable index out of range");
  Monomial m(dimension);
  m.exps_[static_cast<std::size_t>(index_1based - 1)] = 1;
  return m;
}

int Monomial::degree() const {
  return static_cast<int>(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0}));
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  if (exps_.size() != rhs.exps_.size())
    throw std::invalid_argument("monomial dimension mismatch");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += rhs.exps_[i];
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::divide_by(const Monomial& rhs) const {
  if (!rhs.divides(*this)) throw std::invalid_argument("monomial division not exact");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= rhs.exps_[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size())
    throw std::invalid_argument("monomial dimension mismatch");
  Monomial out(a);
  for (std::size_t i = 0; i < out.exps_.size(); ++i)
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial Monomial::with_zero_exponent(int var_1based) const {
  Monomial out(*this);
  out.exps_[static_cast<std::size_t>(var_1based - 1)] = 0;
  return out;
}

Monomial Monomial::drop_variable(int var_1based) const {
  Monomial out(*this);
  out.exps_.erase(out.exps_.begin() + (var_1based - 1));
  return out;
}

Monomial Monomial::extend(int new_dimension) const {
  if (new_dimension < dimension()) throw std::invalid_argument("extend shrinks dimension");
  Monomial out(*this);
  out.exps_.resize(static_cast<std::size_t>(new_dimension), 0);
  return out;
}

std::string Monomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  if (out.empty()) out = "1";
  return out;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] < eb[i];
  return false;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return lex_less(a, b);
}

bool local_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return lex_less(a, b);
}

}  // namespace radx
