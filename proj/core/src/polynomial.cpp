#include "radx/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace radx {

namespace {
void check_same_dim(int a, int b) {
  if (a != b) throw std::invalid_argument("polynomial dimension mismatch");
}
}  // namespace

Polynomial Polynomial::constant(int dimension, const Rational& c) {
  Polynomial p(dimension);
  p.add_term(Monomial::one(dimension), c);
  return p;
}

Polynomial Polynomial::variable(int dimension, int index_1based) {
  Polynomial p(dimension);
  p.add_term(Monomial::variable(dimension, index_1based), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.dimension());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

int Polynomial::order() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.dimension() != dim_) throw std::invalid_argument("monomial dimension mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(dim_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out(*this);
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out(*this);
  out -= rhs;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_dim(dim_, rhs.dim_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_same_dim(dim_, rhs.dim_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  check_same_dim(dim_, rhs.dim_);
  Polynomial out(dim_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(dim_);
  if (sgn(c) == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = Polynomial::constant(dim_, Rational(1));
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return dim_ == rhs.dim_ && terms_ == rhs.terms_;
}

Polynomial Polynomial::derivative(int var_1based) const {
  if (var_1based < 1 || var_1based > dim_)
    throw std::invalid_argument("derivative variable out of range");
  Polynomial out(dim_);
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m.exponent(var_1based);
    if (e == 0) continue;
    auto exps = m.exponents();
    exps[static_cast<std::size_t>(var_1based - 1)] = e - 1;
    out.add_term(Monomial(std::move(exps)), c * Rational(static_cast<long>(e)));
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("evaluation point dimension mismatch");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    const auto& e = m.exponents();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

double Polynomial::evaluate(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("evaluation point dimension mismatch");
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    const auto& e = m.exponents();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t *= std::pow(point[i], static_cast<int>(e[i]));
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& replacement) const {
  if (static_cast<int>(replacement.size()) != dim_)
    throw std::invalid_argument("substitution arity mismatch");
  int out_dim = replacement.empty() ? 0 : replacement.front().dimension();
  for (const auto& r : replacement) check_same_dim(r.dimension(), out_dim);
  Polynomial acc(out_dim);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(out_dim, c);
    const auto& e = m.exponents();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * replacement[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute_zero(int var_1based) const {
  Polynomial out(dim_);
  for (const auto& [m, c] : terms_)
    if (m.exponent(var_1based) == 0) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::drop_variable(int var_1based) const {
  Polynomial out(dim_ - 1);
  for (const auto& [m, c] : terms_)
    if (m.exponent(var_1based) == 0) out.add_term(m.drop_variable(var_1based), c);
  return out;
}

Polynomial Polynomial::extend(int new_dimension) const {
  Polynomial out(new_dimension);
  for (const auto& [m, c] : terms_) out.add_term(m.extend(new_dimension), c);
  return out;
}

Polynomial Polynomial::truncate_degree(int cap) const {
  Polynomial out(dim_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= cap) out.terms_.emplace(m, c);
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational a = abs(c);
    if (m.is_one()) {
      out += to_string(a);
    } else if (a == 1) {
      out += m.str();
    } else {
      out += to_string(a) + "*" + m.str();
    }
  }
  return out;
}

}  // namespace radx
