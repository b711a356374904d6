#include "radx/calculus.hpp"

#include <map>
#include <stdexcept>

#include "radx/errors.hpp"

namespace radx {

VectorField gradient(const Polynomial& f) {
  std::vector<Polynomial> comps;
  comps.reserve(static_cast<std::size_t>(f.dimension()));
  for (int i = 1; i <= f.dimension(); ++i) comps.push_back(f.derivative(i));
  return VectorField(std::move(comps));
}

namespace {

// det over rows [row..n) and the columns picked by colmask, expanding along
// the top remaining row. Memoized on (row, colmask); row is implied by the
// popcount of colmask, so colmask alone is a sound key per call.
Polynomial det_rec(const std::vector<std::vector<Polynomial>>& mat, unsigned colmask,
                   std::size_t row, std::map<unsigned, Polynomial>& memo) {
  std::size_t n = mat.size();
  if (row == n) return Polynomial::constant(mat.empty() ? 0 : mat[0][0].dimension(), Rational(1));
  auto it = memo.find(colmask);
  if (it != memo.end()) return it->second;
  Polynomial acc(mat[0][0].dimension());
  int parity = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (!(colmask & (1u << col))) continue;
    if (!mat[row][col].is_zero()) {
      Polynomial sub = det_rec(mat, colmask & ~(1u << col), row + 1, memo);
      Polynomial contrib = mat[row][col] * sub;
      if (parity % 2 == 0)
        acc += contrib;
      else
        acc -= contrib;
    }
    ++parity;
  }
  memo.emplace(colmask, acc);
  return acc;
}

}  // namespace

Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& mat) {
  std::size_t n = mat.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  if (n > 31) throw std::invalid_argument("matrix too large");
  for (const auto& row : mat)
    if (row.size() != n) throw std::invalid_argument("matrix not square");
  std::map<unsigned, Polynomial> memo;
  unsigned full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1u);
  return det_rec(mat, full, 0, memo);
}

std::vector<std::vector<Polynomial>> jacobian_matrix(const VectorField& v) {
  std::vector<std::vector<Polynomial>> rows;
  rows.reserve(static_cast<std::size_t>(v.component_count()));
  for (int i = 1; i <= v.component_count(); ++i) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<std::size_t>(v.dimension()));
    for (int j = 1; j <= v.dimension(); ++j) row.push_back(v.component(i).derivative(j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Polynomial jacobian_determinant(const VectorField& v) {
  if (!v.is_square()) throw std::invalid_argument("jacobian determinant needs a square field");
  return poly_determinant(jacobian_matrix(v));
}

Polynomial jacobian_minor(const std::vector<Polynomial>& fs, const std::vector<int>& vars_1based) {
  if (fs.empty() || fs.size() != vars_1based.size())
    throw std::invalid_argument("jacobian minor needs as many functions as variables");
  std::vector<std::vector<Polynomial>> mat;
  mat.reserve(fs.size());
  for (const auto& f : fs) {
    std::vector<Polynomial> row;
    row.reserve(vars_1based.size());
    for (int v : vars_1based) row.push_back(f.derivative(v));
    mat.push_back(std::move(row));
  }
  return poly_determinant(mat);
}

Polynomial restriction_minor(const OneForm& omega, const std::vector<Polynomial>& f_list, int j) {
  int n = omega.dimension();
  int k = static_cast<int>(f_list.size());
  if (k == 0) throw std::invalid_argument("restriction minor needs at least one defining function");
  if (k >= n) throw std::invalid_argument("need fewer defining functions than variables");
  if (j < k + 1 || j > n) throw std::invalid_argument("column index must lie in [k+1, n]");
  for (const auto& f : f_list)
    if (f.dimension() != n) throw std::invalid_argument("defining function dimension mismatch");

  std::vector<std::vector<Polynomial>> mat;
  mat.reserve(static_cast<std::size_t>(k) + 1);
  std::vector<Polynomial> top;
  for (int c = 1; c <= k; ++c) top.push_back(omega.coefficient(c));
  top.push_back(omega.coefficient(j));
  mat.push_back(std::move(top));
  for (const auto& f : f_list) {
    std::vector<Polynomial> row;
    for (int c = 1; c <= k; ++c) row.push_back(f.derivative(c));
    row.push_back(f.derivative(j));
    mat.push_back(std::move(row));
  }
  return poly_determinant(mat);
}

VectorField lagrange_zero_system(const OneForm& omega, const std::vector<Polynomial>& f_list) {
  int n = omega.dimension();
  int k = static_cast<int>(f_list.size());
  if (k == 0) throw std::invalid_argument("lagrange system needs at least one defining function");
  for (const auto& f : f_list)
    if (f.dimension() != n) throw std::invalid_argument("defining function dimension mismatch");

  int total = n + k;
  std::vector<Polynomial> comps;
  comps.reserve(static_cast<std::size_t>(total));
  for (int i = 1; i <= n; ++i) {
    Polynomial c = omega.coefficient(i).extend(total);
    for (int j = 1; j <= k; ++j) {
      Polynomial lambda_j = Polynomial::variable(total, n + j);
      c += lambda_j * f_list[static_cast<std::size_t>(j - 1)].derivative(i).extend(total);
    }
    comps.push_back(std::move(c));
  }
  for (const auto& f : f_list) comps.push_back(f.extend(total));
  return VectorField(std::move(comps));
}

}  // namespace radx
