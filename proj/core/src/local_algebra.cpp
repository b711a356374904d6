#include "radx/local_algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

#include "radx/errors.hpp"

namespace radx {

const Monomial& local_leading_monomial(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of zero polynomial");
  // The grlex term map ascends in degree with lex ascending inside a degree
  // block; the local-order maximum is the lex-largest monomial of the lowest
  // degree block, so scan that block only.
  auto it = p.terms().begin();
  int d = it->first.degree();
  const Monomial* best = &it->first;
  for (; it != p.terms().end() && it->first.degree() == d; ++it) best = &it->first;
  return *best;
}

Rational local_leading_coefficient(const Polynomial& p) {
  return p.coefficient(local_leading_monomial(p));
}

namespace {

int ecart(const Polynomial& p) {
  return p.total_degree() - local_leading_monomial(p).degree();
}

Polynomial make_monic(const Polynomial& p) {
  Rational lc = local_leading_coefficient(p);
  return p * (Rational(1) / lc);
}

// Mora weak normal form with ecart selection: returns h with u*f = q + h for a
// unit u and q in the ideal of `basis`; h is zero or has an irreducible
// leading monomial. That is exactly what standard-basis construction needs
// (zero-testing), units included.
Polynomial mora_weak_nf(Polynomial h, const std::vector<Polynomial>& basis, int degree_cap) {
  struct Reducer {
    Polynomial p;
    Monomial lm;
    Rational lc;
    int ecart;
  };
  std::vector<Reducer> pool;
  pool.reserve(basis.size());
  for (const auto& g : basis) {
    Monomial lm = local_leading_monomial(g);
    pool.push_back({g, lm, g.coefficient(lm), ecart(g)});
  }
  while (!h.is_zero()) {
    Monomial lm_h = local_leading_monomial(h);
    if (lm_h.degree() > degree_cap)
      throw NotAlgebraicallyIsolated(
          "standard basis reduction passed the degree cap (" + std::to_string(degree_cap) +
              "): treating the quotient as infinite-dimensional",
          /*cap_reached=*/true);
    int best = -1;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!pool[i].lm.divides(lm_h)) continue;
      if (best < 0 || pool[i].ecart < pool[static_cast<std::size_t>(best)].ecart)
        best = static_cast<int>(i);
    }
    if (best < 0) return h;
    int ecart_h = h.total_degree() - lm_h.degree();
    if (pool[static_cast<std::size_t>(best)].ecart > ecart_h)
      pool.push_back({h, lm_h, h.coefficient(lm_h), ecart_h});
    const Reducer& red = pool[static_cast<std::size_t>(best)];
    Rational factor = h.coefficient(lm_h) / red.lc;
    Monomial shift = lm_h.divide_by(red.lm);
    h -= Polynomial::term(shift, factor) * red.p;
  }
  return h;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Monomial lf = local_leading_monomial(f);
  Monomial lg = local_leading_monomial(g);
  Monomial l = Monomial::lcm(lf, lg);
  Polynomial a = Polynomial::term(l.divide_by(lf), Rational(1) / f.coefficient(lf)) * f;
  Polynomial b = Polynomial::term(l.divide_by(lg), Rational(1) / g.coefficient(lg)) * g;
  return a - b;
}

// No coprimality shortcut here: the product criterion is unsound for local
// orders, so every pair is reduced.
std::vector<Polynomial> compute_standard_basis(const VectorField& gens, int degree_cap) {
  std::vector<Polynomial> basis;
  for (const auto& g : gens.components())
    if (!g.is_zero()) basis.push_back(make_monic(g));
  if (basis.empty())
    throw NotAlgebraicallyIsolated("the zero ideal has an infinite-dimensional quotient");

  // (lcm degree, i, j): cheapest pairs first, deterministic.
  std::set<std::tuple<int, std::size_t, std::size_t>> pairs;
  auto push_pairs_for = [&](std::size_t j) {
    Monomial lj = local_leading_monomial(basis[j]);
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(local_leading_monomial(basis[i]), lj);
      pairs.emplace(l.degree(), i, j);
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    Polynomial s = spoly(basis[i], basis[j]);
    if (s.is_zero()) continue;
    Polynomial h = mora_weak_nf(std::move(s), basis, degree_cap);
    if (h.is_zero()) continue;
    basis.push_back(make_monic(h));
    push_pairs_for(basis.size() - 1);
  }

  // Minimalize: keep one element per minimal generator of the leading ideal.
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Monomial& ma = local_leading_monomial(basis[a]);
    const Monomial& mb = local_leading_monomial(basis[b]);
    if (ma != mb) return local_less(mb, ma);  // local-order larger first
    return a < b;
  });
  std::vector<Polynomial> minimal;
  std::vector<Monomial> kept_lms;
  for (std::size_t idx : order) {
    const Monomial& lm = local_leading_monomial(basis[idx]);
    bool redundant = false;
    for (const auto& k : kept_lms)
      if (k.divides(lm)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      kept_lms.push_back(lm);
      minimal.push_back(basis[idx]);
    }
  }
  return minimal;
}

void enumerate_staircase(const std::vector<Monomial>& lead, const std::vector<int>& box,
                         std::vector<std::uint32_t>& current, std::size_t var,
                         std::vector<Monomial>& out) {
  if (var == box.size()) {
    Monomial m{std::vector<std::uint32_t>(current)};
    for (const auto& l : lead)
      if (l.divides(m)) return;
    out.push_back(std::move(m));
    return;
  }
  for (int e = 0; e < box[var]; ++e) {
    current[var] = static_cast<std::uint32_t>(e);
    enumerate_staircase(lead, box, current, var + 1, out);
  }
  current[var] = 0;
}

}  // namespace

LocalAlgebra LocalAlgebra::build(const VectorField& ideal_generators, const LocalOrder&,
                                 const StandardBasisOptions& options) {
  LocalAlgebra a;
  a.generators_ = ideal_generators;
  a.basis_ = compute_standard_basis(ideal_generators, options.degree_cap);

  int n = ideal_generators.dimension();
  std::vector<Monomial> lead;
  lead.reserve(a.basis_.size());
  for (const auto& g : a.basis_) lead.push_back(local_leading_monomial(g));

  // The quotient is finite-dimensional exactly when the leading ideal traps a
  // pure power of every variable; a monomial ideal contains x_i^N only if one
  // of its generators is a pure x_i power.
  std::vector<int> box(static_cast<std::size_t>(n), -1);
  for (const auto& lm : lead) {
    int which = -1;
    bool pure = true;
    const auto& e = lm.exponents();
    for (int i = 0; i < n; ++i) {
      if (e[static_cast<std::size_t>(i)] == 0) continue;
      if (which >= 0) {
        pure = false;
        break;
      }
      which = i;
    }
    if (!pure) continue;
    if (which < 0) {
      // A unit in the ideal: the quotient is the zero algebra.
      a.quotient_basis_.clear();
      a.truncation_degree_ = -1;
      return a;
    }
    int deg = static_cast<int>(e[static_cast<std::size_t>(which)]);
    if (box[static_cast<std::size_t>(which)] < 0 || deg < box[static_cast<std::size_t>(which)])
      box[static_cast<std::size_t>(which)] = deg;
  }
  for (int i = 0; i < n; ++i)
    if (box[static_cast<std::size_t>(i)] < 0)
      throw NotAlgebraicallyIsolated(
          "no power of x" + std::to_string(i + 1) +
          " lies in the leading ideal: the quotient is infinite-dimensional");

  std::vector<std::uint32_t> current(static_cast<std::size_t>(n), 0);
  enumerate_staircase(lead, box, current, 0, a.quotient_basis_);
  std::sort(a.quotient_basis_.begin(), a.quotient_basis_.end(),
            [](const Monomial& x, const Monomial& y) { return local_less(y, x); });
  a.truncation_degree_ = 0;
  for (const auto& m : a.quotient_basis_)
    a.truncation_degree_ = std::max(a.truncation_degree_, m.degree());
  return a;
}

namespace {
struct LocalGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return local_less(b, a); }
};
}  // namespace

Polynomial LocalAlgebra::normal_form(const Polynomial& p) const {
  if (p.dimension() != generators_.dimension())
    throw std::invalid_argument("normal form dimension mismatch");
  if (truncation_degree_ < 0) return Polynomial::zero(p.dimension());

  const int cap = truncation_degree_;
  std::map<Monomial, Rational, LocalGreater> work;
  for (const auto& [m, c] : p.terms())
    if (m.degree() <= cap) work.emplace(m, c);

  auto add_term = [&](const Monomial& m, const Rational& c) {
    auto [it, inserted] = work.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) work.erase(it);
    }
  };

  auto it = work.begin();
  while (it != work.end()) {
    const Monomial m = it->first;
    const Polynomial* reducer = nullptr;
    for (const auto& g : basis_) {
      if (local_leading_monomial(g).divides(m)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      ++it;
      continue;
    }
    const Monomial lm_g = local_leading_monomial(*reducer);
    const Rational c = it->second / reducer->coefficient(lm_g);
    work.erase(it);
    Monomial shift = m.divide_by(lm_g);
    for (const auto& [mg, cg] : reducer->terms()) {
      if (mg == lm_g) continue;
      Monomial mm = shift * mg;
      if (mm.degree() > cap) continue;  // m^(D+1) lies in the ideal
      add_term(mm, -c * cg);
    }
    it = work.upper_bound(m);
  }

  Polynomial out(p.dimension());
  for (const auto& [m, c] : work) out.add_term(m, c);
  return out;
}

Rational LocalAlgebra::coefficient_in_basis(const Polynomial& p, const Monomial& basis_monomial) const {
  return normal_form(p).coefficient(basis_monomial);
}

LocalAlgebra standard_basis(const VectorField& ideal, const LocalOrder& order,
                            const StandardBasisOptions& options) {
  if (!ideal.is_square())
    throw std::invalid_argument("expected as many components as variables");
  if (!ideal.vanishes_at_origin())
    throw std::invalid_argument("ideal generators must vanish at the origin");
  return LocalAlgebra::build(ideal, order, options);
}

}  // namespace radx
