#include "ternary/class22.hpp"

#include <algorithm>

#include "ternary/error.hpp"

namespace ternary {

MultiPoly sigma_form(const Domain& d) {
  MultiPoly s(VarSet::xz(), d);
  for (std::size_t i = 0; i < 3; ++i) {
    Monomial m(6, 0);
    m[i] = 1;
    m[3 + i] = 1;
    s.add_term(m, Scalar(d, 1L));
  }
  return s;
}

bool is_bidegree22(const MultiPoly& f) {
  if (f.vars().size() != 6) return false;
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) {
    const Monomial& m = t.first;
    return m[0] + m[1] + m[2] == 2 && m[3] + m[4] + m[5] == 2;
  });
}

namespace {

std::vector<IdealBasisVector> build_ideal_basis() {
  const Domain qq = Domain::rationals();
  const MultiPoly sigma = sigma_form(qq);
  std::vector<MultiPoly> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Monomial m(6, 0);
      m[i] = 1;
      m[3 + j] = 1;
      rows.push_back(MultiPoly::term(VarSet::xz(), m, Scalar(qq, 1L)) * sigma);
    }
  }
  // Gauss-Jordan over QQ on the term maps, pivots chosen at leading monomials.
  std::vector<IdealBasisVector> basis;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::sort(rows.begin() + static_cast<long>(k), rows.end(),
              [](const MultiPoly& a, const MultiPoly& b) {
                if (a.is_zero() != b.is_zero()) return b.is_zero();
                if (a.is_zero()) return false;
                return GrlexGreater{}(a.leading_monomial(), b.leading_monomial());
              });
    MultiPoly& r = rows[k];
    if (r.is_zero()) throw Error("internal", "ideal generators are dependent");
    r *= r.leading_coefficient().inverse();
    const Monomial pivot = r.leading_monomial();
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == k) continue;
      Scalar c = rows[o].coefficient(pivot);
      if (!c.is_zero()) rows[o] -= r * c;
    }
  }
  for (auto& r : rows) {
    MultiPoly integral(VarSet::xz(), Domain::integers());
    for (const auto& [m, c] : r.terms()) {
      if (c.rational_value().get_den() != 1) {
        throw Error("internal", "ideal basis is not integral");
      }
      integral.add_term(m, c.to_domain(Domain::integers()));
    }
    basis.push_back({r.leading_monomial(), std::move(integral)});
  }
  return basis;
}

}  // namespace

const std::vector<IdealBasisVector>& ideal_basis() {
  static const std::vector<IdealBasisVector> basis = build_ideal_basis();
  return basis;
}

Class22 canonicalize(const MultiPoly& f) {
  MultiPoly g = f.vars() == VarSet::xz() ? f : embed(f, VarSet::xz());
  if (!is_bidegree22(g)) {
    throw Error("wrong_bidegree", "V_{2,2} elements are bihomogeneous of bidegree (2,2)");
  }
  for (const auto& b : ideal_basis()) {
    Scalar c = g.coefficient(b.pivot);
    if (!c.is_zero()) g -= b.vector.to_domain(g.domain()) * c;
  }
  return Class22(std::move(g));
}

Class22 reduce_mod_p(const Class22& c, std::uint64_t p) {
  return canonicalize(reduce_mod_p(c.representative(), p));
}

}  // namespace ternary
