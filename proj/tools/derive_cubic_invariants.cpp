// Recomputes the degree-4 and degree-6 invariants of ternary cubics from
// scratch and prints them in the form frozen in src/cubic_invariants_data.cpp.
//
// An invariant is a polynomial in the ten coefficients killed by every
// derivation E_ij (i != j) induced by x_j -> x_j + eps x_i. We solve for the
// kernel of these derivations on the torus-weight-zero monomials of the given
// degree, then scale so that 4 I^3 - J^2 is the smallest multiple kappa of the
// raw resultant of the partials that keeps I and J integral.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "ternary/cubic.hpp"
#include "ternary/elimination.hpp"
#include "ternary/poly_io.hpp"
#include "ternary/random.hpp"

using namespace ternary;

namespace {

std::vector<mpq_class> nullspace_vector(std::vector<std::vector<mpq_class>> rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t k = r;
    while (k < rows.size() && rows[k][c] == 0) ++k;
    if (k == rows.size()) continue;
    std::swap(rows[r], rows[k]);
    const mpq_class inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  if (ncols - pivots.size() != 1) {
    std::cerr << "unexpected kernel dimension " << ncols - pivots.size() << "\n";
    std::exit(1);
  }
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free = 0;
  while (is_pivot[free]) ++free;
  std::vector<mpq_class> v(ncols, 0);
  v[free] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
  return v;
}

void multisets(const std::vector<Monomial>& mons, unsigned k, std::size_t start, Monomial& acc,
               std::vector<std::size_t>& pick, std::vector<Monomial>& out) {
  if (k == 0) {
    if (acc[0] == acc[1] && acc[1] == acc[2]) {
      Monomial e(mons.size(), 0);
      for (auto i : pick) ++e[i];
      out.push_back(e);
    }
    return;
  }
  for (std::size_t i = start; i < mons.size(); ++i) {
    for (int v = 0; v < 3; ++v) acc[v] += mons[i][v];
    pick.push_back(i);
    multisets(mons, k - 1, i, acc, pick, out);
    pick.pop_back();
    for (int v = 0; v < 3; ++v) acc[v] -= mons[i][v];
  }
}

// The derivation of the coefficient ring induced by x_j -> x_j + eps x_i.
MultiPoly derivation(const MultiPoly& P, std::size_t i, std::size_t j,
                     const std::vector<Monomial>& mons) {
  const VarSet& cv = P.vars();
  MultiPoly out(cv, P.domain());
  for (std::size_t a = 0; a < mons.size(); ++a) {
    const Monomial& m = mons[a];
    if (m[i] == 0) continue;
    Monomial src = m;
    --src[i];
    ++src[j];
    std::size_t b = 0;
    while (mons[b] != src) ++b;
    MultiPoly dc = MultiPoly::variable(cv, P.domain(), b) * Scalar(P.domain(), static_cast<long>(src[j]));
    out += dc * partial_derivative(P, a);
  }
  return out;
}

MultiPoly invariant_of_degree(unsigned k, const std::vector<Monomial>& mons, const VarSet& cv) {
  std::vector<Monomial> basis;
  Monomial acc(3, 0);
  std::vector<std::size_t> pick;
  multisets(mons, k, 0, acc, pick, basis);
  const Domain qq = Domain::rationals();
  std::map<Monomial, std::size_t, GrlexGreater> row_of;
  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> cols;
  for (const auto& e : basis) {
    const MultiPoly mono = MultiPoly::term(cv, e, Scalar(qq, 1L));
    std::vector<std::pair<std::size_t, mpq_class>> col;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j) continue;
        const MultiPoly d = derivation(mono, i, j, mons);
        for (const auto& [m, c] : d.terms()) {
          Monomial key = m;
          key.push_back(static_cast<Exponent>(3 * i + j));
          auto it = row_of.emplace(key, row_of.size()).first;
          col.emplace_back(it->second, c.rational_value());
        }
      }
    }
    cols.push_back(col);
  }
  std::vector<std::vector<mpq_class>> rows(row_of.size(), std::vector<mpq_class>(basis.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) rows[r][c] += v;
  const auto v = nullspace_vector(rows, basis.size());
  MultiPoly P(cv, qq);
  for (std::size_t c = 0; c < basis.size(); ++c) P.add_term(basis[c], Scalar(qq, v[c]));
  // Primitive over ZZ.
  mpz_class l = 1;
  for (const auto& [m, c] : P.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational_value().get_den_mpz_t());
  P = P * Scalar(qq, mpq_class(l));
  return content_and_primitive(P.to_domain(Domain::integers())).second;
}

bool rational_root(const mpq_class& q, unsigned k, mpq_class& out) {
  mpz_class n = q.get_num(), d = q.get_den();
  const bool neg = n < 0;
  if (neg && k % 2 == 0) return false;
  if (neg) n = -n;
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) || !mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return false;
  out = mpq_class(neg ? mpz_class(-rn) : rn, rd);
  out.canonicalize();
  return true;
}

// Splits the polynomial text at term boundaries into adjacent literals.
void emit_literal(const std::string& name, const std::string& text) {
  std::cout << "extern const char* const " << name << " =";
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = start + 88;
    if (end >= text.size()) {
      end = text.size();
    } else {
      while (end > start && text[end] != ' ') --end;
    }
    std::cout << "\n    \"" << text.substr(start, end - start) << "\"";
    start = end;
  }
  std::cout << ";\n";
}

}  // namespace

int main() {
  const auto mons = monomials_of_degree(3, 3);
  const VarSet& cv = cubic_coefficient_vars();
  const MultiPoly I0 = invariant_of_degree(4, mons, cv);
  const MultiPoly J0 = invariant_of_degree(6, mons, cv);
  std::cerr << "I0: " << I0.size() << " terms, J0: " << J0.size() << " terms\n";

  // raw = a I0^3 + b J0^2, fitted on two samples and checked on more.
  Rng rng(2024);
  const Domain zz = Domain::integers();
  std::vector<std::array<mpq_class, 3>> eqs;
  for (int s = 0; s < 8; ++s) {
    const MultiPoly f = random_form(rng, VarSet::xyz(), zz, 3, 5);
    const mpq_class i = evaluate_on_cubic(I0, f).rational_value();
    const mpq_class j = evaluate_on_cubic(J0, f).rational_value();
    const mpq_class raw = discriminant_n(f, false).raw.rational_value();
    eqs.push_back({i * i * i, j * j, raw});
  }
  const auto& e0 = eqs[0];
  const auto& e1 = eqs[1];
  const mpq_class det = e0[0] * e1[1] - e0[1] * e1[0];
  const mpq_class a = (e0[2] * e1[1] - e0[1] * e1[2]) / det;
  const mpq_class b = (e0[0] * e1[2] - e0[2] * e1[0]) / det;
  for (const auto& e : eqs) {
    if (a * e[0] + b * e[1] != e[2]) {
      std::cerr << "fit failed\n";
      return 1;
    }
  }
  std::cerr << "raw = (" << a << ") I0^3 + (" << b << ") J0^2\n";

  // kappa raw = 4 I^3 - J^2 with I = lambda I0, J = mu J0 needs
  // 4 lambda^3 = kappa a and mu^2 = -kappa b. Take the smallest |kappa| for
  // which lambda and mu are integers, so I and J keep integer coefficients.
  mpq_class lambda, mu, kappa;
  bool found = false;
  for (long k = 1; k <= 1000000 && !found; ++k) {
    kappa = b < 0 ? k : -k;
    found = rational_root(kappa * a / 4, 3, lambda) && rational_root(-kappa * b, 2, mu) &&
            lambda.get_den() == 1 && mu.get_den() == 1;
  }
  if (!found) {
    std::cerr << "no rational scaling found\n";
    return 1;
  }
  std::cerr << "kappa = " << kappa << ", lambda = " << lambda << ", mu = " << mu << "\n";
  const Domain qq = Domain::rationals();
  const MultiPoly I = I0.to_domain(qq) * Scalar(qq, lambda);
  const MultiPoly J = J0.to_domain(qq) * Scalar(qq, mu);
  std::cout << "// Generated by tools/derive_cubic_invariants; kappa = " << kappa << ".\n"
            << "namespace ternary {\n\n";
  emit_literal("kCubicIText", format_poly(I));
  std::cout << "\n";
  emit_literal("kCubicJText", format_poly(J));
  std::cout << "\n}  // namespace ternary\n";
  return 0;
}
