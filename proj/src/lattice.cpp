#include "ternary/lattice.hpp"

#include <algorithm>
#include <optional>

#include "ternary/error.hpp"
#include "ternary/tuples.hpp"

namespace ternary {

namespace {

bool quarter(const mpq_class& q) { return mpz_class(4) % q.get_den() == 0; }

bool lex_less(const QMat2& x, const QMat2& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// Rational roots of A t^2 + B t + C (A, B not both zero).
std::vector<mpq_class> rational_roots(const mpq_class& A, const mpq_class& B, const mpq_class& C) {
  std::vector<mpq_class> out;
  if (A == 0) {
    out.push_back(-C / B);
    return out;
  }
  const mpq_class disc = B * B - 4 * A * C;
  if (disc < 0) return out;
  const auto r = rational_root(disc, 2);
  if (!r) return out;
  out.push_back((-B - *r) / (2 * A));
  if (*r != 0) out.push_back((-B + *r) / (2 * A));
  std::sort(out.begin(), out.end());
  return out;
}

bool admissible(const mpq_class& a22) {
  const auto& s = admissible_a22();
  return std::find(s.begin(), s.end(), a22) != s.end();
}

}  // namespace

const QMat2& picard_gram() {
  static const QMat2 g{2, 4, 4, 2};
  return g;
}

mpq_class qform(const mpq_class& x, const mpq_class& y) { return 2 * (x * x + 4 * x * y + y * y); }

const std::vector<mpq_class>& admissible_a22() {
  static const std::vector<mpq_class> v = [] {
    std::vector<mpq_class> out;
    for (const mpq_class& q : {mpq_class(1, 4), mpq_class(1, 2), mpq_class(1), mpq_class(2), mpq_class(4)}) {
      out.push_back(q);
      out.push_back(-q);
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return v;
}

std::vector<mpq_class> solve_second_row(const mpq_class& a22) {
  if (!admissible(a22)) throw Error("invalid_a22", "a22 must lie in +-{1/4, 1/2, 1, 2, 4}");
  // a21^2 + 4 a21 a22 + a22^2 - 1 = 0
  std::vector<mpq_class> out;
  for (const auto& r : rational_roots(1, 4 * a22, a22 * a22 - 1)) {
    if (quarter(r)) out.push_back(r);
  }
  return out;
}

std::vector<std::pair<mpq_class, mpq_class>> solve_first_row(const mpq_class& a21, const mpq_class& a22) {
  if (a21 == 0 && a22 == 0) throw Error("zero_row", "second row must be nonzero");
  // Pairing: alpha a11 + beta a12 = 4.
  const mpq_class alpha = 2 * a21 + 4 * a22, beta = 4 * a21 + 2 * a22;
  std::vector<std::pair<mpq_class, mpq_class>> out;
  if (beta != 0) {
    // a12 = (4 - alpha a11) / beta, substituted into the conic times beta^2.
    const mpq_class A = beta * beta - 4 * alpha * beta + alpha * alpha;
    const mpq_class B = 16 * beta - 8 * alpha;
    const mpq_class C = 16 - beta * beta;
    for (const auto& a11 : rational_roots(A, B, C)) out.emplace_back(a11, (4 - alpha * a11) / beta);
  } else {
    const mpq_class a11 = 4 / alpha;
    for (const auto& a12 : rational_roots(1, 4 * a11, a11 * a11 - 1)) out.emplace_back(a11, a12);
  }
  std::erase_if(out, [](const auto& r) { return !quarter(r.first) || !quarter(r.second); });
  std::sort(out.begin(), out.end());
  return out;
}

QMat2 mul2(const QMat2& a, const QMat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

QMat2 transpose2(const QMat2& a) { return {a[0], a[2], a[1], a[3]}; }

mpq_class det2(const QMat2& a) { return a[0] * a[3] - a[1] * a[2]; }

nlohmann::json qmat2_json(const QMat2& a) {
  using nlohmann::json;
  return json::array({json::array({a[0].get_str(), a[1].get_str()}),
                      json::array({a[2].get_str(), a[3].get_str()})});
}

nlohmann::json IsometryCandidate::to_json() const {
  bool zero = std::all_of(residual.begin(), residual.end(), [](const mpq_class& q) { return q == 0; });
  return {{"matrix", qmat2_json(a)},
          {"quarter_integral", quarter_integral},
          {"a22", a[3].get_str()},
          {"a22_admissible", a22_admissible},
          {"det", det.get_str()},
          {"orthogonality_residual", qmat2_json(residual)},
          {"orthogonal", zero}};
}

std::vector<IsometryCandidate> enumerate_tau_candidates() {
  const QMat2& G = picard_gram();
  std::vector<IsometryCandidate> out;
  for (const auto& a22 : admissible_a22()) {
    for (const auto& a21 : solve_second_row(a22)) {
      for (const auto& [a11, a12] : solve_first_row(a21, a22)) {
        IsometryCandidate c;
        c.a = {a11, a12, a21, a22};
        const QMat2 agat = mul2(mul2(c.a, G), transpose2(c.a));
        for (std::size_t k = 0; k < 4; ++k) c.residual[k] = agat[k] - G[k];
        c.quarter_integral = std::all_of(c.a.begin(), c.a.end(), quarter);
        c.a22_admissible = admissible(a22);
        c.det = det2(c.a);
        const bool orthogonal = agat == G;
        const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& o) { return o.a == c.a; });
        if (orthogonal && c.quarter_integral && !dup) out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return lex_less(x.a, y.a); });
  return out;
}

std::vector<QMat2> brute_force_box(long bound) {
  // Work with numerators over 4: X^2 + 4 X Y + Y^2 = 16 for a row (X/4, Y/4).
  std::vector<std::pair<long, long>> rows;
  for (long x = -4 * bound; x <= 4 * bound; ++x)
    for (long y = -4 * bound; y <= 4 * bound; ++y)
      if (x * x + 4 * x * y + y * y == 16) rows.emplace_back(x, y);
  std::vector<QMat2> out;
  for (const auto& [x1, y1] : rows) {
    for (const auto& [x2, y2] : rows) {
      // Pairing 4 in quarter units: 2 x1 x2 + 4 x1 y2 + 4 y1 x2 + 2 y1 y2 = 64.
      if (2 * x1 * x2 + 4 * x1 * y2 + 4 * y1 * x2 + 2 * y1 * y2 != 64) continue;
      mpq_class a22(y2, 4);
      a22.canonicalize();
      if (!admissible(a22)) continue;
      QMat2 a{mpq_class(x1, 4), mpq_class(y1, 4), mpq_class(x2, 4), a22};
      for (auto& e : a) e.canonicalize();
      out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

InverseClosure inverse_closure(const std::vector<IsometryCandidate>& set) {
  InverseClosure rep;
  rep.members = set.size();
  for (const auto& c : set) {
    const mpq_class d = det2(c.a);
    QMat2 inv{c.a[3] / d, -c.a[1] / d, -c.a[2] / d, c.a[0] / d};
    for (auto& e : inv) e.canonicalize();
    const bool found = std::any_of(set.begin(), set.end(), [&](const auto& o) { return o.a == inv; });
    if (found) {
      ++rep.closed;
      continue;
    }
    std::string why;
    if (!admissible(inv[3])) why = "a22 of the inverse is " + inv[3].get_str();
    else if (!std::all_of(inv.begin(), inv.end(), quarter)) why = "inverse leaves (1/4)ZZ";
    else why = "inverse not produced by the enumeration";
    rep.violations.emplace_back(c.a, why);
  }
  return rep;
}

nlohmann::json InverseClosure::to_json() const {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& [a, why] : violations) v.push_back({{"matrix", qmat2_json(a)}, {"reason", why}});
  return {{"members", members}, {"closed", closed}, {"violations", v}};
}

}  // namespace ternary
