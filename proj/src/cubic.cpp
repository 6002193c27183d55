#include "ternary/cubic.hpp"

#include "ternary/error.hpp"
#include "ternary/poly_io.hpp"

namespace ternary {

// Frozen output of tools/derive_cubic_invariants.
extern const char* const kCubicIText;
extern const char* const kCubicJText;

const VarSet& cubic_coefficient_vars() {
  static const VarSet vars = [] {
    std::vector<std::string> names;
    for (const auto& m : monomials_of_degree(3, 3)) {
      names.push_back("c" + std::to_string(m[0]) + std::to_string(m[1]) + std::to_string(m[2]));
    }
    return VarSet(names);
  }();
  return vars;
}

std::vector<Scalar> cubic_coefficients(const MultiPoly& f) {
  if (f.vars().size() != 3) throw Error("dimension_mismatch", "ternary cubic expected");
  if (!f.is_zero() && f.homogeneous_degree() != std::optional<unsigned long>(3)) {
    throw Error("wrong_degree", "ternary cubic expected");
  }
  std::vector<Scalar> c;
  for (const auto& m : monomials_of_degree(3, 3)) c.push_back(f.coefficient(m));
  return c;
}

Scalar evaluate_on_cubic(const MultiPoly& invariant, const MultiPoly& f) {
  const std::vector<Scalar> coeffs = cubic_coefficients(f);
  const Domain& d = f.domain();
  if (d.kind() != DomainKind::Integer) {
    std::vector<Scalar> pt = coeffs;
    return evaluate(invariant.to_domain(d), pt);
  }
  const Domain qq = Domain::rationals();
  std::vector<Scalar> pt;
  for (const auto& c : coeffs) pt.push_back(c.to_domain(qq));
  const Scalar v = evaluate(invariant.to_domain(qq), pt);
  if (v.rational_value().get_den() == 1) return v.to_domain(d);
  return v;
}

const MultiPoly& cubic_I_poly() {
  static const MultiPoly p = parse_poly(kCubicIText, cubic_coefficient_vars(), Domain::rationals());
  return p;
}

const MultiPoly& cubic_J_poly() {
  static const MultiPoly p = parse_poly(kCubicJText, cubic_coefficient_vars(), Domain::rationals());
  return p;
}

Scalar cubic_I(const MultiPoly& f) { return evaluate_on_cubic(cubic_I_poly(), f); }
Scalar cubic_J(const MultiPoly& f) { return evaluate_on_cubic(cubic_J_poly(), f); }

Scalar delta_from_IJ(const Scalar& I, const Scalar& J) {
  const mpq_class i = I.rational_value(), j = J.rational_value();
  return Scalar::rational(mpq_class((4 * i * i * i - j * j) / 27));
}

}  // namespace ternary
