#pragma once

#include <vector>

#include "ternary/poly.hpp"

namespace ternary {

// Coefficient variables c_abc of a ternary cubic sum c_abc x^a y^b z^c, named
// "c300", "c210", ... in descending grlex order of the monomials.
const VarSet& cubic_coefficient_vars();

// The ten coefficients of a ternary cubic in the order of
// cubic_coefficient_vars(). wrong_degree unless f is a cubic (or zero).
std::vector<Scalar> cubic_coefficients(const MultiPoly& f);

// Evaluates a polynomial in the c_abc at the coefficients of f. Integer input
// gives an integer whenever the value is integral, else a rational.
Scalar evaluate_on_cubic(const MultiPoly& invariant, const MultiPoly& f);

// The SL_3 invariants of degree 4 and 6, scaled so that
// 4 I^3 - J^2 = -256 Res(f_x, f_y, f_z) exactly, with I and J integral.
const MultiPoly& cubic_I_poly();
const MultiPoly& cubic_J_poly();
Scalar cubic_I(const MultiPoly& f);
Scalar cubic_J(const MultiPoly& f);

// (4 I^3 - J^2) / 27 over QQ.
Scalar delta_from_IJ(const Scalar& I, const Scalar& J);

}  // namespace ternary
