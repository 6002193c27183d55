#pragma once

#include <cstdint>
#include <random>

#include "ternary/poly.hpp"

namespace ternary {

// All randomized code paths draw from one engine type so that a seed fixes
// every report byte for byte.
using Rng = std::mt19937_64;

// Integers uniform in [-bound, bound]; rationals num/den with |num| <= bound,
// 1 <= den <= bound; residues uniform in [0, p).
Scalar random_scalar(Rng& rng, const Domain& d, long bound = 10);
Scalar random_nonzero_scalar(Rng& rng, const Domain& d, long bound = 10);

// Dense random homogeneous form of the given degree (every monomial drawn).
MultiPoly random_form(Rng& rng, const VarSet& vars, const Domain& d, unsigned degree,
                      long bound = 10);

// Dense random bihomogeneous form in x1..x3, z1..z3.
MultiPoly random_bihomogeneous(Rng& rng, const Domain& d, unsigned dx, unsigned dz,
                               long bound = 10);

// Random invertible 3x3 matrix (rejection on det = 0).
Mat3 random_gl3(Rng& rng, const Domain& d, long bound = 5);

// Random matrix with determinant 1: a product of unitriangular factors.
Mat3 random_sl3(Rng& rng, const Domain& d, long bound = 3);

}  // namespace ternary
