#pragma once

#include "ternary/class22.hpp"
#include "ternary/poly.hpp"

namespace ternary {

// All actions use row vectors: gamma·f(v) = f(v·gamma). Under this convention
//   act_vn(g1, act_vn(g2, f)) == act_vn(g1 * g2, f),
// i.e. composition is an anti-homomorphism in the matrix product.

Scalar det3(const Mat3& m);

// Classical adjoint: m * adjugate3(m) == det3(m) * I, also for singular m.
Mat3 adjugate3(const Mat3& m);

// delta(gamma) = Adj(gamma)^t, equal to det(gamma) (gamma^-1)^t when
// invertible. Multiplicative: delta(a b) = delta(a) delta(b).
Mat3 cofactor_delta(const Mat3& m);

// Inverse over a field (QQ or GF(p)); singular_matrix otherwise.
Mat3 inverse3(const Mat3& m);

// gamma·f(x, y, z) = f((x, y, z)·gamma) for a ternary form f.
MultiPoly act_vn(const Mat3& gamma, const MultiPoly& f);

// gamma·F(x, z) = F(x·gamma, z·delta(gamma)), re-canonicalized.
Class22 act_v22(const Mat3& gamma, const Class22& F);

// Same substitution on a raw (2,2) form, without canonicalizing.
MultiPoly act_v22_raw(const Mat3& gamma, const MultiPoly& f);

}  // namespace ternary
