#include "ternary/gl3.hpp"

#include "ternary/error.hpp"

namespace ternary {

Scalar det3(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3 adjugate3(const Mat3& m) {
  Mat3 a(m.domain());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // Adj(m)_{ij} = cofactor C_{ji}; cyclic indices absorb the sign.
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return a;
}

Mat3 cofactor_delta(const Mat3& m) { return adjugate3(m).transpose(); }

Mat3 inverse3(const Mat3& m) {
  if (!m.domain().is_field()) {
    throw Error("domain_mismatch", "matrix inverse needs QQ or GF(p) entries");
  }
  Scalar d = det3(m);
  if (d.is_zero()) throw Error("singular_matrix", "matrix is singular");
  return d.inverse() * adjugate3(m);
}

MultiPoly act_vn(const Mat3& gamma, const MultiPoly& f) {
  if (f.vars().size() != 3) throw Error("dimension_mismatch", "ternary form expected");
  if (!(gamma.domain() == f.domain())) {
    throw Error("domain_mismatch", "matrix over " + gamma.domain().name() + ", form over " +
                                       f.domain().name());
  }
  return substitute_linear(f, gamma);
}

MultiPoly act_v22_raw(const Mat3& gamma, const MultiPoly& f) {
  if (!(gamma.domain() == f.domain())) throw Error("domain_mismatch", "matrix/form domains");
  const Mat3 delta = cofactor_delta(gamma);
  SquareMatrix<6> block(gamma.domain());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      block(i, j) = gamma(i, j);
      block(3 + i, 3 + j) = delta(i, j);
    }
  }
  MultiPoly g = f.vars() == VarSet::xz() ? f : embed(f, VarSet::xz());
  return substitute_linear(g, block);
}

Class22 act_v22(const Mat3& gamma, const Class22& F) {
  if (det3(gamma).is_zero()) throw Error("singular_matrix", "gamma must be invertible");
  return canonicalize(act_v22_raw(gamma, F.representative()));
}

}  // namespace ternary
