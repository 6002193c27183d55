#include <gtest/gtest.h>

#include "test_support.hpp"
#include "ternary/class22.hpp"
#include "ternary/elimination.hpp"
#include "ternary/error.hpp"
#include "ternary/gl3.hpp"
#include "ternary/poly_io.hpp"
#include "ternary/random.hpp"

using namespace ternary;

namespace {

Mat3 random_matrix(Rng& rng, const Domain& d, bool singular) {
  Mat3 m(d);
  for (std::size_t k = 0; k < 9; ++k) m(k / 3, k % 3) = random_scalar(rng, d, 6);
  if (singular) {
    for (std::size_t j = 0; j < 3; ++j) m(2, j) = m(0, j) - m(1, j);
  }
  return m;
}

// Cofactor expansion along the first row, written out independently of det3.
Scalar det_by_permutations(const Mat3& m) {
  static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  Scalar s(m.domain(), 0L);
  for (int k = 0; k < 6; ++k) {
    Scalar t = m(0, perms[k][0]) * m(1, perms[k][1]) * m(2, perms[k][2]);
    s += k < 3 ? t : -t;
  }
  return s;
}

}  // namespace

TEST(Gl3, DeterminantAgreesWithLeibniz) {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const Mat3 m = random_matrix(rng, Domain::integers(), false);
    EXPECT_EQ(det3(m), det_by_permutations(m));
  }
}

TEST(Gl3, AdjugateIdentityIncludingSingular) {
  Rng rng(2);
  int n = 0;
  for (const Domain& d : {Domain::integers(), Domain::prime_field(13)}) {
    for (int i = 0; i < 100; ++i, ++n) {
      const Mat3 m = random_matrix(rng, d, i % 5 == 0);
      const Mat3 target = Mat3::scalar(det3(m));
      EXPECT_EQ(m * adjugate3(m), target);
      EXPECT_EQ(adjugate3(m) * m, target);
    }
  }
  EXPECT_EQ(n, 200);
}

TEST(Gl3, DeltaIsMultiplicative) {
  Rng rng(3);
  const Domain Z = Domain::integers();
  EXPECT_EQ(cofactor_delta(Mat3::identity(Z)), Mat3::identity(Z));
  for (int i = 0; i < 50; ++i) {
    const Mat3 a = random_gl3(rng, Z), b = random_gl3(rng, Z);
    EXPECT_EQ(cofactor_delta(a * b), cofactor_delta(a) * cofactor_delta(b));
  }
}

TEST(Gl3, DeltaEqualsDetTimesInverseTranspose) {
  Rng rng(4);
  const Domain Q = Domain::rationals();
  for (int i = 0; i < 20; ++i) {
    const Mat3 a = random_gl3(rng, Q);
    EXPECT_EQ(cofactor_delta(a), det3(a) * inverse3(a).transpose());
  }
}

TEST(Gl3, InverseOfSingularThrows) {
  const Mat3 z(Domain::rationals());
  EXPECT_THROW(inverse3(z), Error);
}

TEST(Gl3, ActionExamples) {
  const Domain Z = Domain::integers();
  const MultiPoly f = parse_poly("x^2 + 3*y*z");
  EXPECT_EQ(act_vn(Mat3::identity(Z), f), f);
  Mat3 g = Mat3::identity(Z);
  g(2, 2) = Scalar(Z, 2L);
  EXPECT_EQ(act_vn(g, parse_poly("z^2")), parse_poly("4*z^2"));
}

TEST(Gl3, ActionCompositionLaw) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Domain d = i % 2 ? Domain::rationals() : Domain::prime_field(101);
    const Mat3 a = random_gl3(rng, d), b = random_gl3(rng, d);
    const MultiPoly f = random_form(rng, VarSet::xyz(), d, 1 + i % 4);
    EXPECT_EQ(act_vn(a, act_vn(b, f)), act_vn(a * b, f));
  }
}

TEST(Gl3, ActionRejectsDomainMismatch) {
  EXPECT_THROW(act_vn(Mat3::identity(Domain::rationals()), parse_poly("x")), Error);
}

TEST(Gl3, CenterScalesCubicDiscriminantBy36) {
  Rng rng(6);
  const Domain Z = Domain::integers();
  const MultiPoly f = random_form(rng, VarSet::xyz(), Z, 3);
  const Scalar u(Z, 2L);
  const MultiPoly g = act_vn(Mat3::scalar(u), f);
  EXPECT_EQ(g, u.pow(3) * f);
  EXPECT_EQ(discriminant_n(g, false).raw, u.pow(36) * discriminant_n(f, false).raw);
}

TEST(Gl3, V22Examples) {
  Rng rng(7);
  const Domain Q = Domain::rationals();
  const Class22 F = canonicalize(random_bihomogeneous(rng, Q, 2, 2));
  EXPECT_EQ(act_v22(Mat3::identity(Q), F), F);
  const Scalar u(Q, 3L);
  EXPECT_EQ(act_v22(Mat3::scalar(u), F), canonicalize(u.pow(6) * F.representative()));
  // An ideal element maps to the zero class.
  const Domain F7 = Domain::prime_field(7);
  const MultiPoly ideal = sigma_form(F7) * reduce_mod_p(parse_poly("x1*z1"), 7);
  for (int i = 0; i < 10; ++i) EXPECT_TRUE(act_v22(random_gl3(rng, F7), canonicalize(ideal)).is_zero());
}

TEST(Gl3, V22InverseAndZero) {
  Rng rng(8);
  const Domain Q = Domain::rationals();
  for (int i = 0; i < 20; ++i) {
    const Mat3 g = random_gl3(rng, Q);
    const Class22 F = canonicalize(random_bihomogeneous(rng, Q, 2, 2));
    EXPECT_EQ(act_v22(inverse3(g), act_v22(g, F)), F);
    EXPECT_TRUE(act_v22(g, canonicalize(MultiPoly(VarSet::xz(), Q))).is_zero());
  }
}

TEST(Gl3, V22CompositionLaw) {
  Rng rng(9);
  const Domain F = Domain::prime_field(101);
  for (int i = 0; i < 20; ++i) {
    const Mat3 a = random_gl3(rng, F), b = random_gl3(rng, F);
    const Class22 c = canonicalize(random_bihomogeneous(rng, F, 2, 2));
    EXPECT_EQ(act_v22(a, act_v22(b, c)), act_v22(a * b, c));
  }
}

TEST(Gl3, V22RejectsSingular) {
  const Domain Q = Domain::rationals();
  EXPECT_THROW(act_v22(Mat3(Q), canonicalize(MultiPoly(VarSet::xz(), Q))), Error);
}

TEST(Gl3, DeterminantAndAdjugateExamples) {
  const Domain Z = Domain::integers();
  Mat3 d(Z);
  d(0, 0) = Scalar(Z, 2L);
  d(1, 1) = Scalar(Z, 3L);
  d(2, 2) = Scalar(Z, 5L);
  EXPECT_EQ(det3(Mat3::identity(Z)).to_string(), "1");
  EXPECT_EQ(det3(d).to_string(), "30");
  Mat3 adj(Z);
  adj(0, 0) = Scalar(Z, 15L);
  adj(1, 1) = Scalar(Z, 10L);
  adj(2, 2) = Scalar(Z, 6L);
  EXPECT_EQ(adjugate3(d), adj);
  EXPECT_EQ(cofactor_delta(d), adj);
  EXPECT_EQ(adjugate3(Mat3::identity(Z)), Mat3::identity(Z));

  Mat3 twin(Z), rank1(Z);
  for (std::size_t j = 0; j < 3; ++j) {
    twin(0, j) = twin(1, j) = Scalar(Z, static_cast<long>(j + 1));
    twin(2, j) = Scalar(Z, static_cast<long>(7 - j));
    for (std::size_t i = 0; i < 3; ++i) rank1(i, j) = Scalar(Z, static_cast<long>((i + 1) * (j + 2)));
  }
  EXPECT_TRUE(det3(twin).is_zero());
  EXPECT_EQ(adjugate3(rank1), Mat3(Z));
}

TEST(Gl3, DeltaMultiplicativeOverF7) {
  Rng rng(10);
  const Domain F = Domain::prime_field(7);
  for (int i = 0; i < 50; ++i) {
    const Mat3 a = random_gl3(rng, F), b = random_gl3(rng, F);
    EXPECT_EQ(cofactor_delta(a * b), cofactor_delta(a) * cofactor_delta(b));
  }
}
