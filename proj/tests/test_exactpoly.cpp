#include <gtest/gtest.h>

#include "test_support.hpp"
#include "ternary/error.hpp"
#include "ternary/poly.hpp"
#include "ternary/poly_io.hpp"
#include "ternary/random.hpp"

using namespace ternary;

namespace {

MultiPoly P(const std::string& s) { return parse_poly(s); }

}  // namespace

TEST(Scalar, RationalsStayReduced) {
  const Domain Q = Domain::rationals();
  Scalar a = Scalar::parse("6/4", Q);
  EXPECT_EQ(a.to_string(), "3/2");
  EXPECT_EQ((a * Scalar::parse("2/3", Q)).to_string(), "1");
  EXPECT_EQ((a - a).to_string(), "0");
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Domain F = Domain::prime_field(7);
  const Scalar three(F, 3L);
  EXPECT_EQ((three * three.inverse()).to_string(), "1");
  EXPECT_EQ(Scalar(F, -1L).to_string(), "6");
  EXPECT_EQ(three.pow(6).to_string(), "1");  // Fermat
}

TEST(Scalar, MixedDomainsAreRejected) {
  EXPECT_THROW(Scalar(Domain::integers(), 1L) + Scalar(Domain::prime_field(5), 1L), Error);
}

TEST(Scalar, IntegerDivisionMustBeExact) {
  const Domain Z = Domain::integers();
  EXPECT_EQ((Scalar(Z, 12L) / Scalar(Z, 4L)).to_string(), "3");
  try {
    (void)(Scalar(Z, 3L) / Scalar(Z, 2L));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "inexact_division");
  }
}

TEST(Scalar, NonPrimeModulusRejected) { EXPECT_THROW(Domain::prime_field(9), Error); }

TEST(Poly, ParseFormatRoundTrip) {
  Rng rng(3);
  for (const Domain& d : {Domain::integers(), Domain::rationals(), Domain::prime_field(101)}) {
    for (unsigned deg = 0; deg <= 4; ++deg) {
      const MultiPoly f = random_form(rng, VarSet::xyz(), d, deg);
      EXPECT_EQ(parse_poly(format_poly(f), f.vars(), f.domain()), f);
      EXPECT_EQ(poly_from_json(poly_to_json(f)), f);
    }
  }
}

TEST(Poly, ParseInfersRing) {
  EXPECT_EQ(P("x^2 + y").vars(), VarSet::xyz());
  EXPECT_EQ(P("x1*z2").vars(), VarSet::xz());
  EXPECT_EQ(P("1/2*x").domain(), Domain::rationals());
  EXPECT_EQ(P("3*x - y").domain(), Domain::integers());
}

TEST(Poly, MalformedInputIsParseError) {
  for (const char* bad : {"x^", "2**x", "x + (y", "w^2", "1/0*x"}) {
    EXPECT_THROW(parse_poly(bad), ParseError) << bad;
  }
}

TEST(Poly, LeadingTermIsGrlexMaximal) {
  const MultiPoly f = P("z^3 + x*y^2 + x^2*z + y");
  EXPECT_EQ(f.leading_monomial(), (Monomial{2, 0, 1}));
}

TEST(Poly, MonomialCountsAndOrder) {
  const auto m = monomials_of_degree(3, 4);
  EXPECT_EQ(m.size(), 15u);
  for (std::size_t i = 1; i < m.size(); ++i) EXPECT_TRUE(GrlexGreater{}(m[i - 1], m[i]));
}

TEST(Poly, ZeroCoefficientsNeverStored) {
  MultiPoly f = P("x^2 + y^2");
  f -= P("x^2");
  EXPECT_EQ(f.size(), 1u);
  EXPECT_EQ(f, P("y^2"));
}

TEST(Poly, MultiplicationMatchesExpansion) {
  EXPECT_EQ(P("x + y") * P("x - y"), P("x^2 - y^2"));
  EXPECT_EQ(P("x + y + z").pow(3).size(), 10u);
}

TEST(Poly, SubstituteLinearUsesRowVectors) {
  // f(v·M): x -> x + 2y when M = [[1,0,0],[2,1,0],[0,0,1]].
  const Domain Z = Domain::integers();
  Mat3 m = Mat3::identity(Z);
  m(1, 0) = Scalar(Z, 2L);
  EXPECT_EQ(substitute_linear(P("x^2"), m), P("x^2 + 4*x*y + 4*y^2"));
}

TEST(Poly, SubstitutionComposesReversed) {
  Rng rng(11);
  const Domain Q = Domain::rationals();
  for (int i = 0; i < 20; ++i) {
    const MultiPoly f = random_form(rng, VarSet::xyz(), Q, 3);
    const Mat3 a = random_gl3(rng, Q), b = random_gl3(rng, Q);
    EXPECT_EQ(substitute_linear(substitute_linear(f, a), b), substitute_linear(f, b * a));
  }
}

TEST(Poly, EulerIdentity) {
  Rng rng(5);
  for (const Domain& d : {Domain::integers(), Domain::prime_field(10007)}) {
    for (unsigned deg = 1; deg <= 6; ++deg) {
      const MultiPoly f = random_form(rng, VarSet::xyz(), d, deg);
      MultiPoly lhs(f.vars(), d);
      for (std::size_t v = 0; v < 3; ++v) lhs += MultiPoly::variable(f.vars(), d, v) * partial_derivative(f, v);
      EXPECT_EQ(lhs, Scalar(d, static_cast<long>(deg)) * f);
    }
  }
}

TEST(Poly, FrobeniusOverF2) {
  // (x+y+z)^4 = x^4+y^4+z^4 in characteristic 2.
  EXPECT_EQ(reduce_mod_p(P("x + y + z").pow(4), 2), reduce_mod_p(P("x^4 + y^4 + z^4"), 2));
}

TEST(Poly, ReduceModPDropsMultiplesOfP) {
  EXPECT_EQ(reduce_mod_p(P("5*x^2 + 6*y^2"), 5), reduce_mod_p(P("y^2"), 5));
  EXPECT_THROW(reduce_mod_p(P("1/5*x"), 5), Error);
}

TEST(Poly, ContentAndPrimitivePart) {
  const auto [c, g] = content_and_primitive(P("-6*x^2 + 4*y^2"));
  EXPECT_EQ(c.to_string(), "-2");
  EXPECT_EQ(g, P("3*x^2 - 2*y^2"));
}

TEST(Poly, EvaluateAtPoint) {
  const Domain Z = Domain::integers();
  const std::vector<Scalar> pt{Scalar(Z, 1L), Scalar(Z, 2L), Scalar(Z, 3L)};
  EXPECT_EQ(evaluate(P("x*y*z + z^2"), pt).to_string(), "15");
}

TEST(Poly, MatrixJsonRoundTrip) {
  Rng rng(2);
  const Mat3 m = random_gl3(rng, Domain::rationals());
  EXPECT_EQ(mat3_from_json(mat3_to_json(m)), m);
}

TEST(Poly, ArithmeticExamples) {
  EXPECT_EQ(P("x + y") + P("-x"), P("y"));
  EXPECT_TRUE((MultiPoly(VarSet::xyz(), Domain::integers()) * P("x^3 + 7*y")).is_zero());
  EXPECT_THROW(P("x") + parse_poly("x", VarSet::xyz(), Domain::rationals()), Error);
  EXPECT_THROW(P("x") + P("x1*z1"), Error);
}

TEST(Poly, RingAxiomsOnRandomSamples) {
  Rng rng(21);
  for (const Domain& d : {Domain::integers(), Domain::rationals(), Domain::prime_field(13)}) {
    for (int i = 0; i < 20; ++i) {
      const MultiPoly a = random_form(rng, VarSet::xyz(), d, 1 + i % 3);
      const MultiPoly b = random_form(rng, VarSet::xyz(), d, 2);
      const MultiPoly c = random_form(rng, VarSet::xyz(), d, 1);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + b, b + a);
      if (!d.is_prime_field()) EXPECT_EQ((a * b).total_degree(), a.total_degree() + b.total_degree());
    }
  }
}

TEST(Poly, SubstitutionExamples) {
  const Domain Z = Domain::integers();
  EXPECT_EQ(substitute_linear(P("x"), Mat3::identity(Z)), P("x"));
  Mat3 swap(Z);
  swap(0, 1) = swap(1, 0) = swap(2, 2) = Scalar(Z, 1L);
  EXPECT_EQ(substitute_linear(P("x"), swap), P("y"));
  Mat3 ones(Z);
  for (std::size_t k = 0; k < 9; ++k) ones(k / 3, k % 3) = Scalar(Z, 1L);
  EXPECT_EQ(substitute_linear(P("x + y + z"), ones), P("3*x + 3*y + 3*z"));
}

TEST(Poly, PartialDerivativeExamples) {
  EXPECT_EQ(partial_derivative(P("x^2"), "x"), P("2*x"));
  EXPECT_TRUE(partial_derivative(P("y^3"), "x").is_zero());
  EXPECT_THROW(partial_derivative(P("x"), "w"), Error);
}

TEST(Poly, EulerOverRationals) {
  Rng rng(22);
  const Domain Q = Domain::rationals();
  for (int i = 0; i < 100; ++i) {
    const unsigned deg = 1 + i % 7;
    const MultiPoly f = random_form(rng, VarSet::xyz(), Q, deg);
    MultiPoly lhs(f.vars(), Q);
    for (const char* v : {"x", "y", "z"}) lhs += MultiPoly::variable(f.vars(), Q, v) * partial_derivative(f, v);
    EXPECT_EQ(lhs, Scalar(Q, static_cast<long>(deg)) * f);
  }
}

TEST(Poly, ContentExamples) {
  auto [c1, g1] = content_and_primitive(P("6*x + 9*y"));
  EXPECT_EQ(c1.to_string(), "3");
  EXPECT_EQ(g1, P("2*x + 3*y"));
  auto [c2, g2] = content_and_primitive(P("-2*x"));
  EXPECT_EQ(c2.to_string(), "-2");
  EXPECT_EQ(g2, P("x"));
  auto [c3, g3] = content_and_primitive(P("x^2 + 3*y^2"));
  EXPECT_EQ(c3.to_string(), "1");
  EXPECT_EQ(g3, P("x^2 + 3*y^2"));
  EXPECT_THROW(content_and_primitive(MultiPoly(VarSet::xyz(), Domain::integers())), Error);
}

TEST(Poly, ReductionIsARingHomomorphism) {
  Rng rng(23);
  for (std::uint64_t p : {2u, 7u, 10007u}) {
    for (int i = 0; i < 20; ++i) {
      const MultiPoly a = random_form(rng, VarSet::xyz(), Domain::integers(), 2, 50);
      const MultiPoly b = random_form(rng, VarSet::xyz(), Domain::integers(), 2, 50);
      EXPECT_EQ(reduce_mod_p(a * b, p), reduce_mod_p(a, p) * reduce_mod_p(b, p));
      EXPECT_EQ(reduce_mod_p(a - b, p), reduce_mod_p(a, p) - reduce_mod_p(b, p));
      EXPECT_EQ(reduce_mod_p(reduce_mod_p(a, p), p), reduce_mod_p(a, p));
    }
  }
  EXPECT_THROW(reduce_mod_p(P("x"), 6), Error);
}
