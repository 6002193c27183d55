#include <gtest/gtest.h>

#include "test_support.hpp"
#include "ternary/class22.hpp"
#include "ternary/error.hpp"
#include "ternary/gl3.hpp"
#include "ternary/poly_io.hpp"
#include "ternary/random.hpp"
#include "ternary/rep22.hpp"

using namespace ternary;

namespace {

MultiPoly P(const std::string& s) { return parse_poly(s); }

MultiPoly fixture(const std::string& name) { return read_poly_file(std::string(TERNARY_FIXTURE_DIR) + "/" + name); }

std::string error_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return "none";
}

std::vector<mpq_class> coefficient_vector(const MultiPoly& f) {
  std::vector<mpq_class> v;
  const MultiPoly g = f.to_domain(Domain::rationals());
  for (const auto& mx : monomials_of_degree(3, 2)) {
    for (const auto& mz : monomials_of_degree(3, 2)) {
      v.push_back(g.coefficient({mx[0], mx[1], mx[2], mz[0], mz[1], mz[2]}).rational_value());
    }
  }
  return v;
}

std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Membership of h in span{sigma·x_i z_j} by a rank computation.
bool in_sigma_ideal(const MultiPoly& h) {
  const Domain Q = Domain::rationals();
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      rows.push_back(coefficient_vector(sigma_form(Q) * MultiPoly::variable(VarSet::xz(), Q, i) *
                                        MultiPoly::variable(VarSet::xz(), Q, 3 + j)));
    }
  }
  const std::size_t base = rank(rows);
  rows.push_back(coefficient_vector(h));
  return rank(rows) == base;
}

// I_x at a point a, straight from the definition: the quadratic z -> f(a, z),
// its symmetric matrix Q, and a·Adj(Q)·a^t via explicit cofactors.
mpq_class ix_at_point(const MultiPoly& f, const std::array<mpq_class, 3>& a) {
  const MultiPoly g = f.to_domain(Domain::rationals());
  mpq_class q[3][3];
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      mpq_class c = 0;
      for (const auto& [m, s] : g.terms()) {
        Monomial z{m[3], m[4], m[5]};
        Monomial want{0, 0, 0};
        want[i] += 1;
        want[j] += 1;
        if (z != want) continue;
        mpq_class t = s.rational_value();
        for (std::size_t k = 0; k < 3; ++k) {
          for (Exponent e = 0; e < m[k]; ++e) t *= a[k];
        }
        c += t;
      }
      q[i][j] = q[j][i] = i == j ? c : mpq_class(c / 2);
    }
  }
  mpq_class adj[3][3];
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = q[r0][c0] * q[r1][c1] - q[r0][c1] * q[r1][c0];
    }
  }
  mpq_class s = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s += a[i] * adj[i][j] * a[j];
  return s;
}

}  // namespace

TEST(Canonicalize, SigmaSquaredIsZero) { EXPECT_TRUE(canonicalize(fixture("sigma2.txt")).is_zero()); }

TEST(Canonicalize, IdempotentAndCosetInvariant) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Domain d = i % 2 ? Domain::integers() : Domain::prime_field(101);
    const MultiPoly f = random_bihomogeneous(rng, d, 2, 2);
    const MultiPoly L = random_bihomogeneous(rng, d, 1, 1);
    const Class22 c = canonicalize(f);
    EXPECT_EQ(canonicalize(c.representative()), c);
    EXPECT_EQ(canonicalize(f + L * sigma_form(d)), c);
  }
}

TEST(Canonicalize, SoundAgainstLinearAlgebra) {
  Rng rng(2);
  const Domain Q = Domain::rationals();
  for (int i = 0; i < 100; ++i) {
    const MultiPoly f = random_bihomogeneous(rng, Q, 2, 2, 3);
    MultiPoly g = f + random_bihomogeneous(rng, Q, 1, 1, 3) * sigma_form(Q);
    if (i % 2) g += random_bihomogeneous(rng, Q, 2, 2, 1);
    EXPECT_EQ(canonicalize(f) == canonicalize(g), in_sigma_ideal(f - g));
  }
}

TEST(Canonicalize, WrongBidegree) {
  EXPECT_EQ(error_kind([] { canonicalize(P("x1^3*z1")); }), "wrong_bidegree");
}

TEST(Gram, SingleMonomials) {
  const Domain Q = Domain::rationals();
  const GramPair g = gram_pair(canonicalize(P("x1^2*z2^2")));
  EXPECT_EQ(embed(g.qz[0], VarSet::xz()), parse_poly("z2^2", VarSet::xz(), Q));
  EXPECT_EQ(embed(g.qx[4], VarSet::xz()), parse_poly("x1^2", VarSet::xz(), Q));
  for (std::size_t k : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u}) EXPECT_TRUE(g.qz[k].is_zero());

  const GramPair h = gram_pair_raw(P("x1*x2*z3^2").to_domain(Q));
  EXPECT_EQ(embed(h.qz[1], VarSet::xz()), parse_poly("1/2*z3^2", VarSet::xz(), Q));
  EXPECT_EQ(h.qz[1], h.qz[3]);
}

TEST(Gram, ContractionRoundTrip) {
  Rng rng(3);
  const Domain Q = Domain::rationals();
  for (int i = 0; i < 100; ++i) {
    const MultiPoly f = random_bihomogeneous(rng, Q, 2, 2);
    const GramPair g = gram_pair_raw(f);
    MultiPoly viaz(VarSet::xz(), Q), viax(VarSet::xz(), Q);
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        EXPECT_EQ(g.qx[3 * a + b], g.qx[3 * b + a]);
        const MultiPoly za = MultiPoly::variable(VarSet::xz(), Q, 3 + a), zb = MultiPoly::variable(VarSet::xz(), Q, 3 + b);
        const MultiPoly xa = MultiPoly::variable(VarSet::xz(), Q, a), xb = MultiPoly::variable(VarSet::xz(), Q, b);
        viaz += za * embed(g.qx[3 * a + b], VarSet::xz()) * zb;
        viax += xa * embed(g.qz[3 * a + b], VarSet::xz()) * xb;
      }
    }
    EXPECT_EQ(viaz, f);
    EXPECT_EQ(viax, f);
  }
}

TEST(Gram, CharacteristicTwoRejected) {
  EXPECT_EQ(error_kind([] { gram_pair(reduce_mod_p(canonicalize(P("x1^2*z2^2")), 2)); }), "characteristic_two");
}

TEST(Covariants, DiagonalExamples) {
  EXPECT_EQ(covariant_Ix(canonicalize(fixture("v22_diagonal.txt"))), parse_poly("3*x1^2*x2^2*x3^2", VarSet::x123()));
  EXPECT_EQ(covariant_Iz(canonicalize(fixture("v22_diagonal.txt"))), parse_poly("3*z1^2*z2^2*z3^2", VarSet::z123()));
  EXPECT_EQ(covariant_Ix(canonicalize(fixture("v22_cyclic.txt"))),
            parse_poly("x1^4*x2^2 + x2^4*x3^2 + x3^4*x1^2", VarSet::x123()));
  const Class22 zero = canonicalize(MultiPoly(VarSet::xz(), Domain::rationals()));
  EXPECT_TRUE(covariant_Ix(zero).is_zero());
  EXPECT_TRUE(covariant_Iz(zero).is_zero());
}

TEST(Covariants, MatchPointwiseDefinition) {
  Rng rng(4);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int i = 0; i < 20; ++i) {
    const MultiPoly f = random_bihomogeneous(rng, Domain::integers(), 2, 2);
    const MultiPoly ix = covariant_Ix(canonicalize(f)).to_domain(Domain::rationals());
    for (int k = 0; k < 5; ++k) {
      const std::array<mpq_class, 3> a{dist(rng), dist(rng), dist(rng)};
      const std::vector<Scalar> pt{Scalar::rational(a[0]), Scalar::rational(a[1]), Scalar::rational(a[2])};
      EXPECT_EQ(evaluate(ix, pt).rational_value(), ix_at_point(f, a));
    }
  }
}

TEST(Covariants, SexticDegrees) {
  Rng rng(5);
  const Class22 c = canonicalize(random_bihomogeneous(rng, Domain::prime_field(101), 2, 2));
  EXPECT_EQ(covariant_Ix(c).homogeneous_degree(), 6u);
  EXPECT_EQ(covariant_Iz(c).homogeneous_degree(), 6u);
}

TEST(WellDefined, RandomAndSymbolic) {
  Rng rng(6);
  for (const Domain& d : {Domain::rationals(), Domain::prime_field(101)}) {
    for (int i = 0; i < 20; ++i) {
      const MultiPoly f = random_bihomogeneous(rng, d, 2, 2);
      EXPECT_TRUE(verify_well_defined(f, random_bihomogeneous(rng, d, 1, 1)));
      EXPECT_TRUE(verify_well_defined(f, MultiPoly(VarSet::xz(), d)));
    }
  }
  EXPECT_TRUE(verify_well_defined_symbolic(random_bihomogeneous(rng, Domain::rationals(), 2, 2)));
  EXPECT_TRUE(verify_well_defined_symbolic(std::nullopt));
}

TEST(Covariants, TransformLaws) {
  Rng rng(7);
  for (const Domain& d : {Domain::prime_field(101), Domain::rationals()}) {
    for (int i = 0; i < 10; ++i) {
      const Mat3 g = random_gl3(rng, d, 4);
      const Class22 F = canonicalize(random_bihomogeneous(rng, d, 2, 2, 5));
      const Class22 G = act_v22(g, F);
      EXPECT_EQ(covariant_Ix(G), det3(g).pow(2) * substitute_linear(covariant_Ix(F), g));
      EXPECT_EQ(covariant_Iz(G), substitute_linear(covariant_Iz(F), cofactor_delta(g)));
    }
  }
}

TEST(Tangency, Examples) {
  const std::uint64_t p = 11;
  const Domain F = Domain::prime_field(p);
  const std::array<Scalar, 3> e1{Scalar(F, 1L), Scalar(F, 0L), Scalar(F, 0L)};

  const Class22 cyc = reduce_mod_p(canonicalize(fixture("v22_cyclic.txt")), p);
  const auto t = tangency_test(cyc, e1);
  EXPECT_FALSE(t.degenerate);
  EXPECT_TRUE(t.restricted_disc.is_zero());
  EXPECT_TRUE(evaluate(covariant_Ix(cyc), e1).is_zero());

  const Class22 diag = reduce_mod_p(canonicalize(fixture("v22_diagonal.txt")), p);
  EXPECT_TRUE(tangency_test(diag, e1).degenerate);
  EXPECT_TRUE(tangency_test(reduce_mod_p(canonicalize(fixture("sigma2.txt")), p), e1).degenerate);
}

TEST(Tangency, CharacteristicTwo) {
  const Domain F2 = Domain::prime_field(2);
  const std::array<Scalar, 3> e1{Scalar(F2, 1L), Scalar(F2, 0L), Scalar(F2, 0L)};
  EXPECT_EQ(error_kind([&] { tangency_test(reduce_mod_p(canonicalize(P("x1^2*z2^2")), 2), e1); }),
            "characteristic_two");
}

TEST(BranchLocus, GenericClassesMatchCovariants) {
  Rng rng(8);
  int checked = 0;
  std::set<std::string> pairings;
  for (int draw = 0; draw < 60 && checked < 3; ++draw) {
    const Class22 F = canonicalize(random_bihomogeneous(rng, Domain::integers(), 2, 2));
    if (!is_generic_mod_p(F, 11)) continue;
    const auto rep = branch_locus_check(reduce_mod_p(F, 11));
    EXPECT_TRUE(rep.ok()) << rep.to_json().dump();
    EXPECT_EQ(rep.points, 133u);
    pairings.insert(rep.x_projection_branch + "/" + rep.z_projection_branch);
    ++checked;
  }
  EXPECT_EQ(checked, 3);
  EXPECT_EQ(pairings, std::set<std::string>{"I_x/I_z"});
}

TEST(BranchLocus, DegenerateInputsAreReported) {
  const Domain F = Domain::prime_field(11);
  EXPECT_EQ(error_kind([&] { branch_locus_check(canonicalize(MultiPoly(VarSet::xz(), F))); }), "degenerate_point");
  EXPECT_EQ(error_kind([] { branch_locus_check(reduce_mod_p(canonicalize(fixture("v22_diagonal.txt")), 11)); }),
            "degenerate_point");
}

TEST(Genericity, Examples) {
  EXPECT_FALSE(is_generic_mod_p(canonicalize(fixture("sigma2.txt")), 11));
  // I_x = 3 x1^2 x2^2 x3^2 is singular everywhere along the coordinate lines.
  const auto rep = genericity_mod_p(canonicalize(fixture("v22_diagonal.txt")), 11);
  EXPECT_FALSE(rep.generic);
  EXPECT_FALSE(rep.ix_smooth);
  EXPECT_EQ(error_kind([] { is_generic_mod_p(canonicalize(fixture("v22_cyclic.txt")), 2); }), "characteristic_two");
  EXPECT_EQ(error_kind([] { is_generic_mod_p(canonicalize(fixture("v22_cyclic.txt")), 3); }), "unreliable_prime");
}

TEST(Integrality, ProbeFindsQuarterIntegers) {
  // Integer classes can have covariants with denominator 4, e.g. the class of
  // x1 x2 z1 z2.
  EXPECT_EQ(covariant_Ix(canonicalize(P("x1*x2*z1*z2"))), parse_poly("-1/4*x1^2*x2^2*x3^2", VarSet::x123()));
  const auto probe = integrality_probe(1, 40);
  EXPECT_EQ(probe.samples, 40u);
  EXPECT_GT(probe.nonintegral_x, 0u);
  EXPECT_EQ(mpz_class(4) % probe.max_denominator, 0);
}
