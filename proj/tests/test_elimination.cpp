#include <gtest/gtest.h>

#include "test_support.hpp"
#include "ternary/elimination.hpp"
#include "ternary/error.hpp"
#include "ternary/gl3.hpp"
#include "ternary/point_scan.hpp"
#include "ternary/poly_io.hpp"
#include "ternary/random.hpp"

using namespace ternary;

namespace {

MultiPoly P(const std::string& s) { return parse_poly(s); }

Scalar Z(long v) { return Scalar(Domain::integers(), v); }

// Plain Gaussian elimination over QQ; the test oracle for small determinants.
mpq_class det_rational(std::vector<mpq_class> a, std::size_t n) {
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = -det;
    }
    det *= a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpq_class f = a[i * n + k] / a[k * n + k];
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return det;
}

// Sylvester resultant of two binary forms of degree d given by coefficients of
// x^d, x^(d-1) y, ..., y^d.
mpq_class sylvester(const std::vector<mpq_class>& f, const std::vector<mpq_class>& g) {
  const std::size_t d = f.size() - 1, n = 2 * d;
  std::vector<mpq_class> m(n * n, 0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k <= d; ++k) {
      m[r * n + r + k] = f[k];
      m[(d + r) * n + r + k] = g[k];
    }
  }
  return det_rational(m, n);
}

std::vector<mpq_class> binary_coeffs_at_z0(const MultiPoly& g, unsigned d) {
  std::vector<mpq_class> c;
  for (unsigned i = 0; i <= d; ++i) c.push_back(g.coefficient({d - i, i, 0}).rational_value());
  return c;
}

// A form of degree n singular at (1:0:0): no x^n, x^(n-1) y, x^(n-1) z terms.
MultiPoly singular_at_e1(Rng& rng, unsigned n) {
  MultiPoly f = random_form(rng, VarSet::xyz(), Domain::integers(), n);
  MultiPoly g(f.vars(), f.domain());
  for (const auto& [m, c] : f.terms()) {
    if (m[0] + 1 < n) g.add_term(m, c);
  }
  return g;
}

}  // namespace

TEST(Resultant, LinearFormsGiveDeterminant) {
  EXPECT_EQ(macaulay_resultant(P("x"), P("y"), P("z")), Z(1));
  EXPECT_EQ(macaulay_resultant(P("2*x"), P("y"), P("z")), Z(2));
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const Mat3 m = random_gl3(rng, Domain::integers());
    std::array<MultiPoly, 3> g;
    for (std::size_t r = 0; r < 3; ++r) {
      g[r] = MultiPoly(VarSet::xyz(), Domain::integers());
      for (std::size_t c = 0; c < 3; ++c) {
        Monomial e{0, 0, 0};
        e[c] = 1;
        g[r].add_term(e, m(r, c));
      }
    }
    EXPECT_EQ(macaulay_resultant(g[0], g[1], g[2]), det3(m));
  }
}

TEST(Resultant, PowersOfVariables) {
  for (int d : {1, 2, 3, 4}) {
    const std::string e = std::to_string(d);
    EXPECT_EQ(macaulay_resultant(P("x^" + e), P("y^" + e), P("z^" + e)), Z(1)) << d;
  }
}

TEST(Resultant, AgreesWithSylvesterOracle) {
  // Res(g1, g2, z^d) = Res_binary(g1|z=0, g2|z=0)^d.
  Rng rng(2);
  for (unsigned d : {1u, 2u, 3u}) {
    MultiPoly zd = P("z^" + std::to_string(d));
    for (int i = 0; i < 8; ++i) {
      const MultiPoly g1 = random_form(rng, VarSet::xyz(), Domain::integers(), d, 5);
      const MultiPoly g2 = random_form(rng, VarSet::xyz(), Domain::integers(), d, 5);
      mpq_class expected = 1;
      const mpq_class s = sylvester(binary_coeffs_at_z0(g1, d), binary_coeffs_at_z0(g2, d));
      for (unsigned k = 0; k < d; ++k) expected *= s;
      EXPECT_EQ(macaulay_resultant(g1, g2, zd).rational_value(), expected) << d;
    }
  }
}

TEST(Resultant, MultihomogeneousOfDegreeDSquared) {
  Rng rng(3);
  for (unsigned d : {1u, 2u, 3u}) {
    std::array<MultiPoly, 3> g;
    for (auto& gi : g) gi = random_form(rng, VarSet::xyz(), Domain::integers(), d, 4);
    const Scalar base = macaulay_resultant(g[0], g[1], g[2]);
    EXPECT_EQ(macaulay_resultant(Z(3) * g[0], g[1], g[2]), Z(3).pow(d * d) * base);
    EXPECT_EQ(macaulay_resultant(g[0], Z(-2) * g[1], g[2]), Z(-2).pow(d * d) * base);
  }
}

TEST(Resultant, VanishesOnCommonZero) {
  // All three forms vanish at (1:1:1).
  Rng rng(4);
  for (unsigned d : {2u, 3u}) {
    std::array<MultiPoly, 3> g;
    const std::vector<Scalar> one{Z(1), Z(1), Z(1)};
    for (auto& gi : g) {
      gi = random_form(rng, VarSet::xyz(), Domain::integers(), d, 5);
      gi -= MultiPoly::constant(VarSet::xyz(), evaluate(gi, one)) * P("z").pow(d);
    }
    EXPECT_TRUE(macaulay_resultant(g[0], g[1], g[2]).is_zero());
  }
}

TEST(Resultant, RationalInputClearsDenominators) {
  const MultiPoly g1 = parse_poly("1/2*x", VarSet::xyz(), Domain::rationals());
  const MultiPoly g2 = parse_poly("y", VarSet::xyz(), Domain::rationals());
  const MultiPoly g3 = parse_poly("z", VarSet::xyz(), Domain::rationals());
  EXPECT_EQ(macaulay_resultant(g1, g2, g3).to_string(), "1/2");
}

TEST(Resultant, ModPMatchesReductionOfIntegerValue) {
  // Small primes hit the degenerate minor often, exercising both fallbacks.
  Rng rng(5);
  for (std::uint64_t p : {3u, 5u, 7u}) {
    for (unsigned d : {2u, 3u}) {
      for (int i = 0; i < 15; ++i) {
        std::array<MultiPoly, 3> g;
        for (auto& gi : g) gi = random_form(rng, VarSet::xyz(), Domain::integers(), d, 9);
        const Scalar r = macaulay_resultant(g[0], g[1], g[2]);
        const auto rp = macaulay_resultant(reduce_mod_p(g[0], p), reduce_mod_p(g[1], p), reduce_mod_p(g[2], p));
        EXPECT_EQ(rp, r.to_domain(Domain::prime_field(p))) << p << " " << d;
      }
    }
  }
}

TEST(Resultant, Errors) {
  auto kind = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return std::string("none");
  };
  EXPECT_EQ(kind([] { macaulay_resultant(P("x"), P("y^2"), P("z")); }), "degree_mismatch");
  EXPECT_EQ(kind([] { macaulay_resultant(P("x"), MultiPoly(VarSet::xyz(), Domain::integers()), P("z")); }),
            "zero_form");
}

TEST(Discriminant, Examples) {
  const auto q = discriminant_n(P("x^2 + y^2 + z^2"));
  EXPECT_EQ(q.raw, Z(8));
  EXPECT_EQ(q.degree_check, 3u);
  ASSERT_TRUE(q.constant && q.normalized);
  EXPECT_EQ(*q.constant * *q.normalized, q.raw);
  EXPECT_TRUE(discriminant_n(P("x*y*z")).raw.is_zero());
  EXPECT_TRUE(discriminant_n(P("x^4")).raw.is_zero());
  const auto f4 = discriminant_n(P("x^4 + y^4 + z^4"));
  EXPECT_EQ(f4.raw.integer_value(), mpz_class(1) << 54);
  EXPECT_EQ(f4.degree_check, 27u);
}

TEST(Discriminant, PreconditionErrors) {
  EXPECT_THROW(discriminant_n(P("x")), Error);
  EXPECT_THROW(discriminant_n(MultiPoly(VarSet::xyz(), Domain::integers())), Error);
  EXPECT_THROW(discriminant_n(P("x^2 + y")), Error);
}

TEST(Discriminant, QuadraticClosedFormUpToOneConstant) {
  Rng rng(6);
  std::optional<mpq_class> ratio;
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const MultiPoly f = random_form(rng, VarSet::xyz(), Domain::integers(), 2);
    auto c = [&](Monomial m) { return f.coefficient(m).rational_value(); };
    const mpq_class a = c({2, 0, 0}), b = c({0, 2, 0}), cc = c({0, 0, 2}), d = c({1, 1, 0}),
                    e = c({1, 0, 1}), g = c({0, 1, 1});
    // d multiplies xy, so d^2 pairs with the z^2 coefficient: the determinant
    // of the coefficient matrix [[2a,d,e],[d,2b,g],[e,g,2c]] is twice this.
    const mpq_class closed = 4 * a * b * cc + d * e * g - a * g * g - cc * d * d - b * e * e;
    const mpq_class norm = discriminant_n(f).normalized->rational_value();
    if (closed == 0) {
      EXPECT_EQ(norm, 0);
      continue;
    }
    if (!ratio) ratio = norm / closed;
    EXPECT_EQ(norm, *ratio * closed);
    ++checked;
  }
  EXPECT_GT(checked, 90);
  EXPECT_EQ(*ratio, 1);
}

TEST(Discriminant, HomogeneityDegree) {
  Rng rng(7);
  for (unsigned n : {2u, 3u, 4u}) {
    const MultiPoly f = random_form(rng, VarSet::xyz(), Domain::integers(), n, 5);
    const Scalar c = Z(-3);
    EXPECT_EQ(discriminant_n(c * f, false).raw, c.pow(3 * (n - 1) * (n - 1)) * discriminant_n(f, false).raw);
  }
}

TEST(Discriminant, CovarianceOverRationals) {
  Rng rng(8);
  for (unsigned n : {2u, 3u}) {
    const MultiPoly f = random_form(rng, VarSet::xyz(), Domain::rationals(), n, 4);
    const Mat3 g = random_gl3(rng, Domain::rationals(), 3);
    EXPECT_EQ(discriminant_n(act_vn(g, f), false).raw,
              det3(g).pow(n * (n - 1) * (n - 1)) * discriminant_n(f, false).raw);
  }
}

TEST(Normalization, CachedConstantsAreStableUnderResampling) {
  // A different seed must reproduce the cached gcd; an overestimate of the
  // content would show up here.
  for (unsigned n = 2; n <= 5; ++n) {
    EXPECT_EQ(derive_normalization_constant(n, 2, 32), normalization_constant(n)) << n;
  }
  EXPECT_EQ(normalization_constant(6), mpz_class("21936950640377856"));
}

TEST(Normalization, NormalizedTimesConstantIsRaw) {
  Rng rng(9);
  for (unsigned n = 2; n <= 5; ++n) {
    const auto r = discriminant_n(random_form(rng, VarSet::xyz(), Domain::integers(), n, 6));
    EXPECT_EQ(*r.constant * *r.normalized, r.raw);
  }
}

TEST(Smoothness, FermatQuarticExamples) {
  const MultiPoly f = P("x^4 + y^4 + z^4");
  EXPECT_TRUE(is_smooth_mod_p(f, 4, 5));
  EXPECT_FALSE(is_smooth_mod_p(f, 4, 2));
  for (std::uint64_t p : {3u, 5u, 7u}) EXPECT_FALSE(is_smooth_mod_p(P("x*y*z"), 3, p));
  EXPECT_THROW(is_smooth_mod_p(P("2*x^2 + 2*y^2 + 2*z^2"), 2, 2), Error);
}

TEST(Smoothness, OneSidedAgreementWithPointSearch) {
  Rng rng(10);
  int singular_found = 0, total = 0;
  for (unsigned n : {2u, 3u, 4u}) {
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
      for (int i = 0; i < 50; ++i) {
        const MultiPoly f = i % 3 == 0 ? singular_at_e1(rng, n)
                                       : random_form(rng, VarSet::xyz(), Domain::integers(), n);
        const MultiPoly fbar = reduce_mod_p(f, p);
        if (fbar.is_zero()) continue;
        ++total;
        const bool has_point = kernels::find_singular_point(fbar, 1) || kernels::find_singular_point(fbar, 2);
        bool smooth;
        try {
          smooth = is_smooth_mod_p(f, n, p);
        } catch (const Error& e) {
          // Only primes dividing c~_n may be inconclusive, and only when no
          // singular point exists.
          EXPECT_EQ(e.kind(), "unreliable_prime");
          EXPECT_EQ(normalization_constant(n) % p, 0);
          EXPECT_FALSE(has_point);
          continue;
        }
        if (has_point) {
          EXPECT_FALSE(smooth) << format_poly(f) << " mod " << p;
          ++singular_found;
        }
      }
    }
  }
  EXPECT_GT(singular_found, 150);
  EXPECT_GT(total, 550);
}

TEST(BadPrimes, FermatQuartic) {
  const MultiPoly f = P("x^4 + y^4 + z^4");
  const auto with2 = bad_primes(f, 4, {2});
  EXPECT_TRUE(with2.primes.empty());
  EXPECT_EQ(with2.cofactor, 1);
  const auto none = bad_primes(f, 4, {});
  ASSERT_EQ(none.primes.size(), 1u);
  EXPECT_EQ(none.primes[0], 2);
  EXPECT_EQ(none.cofactor, 1);
  EXPECT_THROW(bad_primes(P("x*y*z"), 3, {}), Error);
}

TEST(BadPrimes, LargeCofactorIsFlagged) {
  // With a tiny trial bound the unfactored part must be reported.
  const auto r = bad_primes(P("x^3 + y^3 + z^3 + 5*x*y*z"), 3, {}, 3);
  EXPECT_GT(r.cofactor, 1);
  for (const auto& p : r.primes) EXPECT_LE(p, 3);
  EXPECT_EQ(abs(r.raw) % r.cofactor, 0);
}
