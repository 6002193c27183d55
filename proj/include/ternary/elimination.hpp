#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ternary/ffield.hpp"
#include "ternary/poly.hpp"

namespace ternary {

// Macaulay's construction for three ternary forms of degree d. Rows and
// columns of the matrix are both indexed by the degree-nu monomials,
// nu = 3(d-1)+1, in descending grlex order: the row of m holds (m / x_i^d)·g_i
// for the first i with x_i^d | m. The resultant is det(M) / det(M'), M' being
// the submatrix on monomials divisible by at least two of x^d, y^d, z^d.
struct MacaulayProblem {
  std::array<MultiPoly, 3> g;
  unsigned d = 0;
  unsigned nu = 0;
  std::vector<Monomial> basis;

  static MacaulayProblem make(const MultiPoly& g1, const MultiPoly& g2, const MultiPoly& g3);

  // Row-major Macaulay matrix over the forms' domain (entries as Scalars).
  std::vector<Scalar> matrix() const;
  // Indices into basis of the non-reduced monomials.
  std::vector<std::size_t> nonreduced_indices() const;
};

struct ResultantTrace {
  std::size_t size = 0;           // side of M
  std::size_t minor_size = 0;     // side of M'
  unsigned unimodular_retries = 0;
  bool lifted = false;            // GF(p) value recovered through an integer lift
};

// Classical resultant over ZZ, QQ or GF(p). Equal positive degrees required.
Scalar macaulay_resultant(const MultiPoly& g1, const MultiPoly& g2, const MultiPoly& g3,
                          ResultantTrace* trace = nullptr);

struct DiscriminantReport {
  Scalar raw;                     // Res(f_x, f_y, f_z)
  std::optional<Scalar> constant; // c~_n when normalized
  std::optional<Scalar> normalized;
  unsigned long degree_check = 0; // 3 (n-1)^2
};

// Raw resultant of the partials, divided by the cached c~_n when `normalize`.
DiscriminantReport discriminant_n(const MultiPoly& f, bool normalize = true);

// Positive constant c~_n: the gcd of the raw resultants of partials over a
// pseudorandom sample of integer forms. Cached values come from
// data/normalization.json; unknown degrees are derived on demand.
mpz_class normalization_constant(unsigned n);
mpz_class derive_normalization_constant(unsigned n, std::uint64_t seed = 1, unsigned samples = 64,
                                        long bound = 10);
std::string normalization_data_path();

// Whether the reduction of the integer form f modulo p is a smooth curve of
// degree n. For p not dividing c~_n this is the nonvanishing of the raw
// resultant over GF(p). When p | c~_n the resultant is identically zero, so the
// answer comes from an exhaustive singular-point search over GF(p) and
// GF(p^2); if none is found the verdict is unreliable and unreliable_prime is
// thrown.
bool is_smooth_mod_p(const MultiPoly& f, unsigned n, std::uint64_t p);

// Same, for a form already over GF(p).
bool is_smooth_over_fp(const MultiPoly& fbar, unsigned n);

struct SmoothnessWitness {
  bool smooth = false;
  std::string method;                       // "resultant" or "point_search"
  std::optional<ff::PointRecord> singular;  // when found by search
};
SmoothnessWitness smoothness_over_fp(const MultiPoly& fbar, unsigned n);

struct BadPrimeReport {
  std::vector<mpz_class> primes;  // outside S, dividing the raw discriminant
  mpz_class cofactor = 1;         // part of |raw| left after trial division
  mpz_class raw;
};

// Trial division of |raw discriminant| by all primes <= trial_bound and all of
// S.
BadPrimeReport bad_primes(const MultiPoly& f, unsigned n, const std::vector<std::uint64_t>& S,
                          std::uint64_t trial_bound = 10000);

}  // namespace ternary
