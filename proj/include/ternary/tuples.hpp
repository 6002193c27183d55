#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ternary/poly.hpp"

namespace ternary {

// A point of weighted affine space: values I_i with weights n_i, on which
// lambda in QQ^x acts by I_i -> lambda^{n_i} I_i.
struct InvariantTuple {
  std::vector<mpq_class> values;
  std::vector<unsigned> weights;

  // Validates positive weights and matching lengths.
  InvariantTuple(std::vector<mpq_class> v, std::vector<unsigned> w);

  unsigned d() const;  // gcd of the weights
  bool is_zero() const;
  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

// ((I(f), J(f)), (4, 6)) for a ternary cubic over ZZ or QQ.
InvariantTuple cubic_tuple(const MultiPoly& f);

InvariantTuple scale_tuple(const mpq_class& lambda, const InvariantTuple& t);

// Smallest positive integer lambda with scale_tuple(lambda, t) integral.
mpz_class clearing_scale(const InvariantTuple& t);

// True iff every rational prime outside S has some entry of valuation 0,
// i.e. every prime factor of gcd(I_1, ..., I_m) lies in S. Denominators are
// cleared first with clearing_scale.
bool tuple_in_I_prime(const InvariantTuple& t, const std::vector<std::uint64_t>& S);

// numerator and denominator factor over S (zero is never an S-unit).
bool is_s_unit(const mpq_class& q, const std::vector<std::uint64_t>& S);

struct TupleEquivalence {
  std::vector<mpq_class> alpha;    // every alpha with alpha^{n_i} t1_i = t2_i (at most 2)
  std::vector<mpq_class> alpha_d;  // the distinct values alpha^d
  bool s_unit = false;             // alpha^d is an S-unit (sign-independent)
  bool equivalent() const { return !alpha.empty(); }
};

TupleEquivalence tuples_equivalent(const InvariantTuple& t1, const InvariantTuple& t2,
                                   const std::vector<std::uint64_t>& S);

// Exact k-th root of a rational, if one exists.
std::optional<mpq_class> rational_root(const mpq_class& q, unsigned long k);

}  // namespace ternary
