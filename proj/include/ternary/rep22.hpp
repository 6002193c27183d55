#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ternary/class22.hpp"
#include "ternary/ffield.hpp"
#include "ternary/poly.hpp"

namespace ternary {

// f = z·Q_x·z^t = x·Q_z·x^t. Entries row-major; Q_x entries are quadratics in
// x1..x3, Q_z entries quadratics in z1..z3. Off-diagonal entries carry half
// the mixed coefficient.
struct GramPair {
  std::array<MultiPoly, 9> qx;
  std::array<MultiPoly, 9> qz;
};

// Gram matrices of a class; ZZ input is promoted to QQ (half-integer
// entries). characteristic_two over GF(2).
GramPair gram_pair(const Class22& F);

// The same extraction on a raw bidegree-(2,2) form in any ring whose
// variables include x1..x3, z1..z3. Other variables are treated as
// coefficients, so symbolic families are allowed. Entries stay in f's ring.
GramPair gram_pair_raw(const MultiPoly& f);

// v·Adj(Q)·v^t for a symmetric 3x3 matrix of polynomials.
MultiPoly adjugate_form(const std::array<MultiPoly, 9>& q, const std::array<MultiPoly, 3>& v);

// I_x = x·Adj(Q_x)·x^t (a sextic in x1..x3) and I_z = z·Adj(Q_z)·z^t (a
// sextic in z1..z3). Integer classes are computed over QQ; the result is
// returned over ZZ when integral and over QQ otherwise.
MultiPoly covariant_Ix(const Class22& F);
MultiPoly covariant_Iz(const Class22& F);

// Covariants of a raw representative, in f's ring (no canonicalization).
MultiPoly covariant_Ix_raw(const MultiPoly& f);
MultiPoly covariant_Iz_raw(const MultiPoly& f);

// I_x(f) == I_x(f + L·sigma) and I_z(f) == I_z(f + L·sigma), computed from
// raw representatives. f of bidegree (2,2), L of bidegree (1,1), both in
// one ring containing x1..x3, z1..z3.
bool verify_well_defined(const MultiPoly& f, const MultiPoly& L);

// Symbolic instance: L = sum t_ij x_i z_j with nine indeterminates t_ij. When
// `symbolic_form` is set, f is also generic (36 indeterminate coefficients);
// otherwise f is the given numeric form.
bool verify_well_defined_symbolic(const std::optional<MultiPoly>& f);

// Which projection a point is taken on. Side::X: a is a point of the x-plane,
// its fiber is the conic z·Q_x(a)·z^t on the line sum a_i z_i = 0. Side::Z is
// the mirror image.
enum class Side { X, Z };

struct TangencyResult {
  Scalar restricted_disc;  // 4 (B^2 - A C) for A s^2 + 2 B s t + C t^2
  bool degenerate = false; // restricted quadratic identically zero
};

// The line is parametrized by z = s·u + t·w with u = e_i1 - (a_i1/a_k) e_k,
// w = e_i2 - (a_i2/a_k) e_k, where k is the largest index with a_k != 0.
TangencyResult tangency_test(const Class22& F, const std::array<Scalar, 3>& a, Side side = Side::X);

struct BranchCounterexample {
  std::array<std::string, 3> point;
  bool tangent = false;
  bool covariant_zero = false;
};

struct BranchLocusReport {
  std::uint64_t p = 0;
  std::size_t points = 0;
  // Covariant whose zero set matched tangency on each projection ("I_x",
  // "I_z", or "none").
  std::string x_projection_branch;
  std::string z_projection_branch;
  std::size_t mismatches_direct = 0;   // x-tangency vs I_x, z-tangency vs I_z
  std::size_t mismatches_swapped = 0;  // x-tangency vs I_z, z-tangency vs I_x
  std::size_t tangent_points_x = 0;
  std::size_t tangent_points_z = 0;
  // Both pairings fit (for instance no tangent points at all).
  bool ambiguous = false;
  std::vector<BranchCounterexample> counterexamples;  // for the resolved pairing
  bool ok() const { return counterexamples.empty() && x_projection_branch != "none"; }
  nlohmann::json to_json() const;
};

// Exhaustive scan of P^2(GF(p)) for both projections. Throws
// degenerate_point (naming the point) if some fiber is not a conic.
BranchLocusReport branch_locus_check(const Class22& F);

struct GenericityReport {
  bool generic = false;
  bool ix_nonzero = false, iz_nonzero = false;
  bool ix_smooth = false, iz_smooth = false;
  std::optional<ff::PointRecord> degenerate_x, degenerate_z;
  std::string reason;
  nlohmann::json to_json() const;
};

// Proxy for genericity of the reduction: both covariants nonzero and smooth
// sextics over GF(p), and no degenerate fiber over GF(p) or GF(p^2) for either
// projection. Integer input is reduced mod p first.
GenericityReport genericity_mod_p(const Class22& F, std::uint64_t p);
bool is_generic_mod_p(const Class22& F, std::uint64_t p);

// First point of P^2(GF(p^ext)) with a degenerate fiber, if any.
std::optional<ff::PointRecord> find_degenerate_point(const Class22& Fbar, Side side, unsigned ext);

struct IntegralityProbe {
  std::size_t samples = 0;
  std::size_t nonintegral_x = 0, nonintegral_z = 0;
  mpz_class max_denominator = 1;
  std::optional<std::string> example;  // a class with non-integral covariant
  nlohmann::json to_json() const;
};

// Covariants of random integer classes (coefficients in [-bound, bound]).
IntegralityProbe integrality_probe(std::uint64_t seed, std::size_t samples, long bound = 10);

}  // namespace ternary
