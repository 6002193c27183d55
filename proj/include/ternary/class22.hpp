#pragma once

#include <vector>

#include "ternary/poly.hpp"

namespace ternary {

// sigma = x1 z1 + x2 z2 + x3 z3 in the x1..x3, z1..z3 ring.
MultiPoly sigma_form(const Domain& d);

// True when every term has x-degree 2 and z-degree 2.
bool is_bidegree22(const MultiPoly& f);

// Reduced echelon basis (unit pivots, integer entries) of the 9-dimensional
// ideal component {L·sigma : L of bidegree (1,1)} under descending grlex.
struct IdealBasisVector {
  Monomial pivot;
  MultiPoly vector;
};
const std::vector<IdealBasisVector>& ideal_basis();

// An element of V_{2,2}: a (2,2) form modulo multiples of sigma, stored as its
// unique representative with zero coefficient at every ideal pivot monomial.
class Class22 {
 public:
  const MultiPoly& representative() const noexcept { return rep_; }
  const Domain& domain() const noexcept { return rep_.domain(); }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  Class22 to_domain(const Domain& d) const { return Class22(rep_.to_domain(d)); }

  friend bool operator==(const Class22&, const Class22&) = default;
  friend Class22 canonicalize(const MultiPoly& f);

 private:
  explicit Class22(MultiPoly rep) : rep_(std::move(rep)) {}
  MultiPoly rep_;
};

// Reduces a bihomogeneous (2,2) form against ideal_basis(). Two forms are
// congruent modulo sigma iff their canonical classes are equal.
Class22 canonicalize(const MultiPoly& f);

// Reduction of an integer class into GF(p); canonical forms reduce to
// canonical forms because the basis has unit pivots.
Class22 reduce_mod_p(const Class22& c, std::uint64_t p);

}  // namespace ternary
