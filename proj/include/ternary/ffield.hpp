#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ternary/poly.hpp"

namespace ternary::ff {

// Small prime field with plain residues; used by the exhaustive point scans.
struct Fp {
  using Elem = std::uint64_t;

  explicit Fp(std::uint64_t modulus) : p(modulus) {}

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_residue(std::uint64_t r) const { return r % p; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return a * b % p; }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
  std::size_t order() const { return p; }
  Elem element(std::size_t i) const { return i; }
  std::string format(Elem a) const { return std::to_string(a); }

  std::uint64_t p;
};

// GF(p^2) = GF(p)[t] / (t^2 - c1 t - c0) with an irreducible quadratic.
struct Fp2 {
  struct Elem {
    std::uint64_t a = 0, b = 0;  // a + b t
    friend bool operator==(const Elem&, const Elem&) = default;
  };

  explicit Fp2(std::uint64_t modulus);

  Elem zero() const { return {0, 0}; }
  Elem one() const { return {1, 0}; }
  Elem from_residue(std::uint64_t r) const { return {r % p, 0}; }
  Elem add(Elem x, Elem y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
  Elem sub(Elem x, Elem y) const { return {(x.a + p - y.a) % p, (x.b + p - y.b) % p}; }
  Elem neg(Elem x) const { return {x.a == 0 ? 0 : p - x.a, x.b == 0 ? 0 : p - x.b}; }
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  bool is_zero(Elem x) const { return x.a == 0 && x.b == 0; }
  std::size_t order() const { return p * p; }
  Elem element(std::size_t i) const { return {i % p, i / p}; }
  std::string format(Elem x) const;

  std::uint64_t p, c0, c1;
};

template <class Field>
using Point = std::array<typename Field::Elem, 3>;

// Normalized representatives of P^2(F_q): (1,u,v), then (0,1,v), then (0,0,1).
template <class Field>
std::size_t projective_point_count(const Field& f) {
  const std::size_t q = f.order();
  return q * q + q + 1;
}

template <class Field>
Point<Field> projective_point(const Field& f, std::size_t index) {
  const std::size_t q = f.order();
  if (index < q * q) return {f.one(), f.element(index / q), f.element(index % q)};
  index -= q * q;
  if (index < q) return {f.zero(), f.one(), f.element(index)};
  return {f.zero(), f.zero(), f.one()};
}

// A ternary form over GF(p) flattened for repeated evaluation in GF(p) or an
// extension.
class CompiledForm {
 public:
  CompiledForm() = default;
  explicit CompiledForm(const MultiPoly& f);

  template <class Field>
  typename Field::Elem eval(const Field& F, const Point<Field>& pt) const {
    using E = typename Field::Elem;
    // Power tables on the stack for the degrees used here; heap beyond that.
    constexpr unsigned kInline = 16;
    std::array<std::array<E, kInline>, 3> small;
    std::array<std::vector<E>, 3> big;
    std::array<E*, 3> pw;
    for (std::size_t v = 0; v < 3; ++v) {
      if (max_exp_ < kInline) {
        pw[v] = small[v].data();
      } else {
        big[v].resize(max_exp_ + 1);
        pw[v] = big[v].data();
      }
      pw[v][0] = F.one();
      for (unsigned e = 1; e <= max_exp_; ++e) pw[v][e] = F.mul(pw[v][e - 1], pt[v]);
    }
    E acc = F.zero();
    for (const auto& t : terms_) {
      auto x = F.mul(F.from_residue(t.coeff), pw[0][t.e[0]]);
      x = F.mul(x, pw[1][t.e[1]]);
      x = F.mul(x, pw[2][t.e[2]]);
      acc = F.add(acc, x);
    }
    return acc;
  }

 private:
  struct Term {
    std::array<unsigned, 3> e;
    std::uint64_t coeff;
  };
  std::vector<Term> terms_;
  unsigned max_exp_ = 0;
};

// Human-readable projective point; ext is 1 for GF(p), 2 for GF(p^2).
struct PointRecord {
  unsigned ext = 1;
  std::array<std::string, 3> coords;
};

template <class Field>
PointRecord record_point(const Field& F, const Point<Field>& pt, unsigned ext) {
  return {ext, {F.format(pt[0]), F.format(pt[1]), F.format(pt[2])}};
}

}  // namespace ternary::ff
