#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ternary/scalar.hpp"

namespace ternary {

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

unsigned long total_degree(const Monomial& m);

// Graded lexicographic order, descending: higher total degree first, then the
// larger exponent in the earliest variable. Map iteration therefore starts at
// the leading term.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Ordered list of variable names shared between polynomials of one ring.
class VarSet {
 public:
  VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit VarSet(std::vector<std::string> names);

  static const VarSet& xyz();
  static const VarSet& x123();
  static const VarSet& z123();
  // x1, x2, x3, z1, z2, z3: the bihomogeneous ring of V_{2,2}.
  static const VarSet& xz();

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Sparse multivariate polynomial. The term map never holds a zero coefficient,
// so structural equality is polynomial equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexGreater>;

  // Zero polynomial of the ring with no variables over ZZ; a placeholder for
  // containers, replaced before use.
  MultiPoly() : dom_(Domain::integers()) {}
  MultiPoly(VarSet vars, Domain dom) : vars_(std::move(vars)), dom_(dom) {}

  static MultiPoly constant(const VarSet& vars, const Scalar& c);
  static MultiPoly variable(const VarSet& vars, const Domain& dom, std::size_t index);
  static MultiPoly variable(const VarSet& vars, const Domain& dom, const std::string& name);
  static MultiPoly term(const VarSet& vars, Monomial m, const Scalar& c);

  const VarSet& vars() const noexcept { return vars_; }
  const Domain& domain() const noexcept { return dom_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coefficient(const Monomial& m) const;
  // Adds c·m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  // -1 for the zero polynomial.
  long total_degree() const;
  bool is_homogeneous() const;
  // Degree when homogeneous and nonzero.
  std::optional<unsigned long> homogeneous_degree() const;

  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }

  MultiPoly pow(unsigned long e) const;
  MultiPoly to_domain(const Domain& target) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void require_compatible(const MultiPoly& o) const;

  VarSet vars_;
  Domain dom_;
  TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

// Square matrix of exact scalars, row-major.
template <std::size_t N>
class SquareMatrix {
 public:
  explicit SquareMatrix(Domain d) {
    for (auto& e : entries_) e = Scalar(d, 0L);
  }
  static SquareMatrix identity(Domain d) {
    SquareMatrix m(d);
    for (std::size_t i = 0; i < N; ++i) m(i, i) = Scalar(d, 1L);
    return m;
  }
  static SquareMatrix scalar(const Scalar& s) {
    SquareMatrix m(s.domain());
    for (std::size_t i = 0; i < N; ++i) m(i, i) = s;
    return m;
  }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * N + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * N + j]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }
  const Domain& domain() const noexcept { return entries_[0].domain(); }

  SquareMatrix transpose() const {
    SquareMatrix t(domain());
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  SquareMatrix to_domain(const Domain& d) const {
    SquareMatrix t(d);
    for (std::size_t k = 0; k < N * N; ++k) t.entries_[k] = entries_[k].to_domain(d);
    return t;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix c(a.domain());
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = 0; k < N; ++k) c(i, j) += a(i, k) * b(k, j);
    return c;
  }
  friend SquareMatrix operator*(const Scalar& s, SquareMatrix a) {
    for (auto& e : a.entries_) e *= s;
    return a;
  }
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::array<Scalar, N * N> entries_;
};

using Mat2 = SquareMatrix<2>;
using Mat3 = SquareMatrix<3>;

// f((v_1, ..., v_k) · M) for a k×k matrix given row-major: variable j is
// replaced by sum_i v_i M_ij. Requires f homogeneous.
MultiPoly substitute_linear(const MultiPoly& f, std::span<const Scalar> m);

template <std::size_t N>
MultiPoly substitute_linear(const MultiPoly& f, const SquareMatrix<N>& m) {
  return substitute_linear(f, m.entries());
}

// Replaces variable i of f by images[i]; all images share one ring.
MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> images);

// Re-expresses f in a ring whose variables include all of f's by name.
MultiPoly embed(const MultiPoly& f, const VarSet& target);

MultiPoly partial_derivative(const MultiPoly& f, std::size_t var);
MultiPoly partial_derivative(const MultiPoly& f, const std::string& var);

// f = c · g with g primitive and positive leading coefficient (grlex).
std::pair<Scalar, MultiPoly> content_and_primitive(const MultiPoly& f);

// Coefficientwise reduction of a ZZ (or QQ, denominators prime to p)
// polynomial into GF(p).
MultiPoly reduce_mod_p(const MultiPoly& f, std::uint64_t p);

Scalar evaluate(const MultiPoly& f, std::span<const Scalar> point);

// All exponent vectors of total degree `degree` in `nvars` variables, in
// descending grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned long degree);

}  // namespace ternary
