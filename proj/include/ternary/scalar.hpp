#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace ternary {

enum class DomainKind { Integer, Rational, PrimeField };

// Coefficient ring tag: ZZ, QQ or GF(p). Prime fields are limited to p < 2^32
// so a product of two residues fits in 64 bits.
class Domain {
 public:
  static Domain integers() { return Domain(DomainKind::Integer, 0); }
  static Domain rationals() { return Domain(DomainKind::Rational, 0); }
  static Domain prime_field(std::uint64_t p);

  DomainKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_prime_field() const noexcept { return kind_ == DomainKind::PrimeField; }
  bool is_field() const noexcept { return kind_ != DomainKind::Integer; }
  // Q, or GF(p) with p odd.
  bool admits_halving() const noexcept {
    return kind_ == DomainKind::Rational || (kind_ == DomainKind::PrimeField && p_ != 2);
  }

  std::string name() const;
  // Inverse of name(): "ZZ", "QQ", "GF(p)" (also accepts "Z", "Q", "Fp:p").
  static Domain parse(const std::string& text);

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(DomainKind k, std::uint64_t p) : kind_(k), p_(p) {}

  DomainKind kind_;
  std::uint64_t p_;
};

bool is_prime(const mpz_class& n);

// ExactScalar: an integer, a rational in lowest terms, or a canonical residue
// in [0, p). Arithmetic between different domains throws domain_mismatch.
class Scalar {
 public:
  Scalar() : dom_(Domain::integers()) {}
  Scalar(Domain d, long v);
  Scalar(Domain d, const mpz_class& v);
  Scalar(Domain d, const mpq_class& v);

  static Scalar integer(const mpz_class& v) { return Scalar(Domain::integers(), v); }
  static Scalar rational(const mpq_class& v) { return Scalar(Domain::rationals(), v); }
  static Scalar residue(std::uint64_t r, std::uint64_t p);

  const Domain& domain() const noexcept { return dom_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  // Sign over ZZ/QQ; residues report 0 or 1.
  int sign() const noexcept;

  // Value over ZZ/QQ (integers have denominator 1).
  const mpq_class& rational_value() const;
  mpz_class integer_value() const;
  std::uint64_t residue_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  // QQ and GF(p): field division. ZZ: exact division, else inexact_division.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(unsigned long e) const;

  // Explicit domain change: ZZ->QQ, ZZ/QQ->GF(p) (denominator must be a unit),
  // QQ->ZZ (value must be integral).
  Scalar to_domain(const Domain& target) const;

  std::string to_string() const;
  static Scalar parse(const std::string& text, const Domain& d);

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void require_same(const Scalar& o) const;

  Domain dom_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace ternary
