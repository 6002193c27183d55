#include "ternary/scalar.hpp"

#include <ostream>

#include "ternary/error.hpp"

namespace ternary {

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  // BPSW; deterministic below 2^64, which covers every modulus we accept.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Domain Domain::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) {
    throw Error("invalid_prime", "prime field modulus must be below 2^32");
  }
  if (!is_prime(mpz_class(static_cast<unsigned long>(p)))) {
    throw Error("invalid_prime", std::to_string(p) + " is not prime");
  }
  return Domain(DomainKind::PrimeField, p);
}

std::string Domain::name() const {
  switch (kind_) {
    case DomainKind::Integer: return "ZZ";
    case DomainKind::Rational: return "QQ";
    case DomainKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
  }
  return "?";
}

Domain Domain::parse(const std::string& text) {
  if (text == "ZZ" || text == "Z") return integers();
  if (text == "QQ" || text == "Q") return rationals();
  std::string digits;
  if (text.rfind("GF(", 0) == 0 && text.back() == ')') {
    digits = text.substr(3, text.size() - 4);
  } else if (text.rfind("Fp:", 0) == 0) {
    digits = text.substr(3);
  } else if (text.rfind("F", 0) == 0) {
    digits = text.substr(1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("unknown coefficient domain '" + text + "'");
  }
  return prime_field(std::stoull(digits));
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("division_by_zero", "residue is not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

namespace {

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Scalar::Scalar(Domain d, long v) : Scalar(d, mpz_class(v)) {}

Scalar::Scalar(Domain d, const mpz_class& v) : dom_(d) {
  if (d.is_prime_field()) {
    r_ = reduce(v, d.modulus());
  } else {
    q_ = v;
  }
}

Scalar::Scalar(Domain d, const mpq_class& v) : dom_(d) {
  mpq_class c = v;
  c.canonicalize();
  switch (d.kind()) {
    case DomainKind::Integer:
      if (c.get_den() != 1) throw Error("domain_mismatch", "non-integral value for ZZ");
      q_ = c;
      break;
    case DomainKind::Rational:
      q_ = c;
      break;
    case DomainKind::PrimeField: {
      std::uint64_t den = reduce(c.get_den(), d.modulus());
      if (den == 0) throw Error("division_by_zero", "denominator vanishes modulo p");
      r_ = reduce(c.get_num(), d.modulus()) * mod_inverse(den, d.modulus()) % d.modulus();
      break;
    }
  }
}

Scalar Scalar::residue(std::uint64_t r, std::uint64_t p) {
  Scalar s(Domain::prime_field(p), 0L);
  s.r_ = r % p;
  return s;
}

bool Scalar::is_zero() const noexcept {
  return dom_.is_prime_field() ? r_ == 0 : sgn(q_) == 0;
}

bool Scalar::is_one() const noexcept {
  return dom_.is_prime_field() ? r_ == 1 : q_ == 1;
}

int Scalar::sign() const noexcept {
  if (dom_.is_prime_field()) return r_ == 0 ? 0 : 1;
  return sgn(q_);
}

const mpq_class& Scalar::rational_value() const {
  if (dom_.is_prime_field()) throw Error("domain_mismatch", "residue has no rational value");
  return q_;
}

mpz_class Scalar::integer_value() const {
  if (dom_.is_prime_field()) return mpz_class(static_cast<unsigned long>(r_));
  if (q_.get_den() != 1) throw Error("domain_mismatch", "value is not an integer");
  return q_.get_num();
}

std::uint64_t Scalar::residue_value() const {
  if (!dom_.is_prime_field()) throw Error("domain_mismatch", "value is not a residue");
  return r_;
}

void Scalar::require_same(const Scalar& o) const {
  if (!(dom_ == o.dom_)) {
    throw Error("domain_mismatch",
                "mixed-domain arithmetic: " + dom_.name() + " vs " + o.dom_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (dom_.is_prime_field()) {
    s.r_ = r_ == 0 ? 0 : dom_.modulus() - r_;
  } else {
    s.q_ = -q_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (dom_.is_prime_field()) {
    r_ += o.r_;
    if (r_ >= dom_.modulus()) r_ -= dom_.modulus();
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  if (dom_.is_prime_field()) {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + dom_.modulus() - o.r_;
  } else {
    q_ -= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (dom_.is_prime_field()) {
    r_ = r_ * o.r_ % dom_.modulus();
  } else {
    q_ *= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  if (o.is_zero()) throw Error("division_by_zero", "division by zero");
  switch (dom_.kind()) {
    case DomainKind::PrimeField:
      r_ = r_ * mod_inverse(o.r_, dom_.modulus()) % dom_.modulus();
      break;
    case DomainKind::Rational:
      q_ /= o.q_;
      break;
    case DomainKind::Integer: {
      if (!mpz_divisible_p(q_.get_num_mpz_t(), o.q_.get_num_mpz_t())) {
        throw Error("inexact_division", "integer division is not exact");
      }
      mpz_class n;
      mpz_divexact(n.get_mpz_t(), q_.get_num_mpz_t(), o.q_.get_num_mpz_t());
      q_ = n;
      break;
    }
  }
  return *this;
}

Scalar Scalar::inverse() const {
  Scalar one(dom_, 1L);
  return one /= *this;
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar result(dom_, 1L);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar Scalar::to_domain(const Domain& target) const {
  if (dom_ == target) return *this;
  if (dom_.is_prime_field()) {
    throw Error("domain_mismatch", "cannot lift a residue out of " + dom_.name());
  }
  return Scalar(target, q_);
}

std::string Scalar::to_string() const {
  if (dom_.is_prime_field()) return std::to_string(r_);
  return q_.get_str();
}

Scalar Scalar::parse(const std::string& text, const Domain& d) {
  mpq_class v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw ParseError("malformed number '" + text + "'");
  }
  if (sgn(v.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
  v.canonicalize();
  return Scalar(d, v);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.dom_ == b.dom_)) return false;
  if (a.dom_.is_prime_field()) return a.r_ == b.r_;
  return a.q_ == b.q_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ternary
