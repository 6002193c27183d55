#include "ternary/tuples.hpp"

#include <algorithm>
#include <numeric>

#include "ternary/cubic.hpp"
#include "ternary/error.hpp"

namespace ternary {

namespace {

mpq_class qpow(const mpq_class& q, long e) {
  mpz_class n, d;
  const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), a);
  mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), a);
  mpq_class r = e < 0 ? mpq_class(d, n) : mpq_class(n, d);
  r.canonicalize();
  return r;
}

// Removes every factor in S from |n|.
mpz_class strip_primes(mpz_class n, const std::vector<std::uint64_t>& S) {
  n = abs(n);
  for (std::uint64_t p : S) {
    if (p < 2) continue;
    const mpz_class pz(p);
    while (n % pz == 0) n /= pz;
  }
  return n;
}

}  // namespace

InvariantTuple::InvariantTuple(std::vector<mpq_class> v, std::vector<unsigned> w)
    : values(std::move(v)), weights(std::move(w)) {
  if (values.size() != weights.size() || values.empty()) {
    throw Error("weight_mismatch", "tuple needs one positive weight per value");
  }
  for (unsigned n : weights) {
    if (n == 0) throw Error("weight_mismatch", "weights must be positive");
  }
  for (auto& q : values) q.canonicalize();
}

unsigned InvariantTuple::d() const {
  unsigned g = 0;
  for (unsigned n : weights) g = std::gcd(g, n);
  return g;
}

bool InvariantTuple::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const mpq_class& q) { return q == 0; });
}

InvariantTuple cubic_tuple(const MultiPoly& f) {
  if (f.domain().is_prime_field()) throw Error("domain_mismatch", "cubic over ZZ or QQ expected");
  return InvariantTuple({cubic_I(f).rational_value(), cubic_J(f).rational_value()}, {4, 6});
}

InvariantTuple scale_tuple(const mpq_class& lambda, const InvariantTuple& t) {
  if (lambda == 0) throw Error("zero_scale", "lambda must be nonzero");
  InvariantTuple out = t;
  for (std::size_t i = 0; i < t.values.size(); ++i) out.values[i] = t.values[i] * qpow(lambda, t.weights[i]);
  return out;
}

mpz_class clearing_scale(const InvariantTuple& t) {
  // lambda = prod q^{k_q} with k_q = max_i ceil(v_q(den_i) / n_i).
  mpz_class lambda = 1;
  std::vector<mpz_class> dens;
  for (const auto& q : t.values) dens.push_back(q.get_den());
  mpz_class rest = 1;
  for (const auto& d : dens) mpz_lcm(rest.get_mpz_t(), rest.get_mpz_t(), d.get_mpz_t());
  for (mpz_class q = 2; rest > 1; ++q) {
    if (q * q > rest) q = rest;  // what remains is prime
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    unsigned long k = 0;
    for (std::size_t i = 0; i < dens.size(); ++i) {
      const unsigned long v = mpz_remove(mpz_class().get_mpz_t(), dens[i].get_mpz_t(), q.get_mpz_t());
      k = std::max(k, (v + t.weights[i] - 1) / t.weights[i]);
    }
    mpz_class qk;
    mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
    lambda *= qk;
  }
  return lambda;
}

bool tuple_in_I_prime(const InvariantTuple& t, const std::vector<std::uint64_t>& S) {
  if (t.is_zero()) throw Error("zero_tuple", "the zero tuple has no valuation data");
  const InvariantTuple c = scale_tuple(mpq_class(clearing_scale(t)), t);
  mpz_class g = 0;
  for (const auto& q : c.values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  return strip_primes(g, S) == 1;
}

bool is_s_unit(const mpq_class& q, const std::vector<std::uint64_t>& S) {
  if (q == 0) return false;
  return strip_primes(q.get_num(), S) == 1 && strip_primes(q.get_den(), S) == 1;
}

std::optional<mpq_class> rational_root(const mpq_class& q, unsigned long k) {
  if (k == 0) throw Error("invalid_argument", "root of order 0");
  const bool neg = q < 0;
  if (neg && k % 2 == 0) return std::nullopt;
  mpz_class n = abs(q.get_num()), d = q.get_den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return std::nullopt;
  mpq_class r(neg ? mpz_class(-rn) : rn, rd);
  r.canonicalize();
  return r;
}

TupleEquivalence tuples_equivalent(const InvariantTuple& t1, const InvariantTuple& t2,
                                   const std::vector<std::uint64_t>& S) {
  if (t1.weights != t2.weights) throw Error("weight_mismatch", "tuples carry different weights");
  if (t1.is_zero()) throw Error("zero_tuple", "first tuple is zero");
  TupleEquivalence out;

  // alpha^{n_i} = r_i on the support of t1; zeros must match.
  std::vector<std::pair<unsigned, mpq_class>> eqs;
  for (std::size_t i = 0; i < t1.values.size(); ++i) {
    const bool z1 = t1.values[i] == 0, z2 = t2.values[i] == 0;
    if (z1 != z2) return out;
    if (!z1) eqs.emplace_back(t1.weights[i], mpq_class(t2.values[i] / t1.values[i]));
  }

  // Bezout: g = sum k_i n_i, so alpha^g = prod r_i^{k_i}.
  long g = 0;
  std::vector<long> coef(eqs.size(), 0);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    // extended gcd of (g, n_i)
    long a = g, b = eqs[i].first, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
      const long q = a / b;
      std::tie(a, b) = std::make_pair(b, a - q * b);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
      std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    for (std::size_t j = 0; j < i; ++j) coef[j] *= x0;
    coef[i] = y0;
    g = a;
  }
  mpq_class rho = 1;
  for (std::size_t i = 0; i < eqs.size(); ++i) rho *= qpow(eqs[i].second, coef[i]);

  const auto root = rational_root(rho, static_cast<unsigned long>(g));
  if (!root) return out;
  std::vector<mpq_class> cands{*root};
  if (g % 2 == 0) cands.push_back(-*root);
  for (const auto& a : cands) {
    const bool ok = std::all_of(eqs.begin(), eqs.end(),
                                [&](const auto& e) { return qpow(a, e.first) == e.second; });
    if (ok) out.alpha.push_back(a);
  }
  std::sort(out.alpha.begin(), out.alpha.end(), [](const mpq_class& x, const mpq_class& y) { return x > y; });
  for (const auto& a : out.alpha) {
    const mpq_class ad = qpow(a, t1.d());
    if (std::find(out.alpha_d.begin(), out.alpha_d.end(), ad) == out.alpha_d.end()) out.alpha_d.push_back(ad);
  }
  out.s_unit = !out.alpha_d.empty() && is_s_unit(out.alpha_d.front(), S);
  return out;
}

}  // namespace ternary
