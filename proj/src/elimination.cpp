#include "ternary/elimination.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ternary/error.hpp"
#include "ternary/gl3.hpp"
#include "ternary/kernels.hpp"
#include "ternary/point_scan.hpp"
#include "ternary/random.hpp"

namespace ternary {

namespace {

constexpr unsigned kUnimodularAttempts = 8;
constexpr std::uint64_t kRetrySeed = 0x5eed'0f'ad'd1c7ULL;

std::vector<mpz_class> to_integers(const std::vector<Scalar>& a) {
  std::vector<mpz_class> out;
  out.reserve(a.size());
  for (const auto& s : a) out.push_back(s.integer_value());
  return out;
}

std::vector<std::uint64_t> to_residues(const std::vector<Scalar>& a) {
  std::vector<std::uint64_t> out;
  out.reserve(a.size());
  for (const auto& s : a) out.push_back(s.residue_value());
  return out;
}

template <class T>
std::vector<T> submatrix(const std::vector<T>& a, std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<T> out;
  out.reserve(idx.size() * idx.size());
  for (std::size_t i : idx)
    for (std::size_t j : idx) out.push_back(a[i * n + j]);
  return out;
}

// One Macaulay quotient; nullopt when det(M') vanishes.
std::optional<Scalar> quotient_once(const MacaulayProblem& P, ResultantTrace* trace) {
  const std::vector<Scalar> m = P.matrix();
  const std::size_t n = P.basis.size();
  const auto idx = P.nonreduced_indices();
  if (trace) {
    trace->size = n;
    trace->minor_size = idx.size();
  }
  const Domain& dom = P.g[0].domain();
  if (dom.is_prime_field()) {
    const std::uint64_t p = dom.modulus();
    auto a = to_residues(m);
    const std::uint64_t minor = kernels::det_modp(submatrix(a, n, idx), idx.size(), p);
    if (minor == 0) return std::nullopt;
    const std::uint64_t full = kernels::det_modp(std::move(a), n, p);
    return Scalar::residue(full * mod_inverse(minor, p) % p, p);
  }
  auto a = to_integers(m);
  const mpz_class minor = kernels::det_bareiss(submatrix(a, n, idx), idx.size());
  if (minor == 0) return std::nullopt;
  const mpz_class full = kernels::det_bareiss(std::move(a), n);
  if (full % minor != 0) throw Error("internal_error", "Macaulay quotient is not exact");
  return Scalar::integer(full / minor);
}

// Retries under pseudorandom determinant-one changes of variables, which leave
// the resultant unchanged.
std::optional<Scalar> quotient_with_retries(const MacaulayProblem& P, ResultantTrace* trace) {
  if (auto r = quotient_once(P, trace)) return r;
  const Domain& dom = P.g[0].domain();
  for (unsigned attempt = 1; attempt <= kUnimodularAttempts; ++attempt) {
    Rng rng(kRetrySeed + attempt);
    const Mat3 u = random_sl3(rng, dom, 3);
    MacaulayProblem Q = P;
    for (auto& gi : Q.g) gi = act_vn(u, gi);
    if (trace) trace->unimodular_retries = attempt;
    if (auto r = quotient_once(Q, trace)) return r;
  }
  return std::nullopt;
}

Scalar resultant_integer(const MacaulayProblem& P, ResultantTrace* trace) {
  if (auto r = quotient_with_retries(P, trace)) return *r;
  throw Error("degenerate_resultant",
              "det(M') vanished after " + std::to_string(kUnimodularAttempts) +
                  " unimodular changes of variables");
}

// Over GF(p) the unimodular retries can run out when p is small. The
// resultant is an integer polynomial in the coefficients, so any integer lift
// g_i + p·s·x_i^d has the same resultant mod p, and det(M') of the lift is
// nonzero for all but finitely many s.
Scalar resultant_prime_field(const MacaulayProblem& P, ResultantTrace* trace) {
  if (auto r = quotient_with_retries(P, trace)) return *r;
  const std::uint64_t p = P.g[0].domain().modulus();
  const Domain zz = Domain::integers();
  for (unsigned s = 0; s <= 16; ++s) {
    MacaulayProblem L = P;
    for (std::size_t i = 0; i < 3; ++i) {
      MultiPoly lift(P.g[i].vars(), zz);
      for (const auto& [mono, c] : P.g[i].terms()) {
        lift.add_term(mono, Scalar(zz, mpz_class(std::to_string(c.residue_value()))));
      }
      Monomial pure(3, 0);
      pure[i] = P.d;
      lift.add_term(pure, Scalar(zz, mpz_class(mpz_class(p) * s)));
      L.g[i] = lift;
    }
    if (auto r = quotient_with_retries(L, trace)) {
      if (trace) trace->lifted = true;
      return r->to_domain(P.g[0].domain());
    }
  }
  throw Error("degenerate_resultant", "no admissible integer lift found");
}

}  // namespace

MacaulayProblem MacaulayProblem::make(const MultiPoly& g1, const MultiPoly& g2,
                                      const MultiPoly& g3) {
  MacaulayProblem P{{g1, g2, g3}, 0, 0, {}};
  for (const auto& gi : P.g) {
    if (gi.vars().size() != 3) throw Error("dimension_mismatch", "ternary forms expected");
    if (!(gi.vars() == g1.vars())) throw Error("variable_mismatch", "forms use different variables");
    if (!(gi.domain() == g1.domain())) throw Error("domain_mismatch", "forms over different domains");
    if (gi.is_zero()) throw Error("zero_form", "resultant of a zero form");
    if (!gi.is_homogeneous()) throw Error("not_homogeneous", "resultant needs homogeneous forms");
  }
  const auto d = *g1.homogeneous_degree();
  if (*g2.homogeneous_degree() != d || *g3.homogeneous_degree() != d) {
    throw Error("degree_mismatch", "resultant needs forms of equal degree");
  }
  if (d == 0) throw Error("degree_mismatch", "resultant needs positive degree");
  P.d = static_cast<unsigned>(d);
  P.nu = 3 * (P.d - 1) + 1;
  P.basis = monomials_of_degree(3, P.nu);
  return P;
}

std::vector<Scalar> MacaulayProblem::matrix() const {
  const std::size_t n = basis.size();
  const Domain& dom = g[0].domain();
  std::map<Monomial, std::size_t, GrlexGreater> col;
  for (std::size_t j = 0; j < n; ++j) col.emplace(basis[j], j);
  std::vector<Scalar> a(n * n, Scalar(dom, 0L));
  for (std::size_t r = 0; r < n; ++r) {
    const Monomial& m = basis[r];
    std::size_t i = 0;
    while (m[i] < d) ++i;  // nu > 3(d-1) guarantees some exponent reaches d
    Monomial shift = m;
    shift[i] -= d;
    for (const auto& [t, c] : g[i].terms()) {
      Monomial prod{t[0] + shift[0], t[1] + shift[1], t[2] + shift[2]};
      a[r * n + col.at(prod)] = c;
    }
  }
  return a;
}

std::vector<std::size_t> MacaulayProblem::nonreduced_indices() const {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    int hits = 0;
    for (std::size_t v = 0; v < 3; ++v) hits += basis[j][v] >= d ? 1 : 0;
    if (hits >= 2) idx.push_back(j);
  }
  return idx;
}

Scalar macaulay_resultant(const MultiPoly& g1, const MultiPoly& g2, const MultiPoly& g3,
                          ResultantTrace* trace) {
  MacaulayProblem P = MacaulayProblem::make(g1, g2, g3);
  switch (g1.domain().kind()) {
    case DomainKind::Integer:
      return resultant_integer(P, trace);
    case DomainKind::PrimeField:
      return resultant_prime_field(P, trace);
    case DomainKind::Rational: {
      // Res is multihomogeneous of degree d^2 in each form: clear denominators.
      const Domain zz = Domain::integers();
      mpq_class scale = 1;
      for (auto& gi : P.g) {
        mpz_class l = 1;
        for (const auto& [m, c] : gi.terms()) {
          mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational_value().get_den_mpz_t());
        }
        MultiPoly cleared(gi.vars(), zz);
        for (const auto& [m, c] : gi.terms()) {
          cleared.add_term(m, Scalar(zz, mpz_class(mpq_class(c.rational_value() * l))));
        }
        gi = cleared;
        mpz_class lp;
        mpz_pow_ui(lp.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(P.d) * P.d);
        scale *= lp;
      }
      const Scalar r = resultant_integer(P, trace);
      return Scalar::rational(mpq_class(r.integer_value()) / scale);
    }
  }
  throw Error("internal_error", "unknown domain");
}

DiscriminantReport discriminant_n(const MultiPoly& f, bool normalize) {
  if (f.vars().size() != 3) throw Error("dimension_mismatch", "ternary form expected");
  if (f.is_zero()) throw Error("zero_form", "discriminant of the zero form");
  const auto n = f.homogeneous_degree();
  if (!n) throw Error("not_homogeneous", "discriminant needs a homogeneous form");
  if (*n < 2) throw Error("degree_too_small", "discriminant needs degree >= 2");

  DiscriminantReport rep;
  rep.degree_check = 3 * (*n - 1) * (*n - 1);
  std::array<MultiPoly, 3> d{partial_derivative(f, 0), partial_derivative(f, 1),
                             partial_derivative(f, 2)};
  // A vanishing partial shares a zero with any two ternary forms.
  const bool any_zero = d[0].is_zero() || d[1].is_zero() || d[2].is_zero();
  rep.raw = any_zero ? Scalar(f.domain(), 0L) : macaulay_resultant(d[0], d[1], d[2]);
  if (!normalize) return rep;

  const mpz_class c = normalization_constant(static_cast<unsigned>(*n));
  const Domain& dom = f.domain();
  if (dom.is_prime_field() && c % mpz_class(dom.modulus()) == 0) {
    throw Error("unreliable_prime", "p divides the normalization constant " + c.get_str());
  }
  rep.constant = Scalar(dom, c);
  if (dom.kind() == DomainKind::Integer) {
    const mpz_class raw = rep.raw.integer_value();
    if (raw % c != 0) {
      throw Error("normalization_unstable",
                  "raw discriminant not divisible by cached constant " + c.get_str());
    }
    rep.normalized = Scalar::integer(raw / c);
  } else {
    rep.normalized = rep.raw / *rep.constant;
  }
  return rep;
}

SmoothnessWitness smoothness_over_fp(const MultiPoly& fbar, unsigned n) {
  if (!fbar.domain().is_prime_field()) throw Error("domain_mismatch", "form over GF(p) expected");
  if (fbar.is_zero()) throw Error("zero_mod_p", "form vanishes modulo p");
  if (fbar.homogeneous_degree() != std::optional<unsigned long>(n)) {
    throw Error("degree_mismatch", "form is not homogeneous of degree " + std::to_string(n));
  }
  const std::uint64_t p = fbar.domain().modulus();
  const mpz_class c = normalization_constant(n);
  SmoothnessWitness w;
  if (c % mpz_class(p) != 0) {
    w.method = "resultant";
    w.smooth = !discriminant_n(fbar, false).raw.is_zero();
    return w;
  }
  w.method = "point_search";
  for (unsigned ext = 1; ext <= 2; ++ext) {
    if (auto pt = kernels::find_singular_point(fbar, ext)) {
      w.singular = *pt;
      return w;
    }
  }
  throw Error("unreliable_prime", "p = " + std::to_string(p) + " divides c~_" +
                                      std::to_string(n) + " = " + c.get_str() +
                                      " and no singular point exists over GF(p^2)");
}

bool is_smooth_over_fp(const MultiPoly& fbar, unsigned n) { return smoothness_over_fp(fbar, n).smooth; }

bool is_smooth_mod_p(const MultiPoly& f, unsigned n, std::uint64_t p) {
  if (!is_prime(mpz_class(p))) throw Error("invalid_prime", std::to_string(p) + " is not prime");
  if (f.domain().is_prime_field()) throw Error("domain_mismatch", "integer or rational form expected");
  return is_smooth_over_fp(reduce_mod_p(f, p), n);
}

BadPrimeReport bad_primes(const MultiPoly& f, unsigned n, const std::vector<std::uint64_t>& S,
                          std::uint64_t trial_bound) {
  if (f.domain().kind() != DomainKind::Integer) throw Error("domain_mismatch", "integer form expected");
  if (f.homogeneous_degree() != std::optional<unsigned long>(n)) {
    throw Error("degree_mismatch", "form is not homogeneous of degree " + std::to_string(n));
  }
  BadPrimeReport rep;
  rep.raw = discriminant_n(f, false).raw.integer_value();
  if (rep.raw == 0) throw Error("singular_form", "discriminant vanishes: the curve is singular over QQ");

  std::set<std::uint64_t> trial(S.begin(), S.end());
  std::vector<bool> composite(trial_bound + 1, false);
  for (std::uint64_t q = 2; q <= trial_bound; ++q) {
    if (composite[q]) continue;
    trial.insert(q);
    for (std::uint64_t k = q * q; k <= trial_bound; k += q) composite[k] = true;
  }
  const std::set<std::uint64_t> sset(S.begin(), S.end());
  mpz_class r = abs(rep.raw);
  for (std::uint64_t q : trial) {
    const mpz_class qz(q);
    if (r % qz != 0) continue;
    while (r % qz == 0) r /= qz;
    if (!sset.count(q)) rep.primes.push_back(qz);
  }
  rep.cofactor = r;
  return rep;
}

}  // namespace ternary
