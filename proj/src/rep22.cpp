#include "ternary/rep22.hpp"

#include <omp.h>

#include "ternary/elimination.hpp"
#include "ternary/error.hpp"
#include "ternary/point_scan.hpp"
#include "ternary/poly_io.hpp"
#include "ternary/random.hpp"

namespace ternary {

namespace {

const char* const kX[3] = {"x1", "x2", "x3"};
const char* const kZ[3] = {"z1", "z2", "z3"};

struct BlockIndex {
  std::array<std::size_t, 3> x, z;
};

BlockIndex block_index(const VarSet& vars) {
  BlockIndex b{};
  for (std::size_t i = 0; i < 3; ++i) {
    auto xi = vars.index_of(kX[i]);
    auto zi = vars.index_of(kZ[i]);
    if (!xi || !zi) throw Error("variable_mismatch", "ring must contain x1..x3 and z1..z3");
    b.x[i] = *xi;
    b.z[i] = *zi;
  }
  return b;
}

MultiPoly promote(const MultiPoly& f) {
  if (f.domain().kind() == DomainKind::Integer) return f.to_domain(Domain::rationals());
  if (!f.domain().admits_halving()) {
    throw Error("characteristic_two", "Gram matrices need 2 to be invertible");
  }
  return f;
}

// Restriction of a polynomial in the xz ring to the x123 (or z123) ring.
MultiPoly project(const MultiPoly& f, const VarSet& target, const std::array<std::size_t, 3>& idx) {
  MultiPoly out(target, f.domain());
  for (const auto& [m, c] : f.terms()) out.add_term({m[idx[0]], m[idx[1]], m[idx[2]]}, c);
  return out;
}

MultiPoly maybe_integral(const MultiPoly& f, const Domain& original) {
  if (original.kind() != DomainKind::Integer) return f;
  for (const auto& [m, c] : f.terms()) {
    if (c.rational_value().get_den() != 1) return f;
  }
  return f.to_domain(original);
}

MultiPoly covariant_raw(const MultiPoly& f, Side side) {
  const MultiPoly g = promote(f);
  const GramPair gp = gram_pair_raw(g);
  const BlockIndex b = block_index(g.vars());
  std::array<MultiPoly, 3> v;
  for (std::size_t i = 0; i < 3; ++i) {
    v[i] = MultiPoly::variable(g.vars(), g.domain(), side == Side::X ? b.x[i] : b.z[i]);
  }
  return adjugate_form(side == Side::X ? gp.qx : gp.qz, v);
}

MultiPoly covariant_of_class(const Class22& F, Side side) {
  const MultiPoly raw = covariant_raw(F.representative(), side);
  const BlockIndex b = block_index(raw.vars());
  const MultiPoly out = side == Side::X ? project(raw, VarSet::x123(), b.x) : project(raw, VarSet::z123(), b.z);
  return maybe_integral(out, F.domain());
}

// Gram entries of one side as ternary forms over GF(p), ready for evaluation
// in GF(p) or GF(p^2).
struct CompiledGram {
  std::array<ff::CompiledForm, 9> q;

  CompiledGram(const Class22& Fbar, Side side) {
    const GramPair gp = gram_pair(Fbar);
    const BlockIndex b = block_index(VarSet::xz());
    for (std::size_t k = 0; k < 9; ++k) {
      q[k] = side == Side::X ? ff::CompiledForm(project(gp.qx[k], VarSet::x123(), b.x))
                             : ff::CompiledForm(project(gp.qz[k], VarSet::z123(), b.z));
    }
  }

  template <class Field>
  std::array<typename Field::Elem, 9> at(const Field& F, const ff::Point<Field>& a) const {
    std::array<typename Field::Elem, 9> out;
    for (std::size_t k = 0; k < 9; ++k) out[k] = q[k].eval(F, a);
    return out;
  }
};

template <class Field>
struct Restricted {
  typename Field::Elem A, B, C;
};

// A s^2 + 2 B s t + C t^2: the conic Q restricted to the line a^perp.
template <class Field>
Restricted<Field> restrict_conic(const Field& F, const std::array<typename Field::Elem, 9>& Q,
                                 const ff::Point<Field>& a) {
  std::size_t k = 2;
  while (F.is_zero(a[k])) {
    if (k == 0) throw Error("zero_point", "the point (0:0:0) is not projective");
    --k;
  }
  std::size_t others[2], n = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != k) others[n++] = i;
  const auto inv = F.inv(a[k]);
  using E = typename Field::Elem;
  std::array<E, 3> u{F.zero(), F.zero(), F.zero()}, w = u;
  u[others[0]] = F.one();
  u[k] = F.neg(F.mul(a[others[0]], inv));
  w[others[1]] = F.one();
  w[k] = F.neg(F.mul(a[others[1]], inv));
  auto bilinear = [&](const std::array<E, 3>& l, const std::array<E, 3>& r) {
    E acc = F.zero();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) acc = F.add(acc, F.mul(l[i], F.mul(Q[i * 3 + j], r[j])));
    return acc;
  };
  return {bilinear(u, u), bilinear(u, w), bilinear(w, w)};
}

template <class Field>
bool is_degenerate(const Field& F, const Restricted<Field>& r) {
  return F.is_zero(r.A) && F.is_zero(r.B) && F.is_zero(r.C);
}

std::uint64_t require_odd_prime_field(const Class22& F) {
  if (!F.domain().is_prime_field()) throw Error("domain_mismatch", "class over GF(p) expected");
  const std::uint64_t p = F.domain().modulus();
  if (p == 2) throw Error("characteristic_two", "p = 2 is excluded");
  return p;
}

bool use_parallel() { return omp_get_max_threads() > 1; }

std::string format_point(const ff::PointRecord& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < 3; ++i) s += (i ? ":" : "") + r.coords[i];
  s += ")";
  if (r.ext == 2) s += " over GF(p^2)";
  return s;
}

nlohmann::json point_json(const std::optional<ff::PointRecord>& r) {
  if (!r) return nullptr;
  return {{"coords", r->coords}, {"field_degree", r->ext}};
}

}  // namespace

GramPair gram_pair_raw(const MultiPoly& f0) {
  const MultiPoly f = promote(f0);
  const BlockIndex b = block_index(f.vars());
  const Domain& d = f.domain();
  const Scalar half = Scalar(d, 2L).inverse();
  GramPair g;
  for (auto& e : g.qx) e = MultiPoly(f.vars(), d);
  for (auto& e : g.qz) e = MultiPoly(f.vars(), d);
  for (const auto& [m, c] : f.terms()) {
    std::array<unsigned, 3> ex{}, ez{};
    unsigned dx = 0, dz = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      ex[i] = m[b.x[i]];
      ez[i] = m[b.z[i]];
      dx += ex[i];
      dz += ez[i];
    }
    if (dx != 2 || dz != 2) throw Error("wrong_bidegree", "bidegree (2,2) form expected");
    // Q_x: coefficient of the z-monomial, keeping the x part.
    auto place = [&](std::array<MultiPoly, 9>& q, const std::array<unsigned, 3>& e,
                     const std::array<std::size_t, 3>& kill) {
      Monomial rest = m;
      for (std::size_t i = 0; i < 3; ++i) rest[kill[i]] = 0;
      std::size_t i = 0;
      while (e[i] == 0) ++i;
      if (e[i] == 2) {
        q[i * 3 + i].add_term(rest, c);
        return;
      }
      std::size_t j = i + 1;
      while (e[j] == 0) ++j;
      q[i * 3 + j].add_term(rest, c * half);
      q[j * 3 + i].add_term(rest, c * half);
    };
    place(g.qx, ez, b.z);
    place(g.qz, ex, b.x);
  }
  return g;
}

GramPair gram_pair(const Class22& F) { return gram_pair_raw(F.representative()); }

MultiPoly adjugate_form(const std::array<MultiPoly, 9>& q, const std::array<MultiPoly, 3>& v) {
  MultiPoly out(v[0].vars(), v[0].domain());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // Adj_ij is the cofactor of entry (j, i); cyclic indices carry the sign.
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      const MultiPoly adj = q[r0 * 3 + c0] * q[r1 * 3 + c1] - q[r0 * 3 + c1] * q[r1 * 3 + c0];
      out += v[i] * v[j] * adj;
    }
  }
  return out;
}

MultiPoly covariant_Ix_raw(const MultiPoly& f) { return covariant_raw(f, Side::X); }
MultiPoly covariant_Iz_raw(const MultiPoly& f) { return covariant_raw(f, Side::Z); }
MultiPoly covariant_Ix(const Class22& F) { return covariant_of_class(F, Side::X); }
MultiPoly covariant_Iz(const Class22& F) { return covariant_of_class(F, Side::Z); }

bool verify_well_defined(const MultiPoly& f0, const MultiPoly& L0) {
  const MultiPoly f = promote(f0);
  const MultiPoly L = promote(L0);
  if (!(f.vars() == L.vars()) || !(f.domain() == L.domain())) {
    throw Error("variable_mismatch", "f and L must share one ring");
  }
  const BlockIndex b = block_index(f.vars());
  MultiPoly sigma(f.vars(), f.domain());
  for (std::size_t i = 0; i < 3; ++i) {
    sigma += MultiPoly::variable(f.vars(), f.domain(), b.x[i]) *
             MultiPoly::variable(f.vars(), f.domain(), b.z[i]);
  }
  const MultiPoly g = f + L * sigma;
  return covariant_Ix_raw(f) == covariant_Ix_raw(g) && covariant_Iz_raw(f) == covariant_Iz_raw(g);
}

bool verify_well_defined_symbolic(const std::optional<MultiPoly>& numeric_f) {
  std::vector<std::string> names{"x1", "x2", "x3", "z1", "z2", "z3"};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) names.push_back("t" + std::to_string(i) + std::to_string(j));
  const std::vector<Monomial> xm = monomials_of_degree(3, 2);
  if (!numeric_f) {
    for (std::size_t k = 0; k < xm.size() * xm.size(); ++k) names.push_back("c" + std::to_string(k + 1));
  }
  const VarSet ring(names);
  const Domain qq = Domain::rationals();
  auto var = [&](std::size_t i) { return MultiPoly::variable(ring, qq, i); };

  MultiPoly L(ring, qq);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) L += var(6 + 3 * i + j) * var(i) * var(3 + j);

  MultiPoly f(ring, qq);
  if (numeric_f) {
    f = embed(promote(*numeric_f), ring);
  } else {
    std::size_t k = 0;
    for (const auto& a : xm) {
      for (const auto& c : xm) {
        Monomial m(ring.size(), 0);
        for (std::size_t i = 0; i < 3; ++i) {
          m[i] = a[i];
          m[3 + i] = c[i];
        }
        m[15 + k++] = 1;
        f.add_term(m, Scalar(qq, 1L));
      }
    }
  }
  return verify_well_defined(f, L);
}

TangencyResult tangency_test(const Class22& F, const std::array<Scalar, 3>& a, Side side) {
  const std::uint64_t p = require_odd_prime_field(F);
  const ff::Fp field(p);
  ff::Point<ff::Fp> pt{};
  for (std::size_t i = 0; i < 3; ++i) pt[i] = a[i].to_domain(F.domain()).residue_value();
  const CompiledGram gram(F, side);
  const auto r = restrict_conic(field, gram.at(field, pt), pt);
  const std::uint64_t disc = 4 * field.sub(field.mul(r.B, r.B), field.mul(r.A, r.C)) % p;
  return {Scalar::residue(disc, p), is_degenerate(field, r)};
}

BranchLocusReport branch_locus_check(const Class22& F) {
  const std::uint64_t p = require_odd_prime_field(F);
  const ff::Fp field(p);
  const CompiledGram gx(F, Side::X), gz(F, Side::Z);
  const ff::CompiledForm ix(covariant_Ix(F)), iz(covariant_Iz(F));

  struct PointData {
    bool degen_x, degen_z, tangent_x, tangent_z, ix_zero, iz_zero;
  };
  auto fn = [&](const ff::Point<ff::Fp>& a) {
    const auto rx = restrict_conic(field, gx.at(field, a), a);
    const auto rz = restrict_conic(field, gz.at(field, a), a);
    auto tangent = [&](const Restricted<ff::Fp>& r) {
      return field.sub(field.mul(r.B, r.B), field.mul(r.A, r.C)) == 0;
    };
    return PointData{is_degenerate(field, rx), is_degenerate(field, rz), tangent(rx), tangent(rz),
                     ix.eval(field, a) == 0, iz.eval(field, a) == 0};
  };
  const auto data = use_parallel() ? kernels::map_points_parallel(field, fn)
                                   : kernels::map_points_serial(field, fn);

  BranchLocusReport rep;
  rep.p = p;
  rep.points = data.size();
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& d = data[i];
    if (d.degen_x || d.degen_z) {
      const auto rec = ff::record_point(field, ff::projective_point(field, i), 1);
      throw Error("degenerate_point", std::string("fiber of the ") + (d.degen_x ? "x" : "z") +
                                          "-projection over " + format_point(rec) + " is not a conic");
    }
    rep.tangent_points_x += d.tangent_x;
    rep.tangent_points_z += d.tangent_z;
    rep.mismatches_direct += (d.tangent_x != d.ix_zero) + (d.tangent_z != d.iz_zero);
    rep.mismatches_swapped += (d.tangent_x != d.iz_zero) + (d.tangent_z != d.ix_zero);
  }
  const bool direct = rep.mismatches_direct <= rep.mismatches_swapped;
  rep.ambiguous = rep.mismatches_direct == 0 && rep.mismatches_swapped == 0;
  if ((direct ? rep.mismatches_direct : rep.mismatches_swapped) == 0) {
    rep.x_projection_branch = direct ? "I_x" : "I_z";
    rep.z_projection_branch = direct ? "I_z" : "I_x";
  } else {
    rep.x_projection_branch = rep.z_projection_branch = "none";
  }
  for (std::size_t i = 0; i < data.size() && rep.counterexamples.size() < 16; ++i) {
    const auto& d = data[i];
    const bool cx = direct ? d.ix_zero : d.iz_zero;
    const bool cz = direct ? d.iz_zero : d.ix_zero;
    const auto rec = ff::record_point(field, ff::projective_point(field, i), 1);
    if (d.tangent_x != cx) rep.counterexamples.push_back({rec.coords, d.tangent_x, cx});
    if (d.tangent_z != cz) rep.counterexamples.push_back({rec.coords, d.tangent_z, cz});
  }
  return rep;
}

nlohmann::json BranchLocusReport::to_json() const {
  nlohmann::json ce = nlohmann::json::array();
  for (const auto& c : counterexamples) {
    ce.push_back({{"point", c.point}, {"tangent", c.tangent}, {"covariant_zero", c.covariant_zero}});
  }
  return {{"p", p},
          {"points", points},
          {"pairing", {{"x_projection", x_projection_branch}, {"z_projection", z_projection_branch}}},
          {"ambiguous", ambiguous},
          {"mismatches_direct", mismatches_direct},
          {"mismatches_swapped", mismatches_swapped},
          {"tangent_points", {{"x", tangent_points_x}, {"z", tangent_points_z}}},
          {"counterexamples", ce},
          {"ok", ok()}};
}

std::optional<ff::PointRecord> find_degenerate_point(const Class22& Fbar, Side side, unsigned ext) {
  const std::uint64_t p = require_odd_prime_field(Fbar);
  const CompiledGram gram(Fbar, side);
  auto run = [&](const auto& field) -> std::optional<ff::PointRecord> {
    using Field = std::decay_t<decltype(field)>;
    auto pred = [&](const ff::Point<Field>& a) {
      return is_degenerate(field, restrict_conic(field, gram.at(field, a), a));
    };
    auto hit = use_parallel() ? kernels::scan_first_parallel(field, pred)
                              : kernels::scan_first_serial(field, pred);
    if (!hit) return std::nullopt;
    return ff::record_point(field, ff::projective_point(field, *hit), ext);
  };
  if (ext == 1) return run(ff::Fp(p));
  if (ext == 2) return run(ff::Fp2(p));
  throw Error("invalid_argument", "extension degree must be 1 or 2");
}

GenericityReport genericity_mod_p(const Class22& F, std::uint64_t p) {
  if (p == 2) throw Error("characteristic_two", "p = 2 is excluded");
  if (!is_prime(mpz_class(p))) throw Error("invalid_prime", std::to_string(p) + " is not prime");
  if (normalization_constant(6) % mpz_class(p) == 0) {
    throw Error("unreliable_prime", "p divides the sextic normalization constant");
  }
  Class22 Fbar = F;
  if (!F.domain().is_prime_field()) {
    Fbar = reduce_mod_p(F, p);
  } else if (F.domain().modulus() != p) {
    throw Error("domain_mismatch", "class over a different prime field");
  }
  GenericityReport rep;
  if (Fbar.is_zero()) {
    rep.reason = "class vanishes mod p";
    return rep;
  }
  const MultiPoly ix = covariant_Ix(Fbar), iz = covariant_Iz(Fbar);
  rep.ix_nonzero = !ix.is_zero();
  rep.iz_nonzero = !iz.is_zero();
  rep.ix_smooth = rep.ix_nonzero && is_smooth_over_fp(ix, 6);
  rep.iz_smooth = rep.iz_nonzero && is_smooth_over_fp(iz, 6);
  for (unsigned ext = 1; ext <= 2 && !rep.degenerate_x; ++ext) rep.degenerate_x = find_degenerate_point(Fbar, Side::X, ext);
  for (unsigned ext = 1; ext <= 2 && !rep.degenerate_z; ++ext) rep.degenerate_z = find_degenerate_point(Fbar, Side::Z, ext);
  rep.generic = rep.ix_smooth && rep.iz_smooth && !rep.degenerate_x && !rep.degenerate_z;
  if (!rep.ix_nonzero || !rep.iz_nonzero) rep.reason = "a covariant vanishes";
  else if (!rep.ix_smooth || !rep.iz_smooth) rep.reason = "a covariant sextic is singular";
  else if (rep.degenerate_x || rep.degenerate_z) rep.reason = "a fiber is not a conic";
  return rep;
}

bool is_generic_mod_p(const Class22& F, std::uint64_t p) { return genericity_mod_p(F, p).generic; }

nlohmann::json GenericityReport::to_json() const {
  return {{"generic", generic},
          {"proxy", "covariants smooth over GF(p); no degenerate fiber over GF(p) or GF(p^2)"},
          {"I_x", {{"nonzero", ix_nonzero}, {"smooth", ix_smooth}}},
          {"I_z", {{"nonzero", iz_nonzero}, {"smooth", iz_smooth}}},
          {"degenerate_point_x", point_json(degenerate_x)},
          {"degenerate_point_z", point_json(degenerate_z)},
          {"reason", reason}};
}

IntegralityProbe integrality_probe(std::uint64_t seed, std::size_t samples, long bound) {
  Rng rng(seed);
  IntegralityProbe probe;
  probe.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    const Class22 F = canonicalize(random_bihomogeneous(rng, Domain::integers(), 2, 2, bound));
    for (Side side : {Side::X, Side::Z}) {
      const MultiPoly c = covariant_of_class(F, side);
      if (c.domain().kind() == DomainKind::Integer) continue;
      (side == Side::X ? probe.nonintegral_x : probe.nonintegral_z)++;
      for (const auto& [m, v] : c.terms()) {
        if (v.rational_value().get_den() > probe.max_denominator) probe.max_denominator = v.rational_value().get_den();
      }
      if (!probe.example) probe.example = format_poly(F.representative());
    }
  }
  return probe;
}

nlohmann::json IntegralityProbe::to_json() const {
  return {{"samples", samples},
          {"nonintegral_I_x", nonintegral_x},
          {"nonintegral_I_z", nonintegral_z},
          {"max_denominator", max_denominator.get_str()},
          {"example", example ? nlohmann::json(*example) : nlohmann::json(nullptr)}};
}

}  // namespace ternary
