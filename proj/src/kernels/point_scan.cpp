#include "ternary/point_scan.hpp"

#include <omp.h>

#include <algorithm>

#include "ternary/error.hpp"

namespace ternary {

namespace ff {

Fp::Elem Fp::inv(Elem a) const {
  if (a == 0) throw Error("division_by_zero", "inverse of 0 in GF(p)");
  return mod_inverse(a, p);
}

Fp2::Fp2(std::uint64_t modulus) : p(modulus), c0(0), c1(0) {
  if (p == 2) {
    // t^2 = t + 1
    c0 = 1;
    c1 = 1;
    return;
  }
  const Fp base(p);
  for (std::uint64_t c = 2; c < p; ++c) {
    // Euler's criterion: c^((p-1)/2) == -1 for a non-residue.
    std::uint64_t r = 1, b = c, e = (p - 1) / 2;
    while (e) {
      if (e & 1) r = base.mul(r, b);
      b = base.mul(b, b);
      e >>= 1;
    }
    if (r == p - 1) {
      c0 = c;
      return;
    }
  }
  throw Error("invalid_prime", "no quadratic non-residue modulo " + std::to_string(p));
}

Fp2::Elem Fp2::mul(Elem x, Elem y) const {
  const std::uint64_t ac = x.a * y.a % p;
  const std::uint64_t bd = x.b * y.b % p;
  const std::uint64_t cross = (x.a * y.b % p + x.b * y.a % p) % p;
  return {(ac + bd * c0) % p, (cross + bd * c1) % p};
}

Fp2::Elem Fp2::inv(Elem x) const {
  if (is_zero(x)) throw Error("division_by_zero", "inverse of 0 in GF(p^2)");
  // x^(q-2) with q = p^2.
  Elem r = one(), b = x;
  std::uint64_t e = p * p - 2;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::string Fp2::format(Elem x) const {
  if (x.b == 0) return std::to_string(x.a);
  std::string s = x.b == 1 ? "t" : std::to_string(x.b) + "*t";
  return x.a == 0 ? s : std::to_string(x.a) + "+" + s;
}

CompiledForm::CompiledForm(const MultiPoly& f) {
  if (!f.domain().is_prime_field() || f.vars().size() != 3) {
    throw Error("domain_mismatch", "compiled forms are ternary over GF(p)");
  }
  for (const auto& [m, c] : f.terms()) {
    terms_.push_back({{m[0], m[1], m[2]}, c.residue_value()});
    max_exp_ = std::max({max_exp_, m[0], m[1], m[2]});
  }
}

}  // namespace ff

namespace kernels {

namespace {

struct SingularSystem {
  std::vector<ff::CompiledForm> forms;

  explicit SingularSystem(const MultiPoly& f) {
    if (!f.domain().is_prime_field()) {
      throw Error("domain_mismatch", "singular-point search needs a form over GF(p)");
    }
    forms.emplace_back(f);
    for (std::size_t v = 0; v < 3; ++v) forms.emplace_back(partial_derivative(f, v));
  }

  template <class Field>
  bool at(const Field& F, const ff::Point<Field>& pt) const {
    for (const auto& g : forms) {
      if (!F.is_zero(g.eval(F, pt))) return false;
    }
    return true;
  }
};

template <class Field>
std::optional<ff::PointRecord> search(const Field& F, const SingularSystem& sys, unsigned ext,
                                      bool parallel) {
  auto pred = [&](const ff::Point<Field>& pt) { return sys.at(F, pt); };
  auto hit = parallel ? scan_first_parallel(F, pred) : scan_first_serial(F, pred);
  if (!hit) return std::nullopt;
  return ff::record_point(F, ff::projective_point(F, *hit), ext);
}

std::optional<ff::PointRecord> find_singular(const MultiPoly& f, unsigned ext, bool parallel) {
  const SingularSystem sys(f);
  const std::uint64_t p = f.domain().modulus();
  if (ext == 1) return search(ff::Fp(p), sys, 1, parallel);
  if (ext == 2) return search(ff::Fp2(p), sys, 2, parallel);
  throw Error("invalid_argument", "extension degree must be 1 or 2");
}

}  // namespace

std::optional<ff::PointRecord> find_singular_point_serial(const MultiPoly& f, unsigned ext) {
  return find_singular(f, ext, false);
}

std::optional<ff::PointRecord> find_singular_point_parallel(const MultiPoly& f, unsigned ext) {
  return find_singular(f, ext, true);
}

std::optional<ff::PointRecord> find_singular_point(const MultiPoly& f, unsigned ext) {
  return find_singular(f, ext, omp_get_max_threads() > 1);
}

}  // namespace kernels
}  // namespace ternary
