#include "ternary/random.hpp"

#include "ternary/gl3.hpp"

namespace ternary {

Scalar random_scalar(Rng& rng, const Domain& d, long bound) {
  switch (d.kind()) {
    case DomainKind::Integer: {
      std::uniform_int_distribution<long> u(-bound, bound);
      return Scalar(d, u(rng));
    }
    case DomainKind::Rational: {
      std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
      const long a = num(rng);
      return Scalar(d, mpq_class(a, den(rng)));
    }
    case DomainKind::PrimeField: {
      std::uniform_int_distribution<std::uint64_t> u(0, d.modulus() - 1);
      return Scalar::residue(u(rng), d.modulus());
    }
  }
  return Scalar(d, 0L);
}

Scalar random_nonzero_scalar(Rng& rng, const Domain& d, long bound) {
  for (;;) {
    Scalar s = random_scalar(rng, d, bound);
    if (!s.is_zero()) return s;
  }
}

MultiPoly random_form(Rng& rng, const VarSet& vars, const Domain& d, unsigned degree,
                      long bound) {
  MultiPoly f(vars, d);
  for (const auto& m : monomials_of_degree(vars.size(), degree)) {
    f.add_term(m, random_scalar(rng, d, bound));
  }
  return f;
}

MultiPoly random_bihomogeneous(Rng& rng, const Domain& d, unsigned dx, unsigned dz,
                               long bound) {
  MultiPoly f(VarSet::xz(), d);
  for (const auto& mx : monomials_of_degree(3, dx)) {
    for (const auto& mz : monomials_of_degree(3, dz)) {
      Monomial m{mx[0], mx[1], mx[2], mz[0], mz[1], mz[2]};
      f.add_term(m, random_scalar(rng, d, bound));
    }
  }
  return f;
}

Mat3 random_gl3(Rng& rng, const Domain& d, long bound) {
  for (;;) {
    Mat3 m(d);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = random_scalar(rng, d, bound);
    if (!det3(m).is_zero()) return m;
  }
}

Mat3 random_sl3(Rng& rng, const Domain& d, long bound) {
  Mat3 lo = Mat3::identity(d), up = Mat3::identity(d);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lo(i, j) = random_scalar(rng, d, bound);
      up(j, i) = random_scalar(rng, d, bound);
    }
  }
  return lo * up;
}

}  // namespace ternary
