#include "ternary/poly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ternary/error.hpp"

namespace ternary {

unsigned long total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0UL);
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned long da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

VarSet::VarSet(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (std::size_t i = 0; i < names_->size(); ++i)
    for (std::size_t j = i + 1; j < names_->size(); ++j)
      if ((*names_)[i] == (*names_)[j]) throw Error("variable_mismatch", "duplicate variable");
}

const VarSet& VarSet::xyz() {
  static const VarSet v({"x", "y", "z"});
  return v;
}
const VarSet& VarSet::x123() {
  static const VarSet v({"x1", "x2", "x3"});
  return v;
}
const VarSet& VarSet::z123() {
  static const VarSet v({"z1", "z2", "z3"});
  return v;
}
const VarSet& VarSet::xz() {
  static const VarSet v({"x1", "x2", "x3", "z1", "z2", "z3"});
  return v;
}

std::optional<std::size_t> VarSet::index_of(const std::string& name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

MultiPoly MultiPoly::constant(const VarSet& vars, const Scalar& c) {
  MultiPoly p(vars, c.domain());
  p.add_term(Monomial(vars.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const VarSet& vars, const Domain& dom, std::size_t index) {
  if (index >= vars.size()) throw Error("unknown_variable", "variable index out of range");
  Monomial m(vars.size(), 0);
  m[index] = 1;
  return term(vars, std::move(m), Scalar(dom, 1L));
}

MultiPoly MultiPoly::variable(const VarSet& vars, const Domain& dom, const std::string& name) {
  auto idx = vars.index_of(name);
  if (!idx) throw Error("unknown_variable", "unknown variable '" + name + "'");
  return variable(vars, dom, *idx);
}

MultiPoly MultiPoly::term(const VarSet& vars, Monomial m, const Scalar& c) {
  if (m.size() != vars.size()) throw Error("variable_mismatch", "exponent vector length");
  MultiPoly p(vars, c.domain());
  p.add_term(m, c);
  return p;
}

Scalar MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(dom_, 0L) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (!(c.domain() == dom_)) {
    throw Error("domain_mismatch", "coefficient domain " + c.domain().name() +
                                       " in a " + dom_.name() + " polynomial");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

long MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(ternary::total_degree(terms_.begin()->first));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned long d = ternary::total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return ternary::total_degree(t.first) == d;
  });
}

std::optional<unsigned long> MultiPoly::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return ternary::total_degree(terms_.begin()->first);
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw Error("zero_polynomial", "zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Scalar& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error("zero_polynomial", "zero polynomial has no leading term");
  return terms_.begin()->second;
}

void MultiPoly::require_compatible(const MultiPoly& o) const {
  if (!(dom_ == o.dom_)) {
    throw Error("domain_mismatch", "polynomial domains differ: " + dom_.name() + " vs " +
                                       o.dom_.name());
  }
  if (!(vars_ == o.vars_)) throw Error("variable_mismatch", "polynomial variable sets differ");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (!(c.domain() == dom_)) throw Error("domain_mismatch", "scalar domain differs");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  // Integral domains only, so no coefficient can vanish here.
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  MultiPoly r(a.vars_, a.dom_);
  const std::size_t n = a.vars_.size();
  Monomial m(n);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t e = std::uint64_t{ma[i]} + mb[i];
        if (e > std::numeric_limits<Exponent>::max()) {
          throw Error("exponent_overflow", "exponent exceeds machine word");
        }
        m[i] = static_cast<Exponent>(e);
      }
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
  MultiPoly result = constant(vars_, Scalar(dom_, 1L));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::to_domain(const Domain& target) const {
  MultiPoly r(vars_, target);
  for (const auto& [m, c] : terms_) r.add_term(m, c.to_domain(target));
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.dom_ == b.dom_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  throw Error("invalid_argument", "unknown polynomial operation");
}

MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> images) {
  const std::size_t n = f.vars().size();
  if (images.size() != n) throw Error("dimension_mismatch", "one image per variable required");
  if (n == 0) return f;
  const VarSet& target = images[0].vars();
  for (const auto& img : images) {
    if (!(img.domain() == f.domain())) throw Error("domain_mismatch", "image domain differs");
    if (!(img.vars() == target)) throw Error("variable_mismatch", "images span different rings");
  }
  // powers[i][e] = images[i]^e, built lazily up to the largest exponent used.
  std::vector<std::vector<MultiPoly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent top = 0;
    for (const auto& [m, c] : f.terms()) top = std::max(top, m[i]);
    powers[i].reserve(top + 1);
    powers[i].push_back(MultiPoly::constant(target, Scalar(f.domain(), 1L)));
    for (Exponent e = 1; e <= top; ++e) powers[i].push_back(powers[i].back() * images[i]);
  }
  MultiPoly result(target, f.domain());
  for (const auto& [m, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) t = t * powers[i][m[i]];
    result += t;
  }
  return result;
}

MultiPoly substitute_linear(const MultiPoly& f, std::span<const Scalar> m) {
  const std::size_t k = f.vars().size();
  if (m.size() != k * k) {
    throw Error("dimension_mismatch", "substitution matrix must be " + std::to_string(k) + "x" +
                                          std::to_string(k));
  }
  if (!f.is_homogeneous()) throw Error("not_homogeneous", "linear substitution needs a form");
  std::vector<MultiPoly> images;
  images.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    MultiPoly img(f.vars(), f.domain());
    for (std::size_t i = 0; i < k; ++i) {
      Monomial e(k, 0);
      e[i] = 1;
      img.add_term(e, m[i * k + j]);
    }
    images.push_back(std::move(img));
  }
  return substitute(f, images);
}

MultiPoly embed(const MultiPoly& f, const VarSet& target) {
  std::vector<std::size_t> where(f.vars().size());
  for (std::size_t i = 0; i < where.size(); ++i) {
    auto idx = target.index_of(f.vars().name(i));
    if (!idx) throw Error("variable_mismatch", "variable '" + f.vars().name(i) + "' missing");
    where[i] = *idx;
  }
  MultiPoly r(target, f.domain());
  Monomial m(target.size());
  for (const auto& [e, c] : f.terms()) {
    std::fill(m.begin(), m.end(), 0);
    for (std::size_t i = 0; i < where.size(); ++i) m[where[i]] = e[i];
    r.add_term(m, c);
  }
  return r;
}

MultiPoly partial_derivative(const MultiPoly& f, std::size_t var) {
  if (var >= f.vars().size()) throw Error("unknown_variable", "variable index out of range");
  MultiPoly r(f.vars(), f.domain());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    r.add_term(d, c * Scalar(f.domain(), static_cast<long>(m[var])));
  }
  return r;
}

MultiPoly partial_derivative(const MultiPoly& f, const std::string& var) {
  auto idx = f.vars().index_of(var);
  if (!idx) throw Error("unknown_variable", "unknown variable '" + var + "'");
  return partial_derivative(f, *idx);
}

std::pair<Scalar, MultiPoly> content_and_primitive(const MultiPoly& f) {
  if (f.domain().kind() != DomainKind::Integer) {
    throw Error("domain_mismatch", "content is defined for integer polynomials");
  }
  if (f.is_zero()) throw Error("zero_polynomial", "content of the zero polynomial");
  mpz_class g = 0;
  for (const auto& [m, c] : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.rational_value().get_num_mpz_t());
  }
  if (f.leading_coefficient().sign() < 0) g = -g;
  Scalar content = Scalar::integer(g);
  MultiPoly prim(f.vars(), f.domain());
  for (const auto& [m, c] : f.terms()) prim.add_term(m, c / content);
  return {content, prim};
}

MultiPoly reduce_mod_p(const MultiPoly& f, std::uint64_t p) {
  Domain fp = Domain::prime_field(p);
  if (f.domain().is_prime_field()) {
    if (f.domain() == fp) return f;
    throw Error("domain_mismatch", "cannot reduce a residue polynomial to another prime");
  }
  return f.to_domain(fp);
}

Scalar evaluate(const MultiPoly& f, std::span<const Scalar> point) {
  if (point.size() != f.vars().size()) throw Error("dimension_mismatch", "point dimension");
  Scalar acc(f.domain(), 0L);
  for (const auto& [m, c] : f.terms()) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= point[i].pow(m[i]);
    acc += t;
  }
  return acc;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned long degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial cur(nvars, 0);
  // Recursive fill, first variable taking the largest exponent first, which is
  // already descending lex order.
  auto rec = [&](auto&& self, std::size_t i, unsigned long left) -> void {
    if (i + 1 == nvars) {
      cur[i] = static_cast<Exponent>(left);
      out.push_back(cur);
      return;
    }
    for (unsigned long e = left + 1; e-- > 0;) {
      cur[i] = static_cast<Exponent>(e);
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace ternary
