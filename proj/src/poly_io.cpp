#include "ternary/poly_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "ternary/error.hpp"

namespace ternary {

namespace {

struct RawTerm {
  mpq_class coeff{1};
  std::map<std::string, unsigned long> powers;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return s_.substr(start, pos_ - start);
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a variable");
    return s_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

RawTerm parse_term(Lexer& lex) {
  RawTerm t;
  do {
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class v(mpz_class(lex.digits()));
      if (lex.accept('/')) {
        mpz_class den(lex.digits());
        if (den == 0) lex.fail("zero denominator");
        v /= den;
      }
      t.coeff *= v;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = lex.ident();
      unsigned long e = 1;
      if (lex.accept('^')) {
        std::string d = lex.digits();
        if (d.size() > 9) lex.fail("exponent too large");
        e = std::stoul(d);
      }
      t.powers[name] += e;
    } else {
      lex.fail("unexpected character");
    }
  } while (lex.accept('*'));
  return t;
}

VarSet infer_vars(const std::vector<RawTerm>& terms) {
  bool fits_xyz = true, fits_xz = true;
  for (const auto& t : terms) {
    for (const auto& [name, e] : t.powers) {
      fits_xyz = fits_xyz && VarSet::xyz().index_of(name).has_value();
      fits_xz = fits_xz && VarSet::xz().index_of(name).has_value();
    }
  }
  if (fits_xyz) return VarSet::xyz();
  if (fits_xz) return VarSet::xz();
  throw ParseError("variables must come from {x,y,z} or {x1,x2,x3,z1,z2,z3}");
}

MultiPoly assemble(const std::vector<RawTerm>& terms, const VarSet& vars,
                   const std::optional<Domain>& domain) {
  Domain dom = Domain::integers();
  if (domain) {
    dom = *domain;
  } else {
    for (const auto& t : terms)
      if (t.coeff.get_den() != 1) dom = Domain::rationals();
  }
  MultiPoly f(vars, dom);
  for (const auto& t : terms) {
    Monomial m(vars.size(), 0);
    for (const auto& [name, e] : t.powers) {
      auto idx = vars.index_of(name);
      if (!idx) throw ParseError("variable '" + name + "' is not in the ring");
      m[*idx] += static_cast<Exponent>(e);
    }
    if (dom.kind() == DomainKind::Integer && t.coeff.get_den() != 1) {
      throw ParseError("non-integral coefficient for an integer polynomial");
    }
    f.add_term(m, Scalar(dom, t.coeff));
  }
  return f;
}

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::optional<VarSet>& vars,
                     const std::optional<Domain>& domain) {
  Lexer lex(text);
  std::vector<RawTerm> terms;
  if (lex.done()) throw ParseError("empty polynomial");
  bool negate = false;
  if (lex.accept('-')) {
    negate = true;
  } else {
    lex.accept('+');
  }
  while (true) {
    RawTerm t = parse_term(lex);
    if (negate) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    if (lex.done()) break;
    if (lex.accept('+')) {
      negate = false;
    } else if (lex.accept('-')) {
      negate = true;
    } else {
      lex.fail("expected + or -");
    }
  }
  return assemble(terms, vars ? *vars : infer_vars(terms), domain);
}

std::string format_poly(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    bool negative = c.sign() < 0 && !c.domain().is_prime_field();
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool constant = total_degree(m) == 0;
    bool wrote = false;
    if (!mag.is_one() || constant) {
      os << mag.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << f.vars().name(i);
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

nlohmann::json poly_to_json(const MultiPoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({{"e", m}, {"c", c.to_string()}});
  }
  return {{"vars", f.vars().names()}, {"domain", f.domain().name()}, {"terms", terms}};
}

MultiPoly poly_from_json(const nlohmann::json& j, const std::optional<Domain>& domain) {
  try {
    VarSet vars(j.at("vars").get<std::vector<std::string>>());
    std::optional<Domain> dom = domain;
    if (!dom && j.contains("domain")) dom = Domain::parse(j.at("domain").get<std::string>());
    std::vector<RawTerm> raw;
    std::vector<Monomial> monos;
    for (const auto& t : j.at("terms")) {
      Monomial e = t.at("e").get<Monomial>();
      if (e.size() != vars.size()) throw ParseError("exponent vector length mismatch");
      std::string c = t.at("c").is_string() ? t.at("c").get<std::string>()
                                            : std::to_string(t.at("c").get<long long>());
      RawTerm r;
      if (r.coeff.set_str(c, 10) != 0 || r.coeff.get_den() == 0) {
        throw ParseError("malformed coefficient '" + c + "'");
      }
      r.coeff.canonicalize();
      raw.push_back(std::move(r));
      monos.push_back(std::move(e));
    }
    Domain d = Domain::integers();
    if (dom) {
      d = *dom;
    } else {
      for (const auto& r : raw)
        if (r.coeff.get_den() != 1) d = Domain::rationals();
    }
    MultiPoly f(vars, d);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (d.kind() == DomainKind::Integer && raw[i].coeff.get_den() != 1) {
        throw ParseError("non-integral coefficient for an integer polynomial");
      }
      f.add_term(monos[i], Scalar(d, raw[i].coeff));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

MultiPoly parse_poly_any(const std::string& content, const std::optional<Domain>& domain) {
  auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return poly_from_json(j, domain);
  }
  // Text files may carry '#' comment lines.
  std::istringstream in(content);
  std::string line, body;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    body += line + ' ';
  }
  return parse_poly(body, std::nullopt, domain);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MultiPoly read_poly_file(const std::string& path, const std::optional<Domain>& domain) {
  return parse_poly_any(read_text_file(path), domain);
}

Mat3 mat3_from_json(const nlohmann::json& j, const std::optional<Domain>& domain) {
  try {
    nlohmann::json entries = j;
    std::optional<Domain> dom = domain;
    if (j.is_object()) {
      entries = j.at("entries");
      if (!dom && j.contains("domain")) dom = Domain::parse(j.at("domain").get<std::string>());
    }
    if (entries.is_array() && entries.size() == 3 && entries[0].is_array()) {
      nlohmann::json flat = nlohmann::json::array();
      for (const auto& row : entries)
        for (const auto& e : row) flat.push_back(e);
      entries = flat;
    }
    if (!entries.is_array() || entries.size() != 9) {
      throw ParseError("matrix must be a row-major array of 9 scalars");
    }
    std::vector<mpq_class> vals;
    for (const auto& e : entries) {
      std::string s = e.is_string() ? e.get<std::string>() : std::to_string(e.get<long long>());
      mpq_class v;
      if (v.set_str(s, 10) != 0 || v.get_den() == 0) throw ParseError("bad entry '" + s + "'");
      v.canonicalize();
      vals.push_back(v);
    }
    Domain d = Domain::integers();
    if (dom) {
      d = *dom;
    } else {
      for (const auto& v : vals)
        if (v.get_den() != 1) d = Domain::rationals();
    }
    Mat3 m(d);
    for (std::size_t k = 0; k < 9; ++k) m(k / 3, k % 3) = Scalar(d, vals[k]);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
}

nlohmann::json mat3_to_json(const Mat3& m) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& e : m.entries()) a.push_back(e.to_string());
  return a;
}

Mat3 read_mat3_file(const std::string& path, const std::optional<Domain>& domain) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return mat3_from_json(j, domain);
}

}  // namespace ternary
