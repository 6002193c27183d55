#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "ternary/poly.hpp"

namespace ternary {

// Text syntax: terms joined by + / -, each term a *-product of rational
// numbers and var[^exp] factors, e.g. "3*x1^2*z2^2 - 1/2*x1*x2*z1*z3".
//
// Without an explicit ring the alphabet is inferred: {x,y,z} or
// {x1,x2,x3,z1,z2,z3}. Without an explicit domain the result is over ZZ when
// every coefficient is integral and over QQ otherwise.
MultiPoly parse_poly(const std::string& text,
                     const std::optional<VarSet>& vars = std::nullopt,
                     const std::optional<Domain>& domain = std::nullopt);

// Canonical text form; parse_poly(format_poly(f), f.vars(), f.domain()) == f.
std::string format_poly(const MultiPoly& f);

// {"vars": [...], "terms": [{"e": [...], "c": "num/den"}], "domain": "QQ"}
nlohmann::json poly_to_json(const MultiPoly& f);
MultiPoly poly_from_json(const nlohmann::json& j,
                         const std::optional<Domain>& domain = std::nullopt);

// Accepts either JSON (leading '{') or the text syntax.
MultiPoly parse_poly_any(const std::string& content,
                         const std::optional<Domain>& domain = std::nullopt);
MultiPoly read_poly_file(const std::string& path,
                         const std::optional<Domain>& domain = std::nullopt);

// Row-major 9-array of scalar strings.
Mat3 mat3_from_json(const nlohmann::json& j, const std::optional<Domain>& domain = std::nullopt);
nlohmann::json mat3_to_json(const Mat3& m);
Mat3 read_mat3_file(const std::string& path, const std::optional<Domain>& domain = std::nullopt);

std::string read_text_file(const std::string& path);

}  // namespace ternary
