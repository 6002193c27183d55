#pragma once

#include <array>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace ternary {

// 2x2 rational matrix, row-major.
using QMat2 = std::array<mpq_class, 4>;

// The Picard Gram matrix [[2, 4], [4, 2]] of H_1, H_2.
const QMat2& picard_gram();

// (x, y)·G·(x, y)^t = 2 (x^2 + 4xy + y^2).
mpq_class qform(const mpq_class& x, const mpq_class& y);

// +-{1/4, 1/2, 1, 2, 4}: the admissible values of a22 = det(N).
const std::vector<mpq_class>& admissible_a22();

// All a21 in (1/4)ZZ with qform(a21, a22) = 2, ascending.
std::vector<mpq_class> solve_second_row(const mpq_class& a22);

// All (a11, a12) in (1/4)ZZ with qform(a11, a12) = 2 and
// (a11, a12)·G·(a21, a22)^t = 4, ascending.
std::vector<std::pair<mpq_class, mpq_class>> solve_first_row(const mpq_class& a21, const mpq_class& a22);

struct IsometryCandidate {
  QMat2 a;
  bool quarter_integral = false;
  bool a22_admissible = false;
  mpq_class det;
  QMat2 residual;  // A·G·A^t - G
  nlohmann::json to_json() const;
};

// Every A built from admissible a22, the second-row and first-row solutions,
// with A·G·A^t = G and (1/4)ZZ entries. Sorted lexicographically by entries.
std::vector<IsometryCandidate> enumerate_tau_candidates();

// All matrices with entries in (1/4)ZZ ∩ [-bound, bound] satisfying
// A·G·A^t = G and a22 admissible, by exhaustive search (rows are prefiltered
// by qform = 2). Sorted like enumerate_tau_candidates.
std::vector<QMat2> brute_force_box(long bound);

struct InverseClosure {
  std::size_t members = 0;
  std::size_t closed = 0;  // A^{-1} also in the set
  // A whose inverse is missing, with the constraint the inverse breaks.
  std::vector<std::pair<QMat2, std::string>> violations;
  nlohmann::json to_json() const;
};
InverseClosure inverse_closure(const std::vector<IsometryCandidate>& set);

QMat2 mul2(const QMat2& a, const QMat2& b);
QMat2 transpose2(const QMat2& a);
mpq_class det2(const QMat2& a);
nlohmann::json qmat2_json(const QMat2& a);

}  // namespace ternary
