#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ternary/ffield.hpp"

namespace ternary::kernels {

// Exhaustive loops over P^2(F_q). The serial versions are the reference; the
// OpenMP versions return the same answer for any schedule (the lowest index
// for searches, an index-ordered vector for maps).

template <class Field, class Pred>
std::optional<std::size_t> scan_first_serial(const Field& F, Pred pred) {
  const std::size_t n = ff::projective_point_count(F);
  for (std::size_t i = 0; i < n; ++i) {
    if (pred(ff::projective_point(F, i))) return i;
  }
  return std::nullopt;
}

template <class Field, class Pred>
std::optional<std::size_t> scan_first_parallel(const Field& F, Pred pred) {
  const std::size_t n = ff::projective_point_count(F);
  std::size_t best = n;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (k < best && pred(ff::projective_point(F, k))) best = k;
  }
  if (best == n) return std::nullopt;
  return best;
}

template <class Field, class Fn>
auto map_points_serial(const Field& F, Fn fn) {
  using R = decltype(fn(ff::projective_point(F, 0)));
  const std::size_t n = ff::projective_point_count(F);
  std::vector<R> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(ff::projective_point(F, i));
  return out;
}

template <class Field, class Fn>
auto map_points_parallel(const Field& F, Fn fn) {
  using R = decltype(fn(ff::projective_point(F, 0)));
  const std::size_t n = ff::projective_point_count(F);
  std::vector<R> out(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = fn(ff::projective_point(F, k));
  }
  return out;
}

// A point of P^2 where f and its three partials vanish, searched over GF(p)
// (ext = 1) or GF(p^2) (ext = 2). f must be a ternary form over GF(p).
std::optional<ff::PointRecord> find_singular_point_serial(const MultiPoly& f, unsigned ext);
std::optional<ff::PointRecord> find_singular_point_parallel(const MultiPoly& f, unsigned ext);
std::optional<ff::PointRecord> find_singular_point(const MultiPoly& f, unsigned ext);

}  // namespace ternary::kernels
