#include <omp.h>

#include <utility>

#include "ternary/error.hpp"
#include "ternary/kernels.hpp"
#include "ternary/scalar.hpp"

namespace ternary::kernels {

namespace {

void check_shape(const std::vector<std::uint64_t>& a, std::size_t n, std::uint64_t p) {
  if (a.size() != n * n) throw Error("dimension_mismatch", "determinant needs n*n entries");
  if (p < 2 || p >= (std::uint64_t{1} << 32)) throw Error("invalid_prime", "modulus range");
}

// Partial pivot to a nonzero entry; accumulates the determinant factor.
bool pivot(std::vector<std::uint64_t>& a, std::size_t n, std::size_t k, std::uint64_t p,
           std::uint64_t& det) {
  if (a[k * n + k] == 0) {
    std::size_t i = k + 1;
    while (i < n && a[i * n + k] == 0) ++i;
    if (i == n) return false;
    for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[i * n + j]);
    det = det == 0 ? 0 : p - det;
  }
  det = det * a[k * n + k] % p;
  return true;
}

inline void eliminate_row(std::vector<std::uint64_t>& a, std::size_t n, std::size_t k,
                          std::size_t i, std::uint64_t inv, std::uint64_t p) {
  const std::uint64_t f = a[i * n + k] * inv % p;
  if (f == 0) return;
  const std::uint64_t neg = p - f;
  for (std::size_t j = k + 1; j < n; ++j) {
    a[i * n + j] = (a[i * n + j] + neg * a[k * n + j]) % p;
  }
  a[i * n + k] = 0;
}

}  // namespace

std::uint64_t det_modp_serial(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p) {
  check_shape(a, n, p);
  std::uint64_t det = 1;
  for (auto& x : a) x %= p;
  for (std::size_t k = 0; k < n; ++k) {
    if (!pivot(a, n, k, p, det)) return 0;
    const std::uint64_t inv = mod_inverse(a[k * n + k], p);
    for (std::size_t i = k + 1; i < n; ++i) eliminate_row(a, n, k, i, inv, p);
  }
  return det;
}

std::uint64_t det_modp_parallel(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p) {
  check_shape(a, n, p);
  std::uint64_t det = 1;
  for (auto& x : a) x %= p;
  for (std::size_t k = 0; k < n; ++k) {
    if (!pivot(a, n, k, p, det)) return 0;
    const std::uint64_t inv = mod_inverse(a[k * n + k], p);
    const long rows = static_cast<long>(n - k - 1);
#pragma omp parallel for schedule(static)
    for (long r = 0; r < rows; ++r) {
      eliminate_row(a, n, k, k + 1 + static_cast<std::size_t>(r), inv, p);
    }
  }
  return det;
}

std::uint64_t det_modp(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p) {
  if (n >= kParallelThreshold && omp_get_max_threads() > 1) {
    return det_modp_parallel(std::move(a), n, p);
  }
  return det_modp_serial(std::move(a), n, p);
}

}  // namespace ternary::kernels
