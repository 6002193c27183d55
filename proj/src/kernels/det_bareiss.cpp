#include <omp.h>

#include <utility>

#include "ternary/error.hpp"
#include "ternary/kernels.hpp"

namespace ternary::kernels {

namespace {

// Moves a nonzero entry into (k, k); returns false when column k is zero below
// the diagonal. Flips `negate` on a swap.
bool pivot_rows(std::vector<mpz_class>& a, std::size_t n, std::size_t k, bool& negate) {
  if (sgn(a[k * n + k]) != 0) return true;
  for (std::size_t i = k + 1; i < n; ++i) {
    if (sgn(a[i * n + k]) != 0) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[i * n + j]);
      negate = !negate;
      return true;
    }
  }
  return false;
}

void check_shape(const std::vector<mpz_class>& a, std::size_t n) {
  if (a.size() != n * n) throw Error("dimension_mismatch", "determinant needs n*n entries");
}

}  // namespace

mpz_class det_bareiss_serial(std::vector<mpz_class> a, std::size_t n) {
  check_shape(a, n);
  if (n == 0) return 1;
  bool negate = false;
  mpz_class prev = 1, t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot_rows(a, n, k, negate)) return 0;
    const mpz_class& piv = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpz_class lead = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class& x = a[i * n + j];
        x *= piv;
        t = lead * a[k * n + j];
        x -= t;
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
  }
  mpz_class det = a[n * n - 1];
  return negate ? mpz_class(-det) : det;
}

mpz_class det_bareiss_parallel(std::vector<mpz_class> a, std::size_t n) {
  check_shape(a, n);
  if (n == 0) return 1;
  bool negate = false;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot_rows(a, n, k, negate)) return 0;
    const mpz_class& piv = a[k * n + k];
    const long rows = static_cast<long>(n - k - 1);
#pragma omp parallel
    {
      mpz_class t;
#pragma omp for schedule(static)
      for (long r = 0; r < rows; ++r) {
        const std::size_t i = k + 1 + static_cast<std::size_t>(r);
        const mpz_class lead = a[i * n + k];
        for (std::size_t j = k + 1; j < n; ++j) {
          mpz_class& x = a[i * n + j];
          x *= piv;
          t = lead * a[k * n + j];
          x -= t;
          mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        }
      }
    }
    prev = piv;
  }
  mpz_class det = a[n * n - 1];
  return negate ? mpz_class(-det) : det;
}

mpz_class det_bareiss(std::vector<mpz_class> a, std::size_t n) {
  if (n >= kParallelThreshold && omp_get_max_threads() > 1) {
    return det_bareiss_parallel(std::move(a), n);
  }
  return det_bareiss_serial(std::move(a), n);
}

}  // namespace ternary::kernels
