#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace ternary::kernels {

// Dense determinants on row-major n×n matrices. Each kernel exists as a serial
// reference and an OpenMP version that splits the row updates of every
// elimination step across threads; both return identical values.

// Fraction-free (Bareiss) elimination over ZZ.
mpz_class det_bareiss_serial(std::vector<mpz_class> a, std::size_t n);
mpz_class det_bareiss_parallel(std::vector<mpz_class> a, std::size_t n);

// Gaussian elimination over GF(p), p < 2^32.
std::uint64_t det_modp_serial(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p);
std::uint64_t det_modp_parallel(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p);

// Dispatch: the parallel kernel above a size threshold when more than one
// thread is available.
mpz_class det_bareiss(std::vector<mpz_class> a, std::size_t n);
std::uint64_t det_modp(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p);

inline constexpr std::size_t kParallelThreshold = 24;

}  // namespace ternary::kernels
