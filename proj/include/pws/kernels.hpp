#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "pws/padic.hpp"

namespace pws::kernels {

/// Global switch for the OpenMP paths.  The serial reference implementations
/// stay available unconditionally; tests compare the two bit-for-bit.
bool parallel_enabled();
void set_parallel(bool on);

/// Inputs below which the dispatcher always stays serial.
constexpr long kParallelThreshold = 24;

/// out[d] = sum_i a[i] * b[d-i], for d in [0, out_len).
void convolve_serial(const std::vector<PadicNumber>& a, const std::vector<PadicNumber>& b,
                     std::vector<PadicNumber>& out, long out_len);
void convolve_parallel(const std::vector<PadicNumber>& a, const std::vector<PadicNumber>& b,
                       std::vector<PadicNumber>& out, long out_len);
void convolve(const std::vector<PadicNumber>& a, const std::vector<PadicNumber>& b,
              std::vector<PadicNumber>& out, long out_len);

/// Pascal triangle rows 0..n-1 (row k holds C(k,0..k)).
std::vector<std::vector<mpz_class>> pascal_rows(long n);

/// Shared grow-only cache of Pascal rows (>= n rows); safe under concurrent
/// readers, single-writer growth.
std::shared_ptr<const std::vector<std::vector<mpz_class>>> pascal_cache(long n);

/// Basis change between powers of pi and powers of u = 1 + pi.  Both are
/// unitriangular integer transforms, hence exact on truncations.
/// to_u:   b[j] = sum_{k>=j} a[k] * C(k,j) * (-1)^(k-j)
/// from_u: a[k] = sum_{m>=k} b[m] * C(m,k)
void pi_to_u_serial(const std::vector<PadicNumber>& a, std::vector<PadicNumber>& b,
                    const std::vector<std::vector<mpz_class>>& pascal);
void pi_to_u_parallel(const std::vector<PadicNumber>& a, std::vector<PadicNumber>& b,
                      const std::vector<std::vector<mpz_class>>& pascal);
void u_to_pi_serial(const std::vector<PadicNumber>& b, std::vector<PadicNumber>& a,
                    const std::vector<std::vector<mpz_class>>& pascal);
void u_to_pi_parallel(const std::vector<PadicNumber>& b, std::vector<PadicNumber>& a,
                      const std::vector<std::vector<mpz_class>>& pascal);
void pi_to_u(const std::vector<PadicNumber>& a, std::vector<PadicNumber>& b,
             const std::vector<std::vector<mpz_class>>& pascal);
void u_to_pi(const std::vector<PadicNumber>& b, std::vector<PadicNumber>& a,
             const std::vector<std::vector<mpz_class>>& pascal);

}  // namespace pws::kernels
