#pragma once
// =============================================================================
// Multiplicative arithmetic around the square-part function.
//
//   m(n) = the largest integer whose square divides n  (so m(p^e) = p^[e/2]),
//   f(n) = +1 or -1 according to (odd part of m(n)) mod 4.
//
// f is multiplicative, depends only on the odd part of n, and its prime-power
// support Q_f = { q = p^e : f(q) = -1 } consists exactly of the powers of
// primes p = 3 (mod 4) with [e/2] odd.  The natural density of
// { n : m(n) = 1 (mod 4) } is 3/8 + 3G/pi^2 with G Catalan's constant,
// because {m(n) = m} has density (6/pi^2)/m^2 and sum over m = 1 (mod 4)
// of 1/m^2 equals pi^2/16 + G/2.
//
// Everything here is exact: u64 fast paths use 128-bit intermediates, the
// general path uses GMP.  Factorization: trial division + deterministic
// Miller-Rabin below 2^64, BPSW + Pollard-Brent rho above, with the result
// re-checked (product and primality) before it is returned.
// =============================================================================
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace vhlab::arith {

struct Factorization {
  // ascending primes with exponents; empty for n = 1
  std::vector<std::pair<mpz_class, unsigned>> primes;
  mpz_class value() const;
};

bool is_prime_u64(std::uint64_t n);
bool is_prime(const mpz_class& n);

// n >= 1 and n < 2^128 (the verified range; larger inputs are rejected)
Factorization factorize(const mpz_class& n);
Factorization factorize_u64(std::uint64_t n);

mpz_class max_square_divisor(const mpz_class& n);  // m(n)
std::uint64_t max_square_divisor_u64(std::uint64_t n);

int f_sign(const mpz_class& n);  // +1 / -1
int f_sign_u64(std::uint64_t n);

// Contrast character for subword scans: (odd part of n) mod 4 mapped to +-1.
// Completely multiplicative, unlike nothing -- it is the easy cousin of f and
// deliberately named apart from it.
int odd_residue_sign(std::uint64_t n);

// phi(0..limit) by linear sieve (phi[0] = 0)
std::vector<std::uint32_t> phi_sieve(std::uint32_t limit);

// checks sum_{d | m} phi(d) == m for every m <= limit; returns the first
// failing m if any
std::optional<std::uint64_t> gauss_identity_counterexample(std::uint64_t limit);

// writes m(n) for n in [lo, hi) into out (resized to hi-lo); lo >= 1
void m_sieve_range(std::uint64_t lo, std::uint64_t hi,
                   std::vector<std::uint32_t>& out);

struct DensityResult {
  std::uint64_t matched = 0;  // # n <= limit with m(n) = 1 (mod 4)
  std::uint64_t total = 0;
  double density = 0.0;
  std::uint64_t segments = 1;  // how many sieve segments were used
};
// segment = max numbers sieved at once; larger limits engage segmented mode
DensityResult density_scan(std::uint64_t limit,
                           std::uint64_t segment = std::uint64_t(1) << 24);

double density_constant();  // 3/8 + 3G/pi^2 = 0.6534203...

struct QfResult {
  std::vector<std::uint64_t> members;  // ascending prime powers q with f(q) = -1
  mpq_class reciprocal_sum;            // exact sum of 1/q
};
QfResult qf_scan(std::uint64_t limit);

}  // namespace vhlab::arith
