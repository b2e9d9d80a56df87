#include "vhlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vhlab::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// deterministic below 2^64 with the 12 known-sufficient bases
constexpr u64 kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : kMrBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Pollard-Brent with deterministic parameter sequence; n odd composite > 1,
// no factor below the trial-division bound
u64 pollard_brent_u64(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1, q = 1, ys = 0;
    const int m = 128;
    int r = 1;
    while (d == 1) {
      x = y;
      for (int i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (int k = 0; k < r && d == 1; k += m) {
        ys = y;
        int lim = std::min(m, r - k);
        for (int i = 0; i < lim; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
      r *= 2;
    }
    if (d == n) {
      // backtrack
      d = 1;
      u64 z = ys;
      while (d == 1) {
        z = (mulmod(z, z, n) + c) % n;
        d = std::gcd(x > z ? x - z : z - x, n);
      }
    }
    if (d != n) return d;
  }
}

void factor_u64_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (miller_rabin_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent_u64(n);
  factor_u64_into(d, out);
  factor_u64_into(n / d, out);
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t lim = 100000;
    std::vector<bool> comp(lim + 1, false);
    std::vector<std::uint32_t> ps;
    for (std::uint32_t i = 2; i <= lim; ++i) {
      if (!comp[i]) {
        ps.push_back(i);
        for (std::uint64_t j = (std::uint64_t)i * i; j <= lim; j += i)
          comp[j] = true;
      }
    }
    return ps;
  }();
  return primes;
}

// deterministic-ish rho over mpz for inputs beyond 64 bits
mpz_class pollard_brent_mpz(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1, q = 1, ys = 0, diff;
    const int m = 128;
    long r = 1;
    while (d == 1) {
      x = y;
      for (long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (long k = 0; k < r && d == 1; k += m) {
        ys = y;
        long lim = std::min<long>(m, r - k);
        for (long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          diff = x - y;
          q = q * abs(diff) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (d == n) {
      d = 1;
      mpz_class z = ys;
      while (d == 1) {
        z = (z * z + c) % n;
        diff = x - z;
        diff = abs(diff);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n) return d;
  }
}

void factor_mpz_into(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  if (n.fits_ulong_p() || mpz_sizeinbase(n.get_mpz_t(), 2) <= 63) {
    std::vector<u64> small;
    factor_u64_into(n.get_ui(), small);
    for (u64 p : small) out.push_back(mpz_class(std::to_string(p)));
    return;
  }
  mpz_class d = pollard_brent_mpz(n);
  factor_mpz_into(d, out);
  factor_mpz_into(n / d, out);
}

}  // namespace

mpz_class Factorization::value() const {
  mpz_class v = 1;
  for (const auto& [p, e] : primes)
    for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

bool is_prime_u64(u64 n) { return miller_rabin_u64(n); }

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 63) return miller_rabin_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Factorization factorize(const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 128)
    throw std::invalid_argument("factorize: n must be < 2^128");
  mpz_class rest = n;
  std::vector<mpz_class> factors;
  for (std::uint32_t p : small_primes()) {
    if (mpz_class(rest) < (u64)p * p) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      factors.push_back(p);
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  if (rest > 1) factor_mpz_into(rest, factors);
  std::sort(factors.begin(), factors.end());
  Factorization f;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    f.primes.emplace_back(factors[i], static_cast<unsigned>(j - i));
    i = j;
  }
  // re-check before returning: the product and the primality of every factor
  if (f.value() != n) throw std::logic_error("factorize: product check failed");
  for (const auto& [p, e] : f.primes)
    if (!is_prime(p)) throw std::logic_error("factorize: primality check failed");
  return f;
}

Factorization factorize_u64(u64 n) { return factorize(mpz_class(std::to_string(n))); }

mpz_class max_square_divisor(const mpz_class& n) {
  mpz_class m = 1;
  for (const auto& [p, e] : factorize(n).primes)
    for (unsigned i = 0; i < e / 2; ++i) m *= p;
  return m;
}

u64 max_square_divisor_u64(u64 n) {
  mpz_class m = max_square_divisor(mpz_class(std::to_string(n)));
  return m.get_ui();
}

int f_sign(const mpz_class& n) {
  mpz_class m = max_square_divisor(n);
  while (mpz_even_p(m.get_mpz_t())) m >>= 1;
  return mpz_class(m % 4) == 1 ? 1 : -1;
}

int f_sign_u64(u64 n) {
  u64 m = max_square_divisor_u64(n);
  while ((m & 1) == 0) m >>= 1;
  return (m & 3) == 1 ? 1 : -1;
}

int odd_residue_sign(u64 n) {
  if (n == 0) throw std::invalid_argument("odd_residue_sign: n must be >= 1");
  while ((n & 1) == 0) n >>= 1;
  return (n & 3) == 1 ? 1 : -1;
}

std::vector<std::uint32_t> phi_sieve(std::uint32_t limit) {
  std::vector<std::uint32_t> phi(limit + 1);
  for (std::uint32_t i = 0; i <= limit; ++i) phi[i] = i;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (phi[i] == i) {  // prime
      for (std::uint64_t j = i; j <= limit; j += i) phi[j] -= phi[j] / i;
    }
  }
  phi[0] = 0;
  return phi;
}

std::optional<u64> gauss_identity_counterexample(u64 limit) {
  auto phi = phi_sieve(static_cast<std::uint32_t>(limit));
  std::vector<u64> acc(limit + 1, 0);
  for (u64 d = 1; d <= limit; ++d)
    for (u64 m = d; m <= limit; m += d) acc[m] += phi[d];
  for (u64 m = 1; m <= limit; ++m)
    if (acc[m] != m) return m;
  return std::nullopt;
}

void m_sieve_range(u64 lo, u64 hi, std::vector<std::uint32_t>& out) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("m_sieve_range: bad range");
  out.assign(hi - lo, 1);
  for (u64 d = 2; d * d < hi; ++d) {
    u64 dd = d * d;
    u64 start = ((lo + dd - 1) / dd) * dd;
    for (u64 j = start; j < hi; j += dd)
      out[j - lo] = static_cast<std::uint32_t>(d);  // ascending d: ends at max
  }
}

DensityResult density_scan(u64 limit, u64 segment) {
  if (limit < 1) throw std::invalid_argument("density_scan: limit must be >= 1");
  if (segment < 16) segment = 16;
  DensityResult res;
  res.total = limit;
  res.segments = 0;
  std::vector<std::uint32_t> m;
  for (u64 lo = 1; lo <= limit; lo += segment) {
    u64 hi = std::min(limit + 1, lo + segment);
    m_sieve_range(lo, hi, m);
    for (u64 i = 0; i < hi - lo; ++i)
      if ((m[i] & 3u) == 1u) ++res.matched;
    ++res.segments;
  }
  res.density = static_cast<double>(res.matched) / static_cast<double>(limit);
  return res;
}

double density_constant() {
  const double catalan = 0.9159655941772190150546035149324;
  const double pi = 3.14159265358979323846264338327950288;
  return 3.0 / 8.0 + 3.0 * catalan / (pi * pi);
}

QfResult qf_scan(u64 limit) {
  QfResult res;
  res.reciprocal_sum = 0;
  // q = p^e <= limit, p = 3 (mod 4), [e/2] odd  (so e in {2,3, 6,7, 10,11, ...})
  for (u64 p = 3; p * p <= limit; p += 2) {
    if (p % 4 != 3 || !is_prime_u64(p)) continue;
    u64 q = p;
    for (int e = 2; ; ++e) {
      if (q > limit / p) break;
      q *= p;
      if (((e / 2) & 1) == 1) res.members.push_back(q);
    }
  }
  std::sort(res.members.begin(), res.members.end());
  for (u64 q : res.members) {
    mpq_class term(1, 1);
    term /= mpz_class(std::to_string(q));
    res.reciprocal_sum += term;
  }
  return res;
}

}  // namespace vhlab::arith
