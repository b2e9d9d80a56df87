#pragma once
// =============================================================================
// Subword complexity of +-1 sequences and block witnesses for f.
//
// p(n) = number of distinct length-n factors.  A sequence whose complexity
// hits the ceiling 2^n at every n is "saturated"; D-finiteness mod 2 forces
// p(n) = o(2^n), so saturation is an obstruction.
//
// For the sign sequence f (see arith) every block appears.  Witness search is
// two-staged: a sieve scan of f(1..X) for the block; if absent (or on
// request), an explicit CRT construction -- choose for each failure position
// i with f(i) != u_i a fresh prime p_i > n, p_i = 3 (mod 4), and solve
//   x = 0 (mod p^{m+1}) for every prime p <= n, m = [log_p n],
//   x = p_i^2 - i (mod p_i^3) for each failure position,
// so that x+i has exactly the square p_i^2 extra (flipping f) while small
// primes contribute to x+i exactly what they contribute to i.  Candidates
// x = R, R+M, R+2M, ... are verified by honest factorization; the spacing
// guarantees a positive proportion succeed, so small k suffice.
// =============================================================================
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vhlab::subword {

// p(0..n_max) indexed by block length (p(0) = 1) for a +-1 (or 0/1)
// sequence; n_max <= 24
std::vector<std::uint64_t> complexity_profile(const std::vector<std::int8_t>& seq,
                                              int n_max);

struct SaturationResult {
  int n = 0;
  std::uint64_t scanned = 0;            // positions x in [0, X-n]
  std::uint64_t present = 0;            // distinct blocks seen (<= 2^n)
  std::vector<std::uint32_t> missing;   // absent block codes (MSB = first entry)
};

// scans the blocks of f(x+1..x+n) for x in [0, X-n]; n <= 24
SaturationResult saturation_scan(int n, std::uint64_t x_limit);

// encode/decode blocks: +1 -> bit 0, -1 -> bit 1, first entry most significant
std::uint32_t encode_block(const std::vector<std::int8_t>& block);
std::vector<std::int8_t> decode_block(std::uint32_t code, int n);

struct WitnessTrace {
  bool via_scan = false;
  std::vector<int> failure_positions;                  // I
  std::vector<std::pair<std::uint64_t, int>> fresh;    // (p_i, m_i)
  mpz_class modulus;                                   // M (0 when via_scan)
  mpz_class residue;                                   // R
  long k = 0;                                          // x = R + k M
};

struct WitnessCertificate {
  std::vector<std::int8_t> block;  // +-1 entries, u_1..u_n
  mpz_class x;                     // f(x+i) = u_i for all i
  WitnessTrace trace;
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct WitnessOptions {
  std::uint64_t scan_limit = 1u << 20;  // sieve scan range (0 disables)
  long max_k = 256;                     // candidates per CRT attempt
  bool force_crt = false;               // skip the scan stage
};

// block length 1..10; throws BudgetExceeded when max_k runs out
WitnessCertificate crt_witness(const std::vector<std::int8_t>& block,
                               const WitnessOptions& opts = {});

// recomputes f(x+i) by factorization; ignores the trace
bool verify_certificate(const WitnessCertificate& cert);

std::string certificate_to_json(const WitnessCertificate& cert);

// the f-sequence f(1..limit) as +-1 entries (sieved, segmented)
std::vector<std::int8_t> f_sequence(std::uint64_t limit);

// contrast sequences for the same scans
std::vector<std::int8_t> odd_residue_sequence(std::uint64_t limit);
std::vector<std::int8_t> catalan_mod2_sequence(std::uint64_t limit);

}  // namespace vhlab::subword
