#include "vhlab/subword.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "vhlab/arith.hpp"

namespace vhlab::subword {

namespace {

constexpr std::uint64_t kSegment = std::uint64_t(1) << 22;

inline int bit_of(std::int8_t v) { return v > 0 ? 0 : 1; }

std::vector<std::int8_t> signs_from_m(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint32_t> m;
  arith::m_sieve_range(lo, hi, m);
  std::vector<std::int8_t> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint32_t v = m[i];
    while ((v & 1) == 0) v >>= 1;
    out[i] = (v & 3) == 1 ? 1 : -1;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> complexity_profile(
    const std::vector<std::int8_t>& seq, int n_max) {
  if (n_max < 0 || n_max > 24)
    throw std::invalid_argument("complexity_profile: need 0 <= n_max <= 24");
  if (static_cast<std::size_t>(n_max) > seq.size())
    throw std::invalid_argument("complexity_profile: sequence shorter than n_max");
  std::vector<std::uint64_t> p(n_max + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<bool> seen(std::size_t(1) << n, false);
    std::uint32_t mask = (n == 32) ? ~0u : ((1u << n) - 1);
    std::uint32_t code = 0;
    std::uint64_t distinct = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      code = ((code << 1) | static_cast<std::uint32_t>(bit_of(seq[i]))) & mask;
      if (i + 1 >= static_cast<std::size_t>(n) && !seen[code]) {
        seen[code] = true;
        ++distinct;
      }
    }
    p[n] = distinct;
  }
  return p;
}

std::uint32_t encode_block(const std::vector<std::int8_t>& block) {
  if (block.empty() || block.size() > 24)
    throw std::invalid_argument("encode_block: length must be 1..24");
  std::uint32_t code = 0;
  for (std::int8_t v : block) code = (code << 1) | static_cast<std::uint32_t>(bit_of(v));
  return code;
}

std::vector<std::int8_t> decode_block(std::uint32_t code, int n) {
  if (n < 1 || n > 24) throw std::invalid_argument("decode_block: length must be 1..24");
  std::vector<std::int8_t> out(n);
  for (int i = 0; i < n; ++i)
    out[n - 1 - i] = ((code >> i) & 1) ? -1 : 1;
  return out;
}

SaturationResult saturation_scan(int n, std::uint64_t x_limit) {
  if (n < 1 || n > 24) throw std::invalid_argument("saturation_scan: need 1 <= n <= 24");
  if (x_limit < static_cast<std::uint64_t>(n))
    throw std::invalid_argument("saturation_scan: range shorter than the block");
  SaturationResult res;
  res.n = n;
  std::vector<bool> seen(std::size_t(1) << n, false);
  std::uint64_t distinct = 0;
  std::uint32_t mask = (1u << n) - 1;
  std::uint32_t code = 0;
  std::uint64_t filled = 0;  // entries folded into `code` so far
  for (std::uint64_t lo = 1; lo <= x_limit; lo += kSegment) {
    std::uint64_t hi = std::min(x_limit + 1, lo + kSegment);
    std::vector<std::int8_t> seg = signs_from_m(lo, hi);
    for (std::int8_t v : seg) {
      code = ((code << 1) | static_cast<std::uint32_t>(bit_of(v))) & mask;
      ++filled;
      if (filled >= static_cast<std::uint64_t>(n)) {
        ++res.scanned;
        if (!seen[code]) {
          seen[code] = true;
          ++distinct;
        }
      }
    }
  }
  res.present = distinct;
  if (distinct < (std::uint64_t(1) << n)) {
    for (std::uint32_t c = 0; c <= mask; ++c)
      if (!seen[c]) res.missing.push_back(c);
  }
  return res;
}

std::vector<std::int8_t> f_sequence(std::uint64_t limit) {
  std::vector<std::int8_t> out;
  out.reserve(limit);
  for (std::uint64_t lo = 1; lo <= limit; lo += kSegment) {
    std::uint64_t hi = std::min(limit + 1, lo + kSegment);
    std::vector<std::int8_t> seg = signs_from_m(lo, hi);
    out.insert(out.end(), seg.begin(), seg.end());
  }
  return out;
}

std::vector<std::int8_t> odd_residue_sequence(std::uint64_t limit) {
  std::vector<std::int8_t> out(limit);
  for (std::uint64_t i = 1; i <= limit; ++i)
    out[i - 1] = static_cast<std::int8_t>(arith::odd_residue_sign(i));
  return out;
}

std::vector<std::int8_t> catalan_mod2_sequence(std::uint64_t limit) {
  // the n-th Catalan number is odd exactly when n+1 is a power of two
  std::vector<std::int8_t> out(limit);
  for (std::uint64_t i = 1; i <= limit; ++i)
    out[i - 1] = (i & (i + 1)) == 0 ? 1 : -1;
  return out;
}

WitnessCertificate crt_witness(const std::vector<std::int8_t>& block,
                               const WitnessOptions& opts) {
  int n = static_cast<int>(block.size());
  if (n < 1 || n > 10)
    throw std::invalid_argument("crt_witness: block length must be 1..10");
  for (std::int8_t v : block)
    if (v != 1 && v != -1)
      throw std::invalid_argument("crt_witness: block entries must be +-1");

  WitnessCertificate cert;
  cert.block = block;

  // stage 1: look for the block inside the sieved prefix of f
  if (!opts.force_crt && opts.scan_limit >= static_cast<std::uint64_t>(n)) {
    std::uint32_t want = encode_block(block);
    std::uint32_t mask = (1u << n) - 1;
    std::uint32_t code = 0;
    std::uint64_t filled = 0;
    for (std::uint64_t lo = 1; lo <= opts.scan_limit; lo += kSegment) {
      std::uint64_t hi = std::min(opts.scan_limit + 1, lo + kSegment);
      std::vector<std::int8_t> seg = signs_from_m(lo, hi);
      for (std::size_t j = 0; j < seg.size(); ++j) {
        code = ((code << 1) | static_cast<std::uint32_t>(bit_of(seg[j]))) & mask;
        ++filled;
        if (filled >= static_cast<std::uint64_t>(n) && code == want) {
          std::uint64_t last = lo + j;      // index of f at the window end
          cert.x = mpz_class(static_cast<unsigned long>(last - n));
          cert.trace.via_scan = true;
          cert.trace.residue = cert.x;
          return cert;
        }
      }
    }
  }

  // stage 2: explicit CRT construction
  for (int i = 1; i <= n; ++i)
    if (arith::f_sign_u64(static_cast<std::uint64_t>(i)) != block[i - 1])
      cert.trace.failure_positions.push_back(i);

  std::vector<mpz_class> mods, rems;
  for (std::uint64_t p = 2; p <= static_cast<std::uint64_t>(n); ++p) {
    if (!arith::is_prime_u64(p)) continue;
    std::uint64_t pk = p;
    while (pk <= static_cast<std::uint64_t>(n) / p) pk *= p;  // largest power <= n
    mods.emplace_back(static_cast<unsigned long>(pk * p));    // p^{m+1}
    rems.emplace_back(0);
  }
  std::uint64_t next_candidate = std::max<std::uint64_t>(n, 2) + 1;
  for (int i : cert.trace.failure_positions) {
    std::uint64_t p = next_candidate;
    while (p % 4 != 3 || !arith::is_prime_u64(p)) ++p;
    next_candidate = p + 1;
    cert.trace.fresh.emplace_back(p, 2);  // v_p(x+i) is forced to exactly 2
    mpz_class p3 = mpz_class(static_cast<unsigned long>(p));
    p3 = p3 * p3 * p3;
    mpz_class rem = mpz_class(static_cast<unsigned long>(p)) *
                        mpz_class(static_cast<unsigned long>(p)) -
                    i;
    mods.push_back(p3);
    rems.push_back(rem % p3);
  }

  mpz_class M = 1, R = 0;
  for (std::size_t j = 0; j < mods.size(); ++j) {
    // merge R mod M with rems[j] mod mods[j] (moduli pairwise coprime)
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), M.get_mpz_t(),
               mods[j].get_mpz_t());
    mpz_class diff = rems[j] - R;
    mpz_class newM = M * mods[j];
    R = R + M * ((s * diff) % mods[j]);
    M = newM;
    R %= M;
    if (R < 0) R += M;
  }
  cert.trace.modulus = M;
  cert.trace.residue = R;

  for (long k = 0; k < opts.max_k; ++k) {
    mpz_class x = R + k * M;
    if (x <= 0) continue;
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      ok = arith::f_sign(x + i) == block[i - 1];
    if (ok) {
      cert.x = x;
      cert.trace.k = k;
      return cert;
    }
  }
  throw BudgetExceeded("crt_witness: no candidate x = R + kM verified within k < " +
                       std::to_string(opts.max_k));
}

bool verify_certificate(const WitnessCertificate& cert) {
  int n = static_cast<int>(cert.block.size());
  if (n < 1 || cert.x < 0) return false;
  for (int i = 1; i <= n; ++i)
    if (arith::f_sign(cert.x + i) != cert.block[i - 1]) return false;
  return true;
}

std::string certificate_to_json(const WitnessCertificate& cert) {
  nlohmann::json j;
  j["block"] = std::vector<int>(cert.block.begin(), cert.block.end());
  j["x"] = cert.x.get_str();
  nlohmann::json tr;
  tr["via_scan"] = cert.trace.via_scan;
  tr["failure_positions"] = cert.trace.failure_positions;
  nlohmann::json fresh = nlohmann::json::array();
  for (auto [p, m] : cert.trace.fresh) fresh.push_back({p, m});
  tr["fresh"] = fresh;
  tr["modulus"] = cert.trace.modulus.get_str();
  tr["residue"] = cert.trace.residue.get_str();
  tr["k"] = cert.trace.k;
  j["trace"] = tr;
  return j.dump(2);
}

}  // namespace vhlab::subword
