#pragma once
// =============================================================================
// Weighted word-counting engines.
//
// The central object: the generating multiset {x, x^-1, 8*t} of vH, i.e. the
// letters x, x^-1 with weight 1 and t with weight 8 (eight indistinguishable
// copies).  c_l = weighted number of length-l words evaluating to the
// identity; the weight of a word is the product of its letter weights.
//
// The reduced language R keeps only words with no x x^-1 or x^-1 x factor
// (t t is allowed, t being an involution on its own).  R splits by t-count:
//   R1: at most 4 t's, or exactly 6 t's two of which are adjacent,
//   R2: exactly 6 t's, none adjacent,
//   R3: at least 8 t's            (8^8 divides every R3 count).
//
// The DP state is (a,b,c, eps, t-stats); t-count is capped at 8 -- the split
// never distinguishes beyond 8, so all >=8 states merge.  Appending x moves a
// (mode eps=0) or b with c += a (mode eps=1); t toggles eps and multiplies the
// weight by 8.  States that cannot return to the identity in the remaining
// steps are pruned: |a|+|b| > remaining, or |c| > remaining*|a| + remaining^2/2.
//
// Counting rings: exact (unsigned 128-bit cells internally, arbitrary
// precision at the API -- the cell bound is weight-sum^len, so max_len <= 36
// for weight sum 10 and <= 52 for the 5-letter lazy walk), mod 2^K residues
// (K <= 32), and a double lane for probabilities (the lazy-walk return ratio
// l^2 * c_l / 5^l, which approaches 25/16).
//
// Determinism: every target cell is computed by a gather over its
// predecessors in a fixed order, so results are bit-identical for any worker
// count and any scheduling.  Tables are dense when the l-dependent bounds fit
// the memory budget and sparse (hashed) otherwise.
// =============================================================================
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vhlab/heis.hpp"

namespace vhlab::walk {

struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct RingSpec {
  enum class Kind { Exact, Mod2K, Real };
  Kind kind = Kind::Exact;
  int k = 24;  // modulus 2^k for Mod2K
  static RingSpec exact();
  static RingSpec mod2k(int k);  // 1 <= k <= 32
  static RingSpec real();
  static RingSpec parse(const std::string& s);  // "exact" | "modK" | "real"
  std::string to_string() const;
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

struct CountTable {
  RingSpec ring;
  // counts[l] for l = 0..max_len; exact values or residues in [0, 2^K)
  std::vector<mpz_class> counts;
  std::vector<double> reals;  // used by the real ring instead of counts
  std::size_t max_len() const {
    return (ring.kind == RingSpec::Kind::Real ? reals.size() : counts.size()) - 1;
  }
};

enum class Group { VH, H3Lazy };

struct GeneratorSet {
  Group group = Group::VH;
  // weights for the letters of the group's alphabet
  std::int64_t weight_x = 1, weight_xinv = 1, weight_t = 8;  // VH
  std::int64_t weight_y = 1, weight_yinv = 1, weight_e = 1;  // H3Lazy extras
  static GeneratorSet vh_default();
  static GeneratorSet h3_lazy();
};

struct EngineOptions {
  std::size_t memory_budget = std::size_t(4) << 30;  // bytes, both tables
  int threads = 0;          // 0 = use VHLAB_THREADS env or 1
  bool prune = true;        // cannot-return pruning (results never change)
  bool force_sparse = false;  // for testing the sparse fallback
};

// weighted counts of identity-evaluating words, lengths 0..max_len
CountTable count_closed(const GeneratorSet& gens, int max_len,
                        const RingSpec& ring, const EngineOptions& opts = {});

struct ReducedTables {
  CountTable r, r1, r2, r3;
};

// reduced-language split for (vH, {x,x^-1,8t}); lengths 0..max_len
ReducedTables count_reduced_split(int max_len, const RingSpec& ring,
                                  const EngineOptions& opts = {});

struct BruteTables {
  CountTable c, r, r1, r2, r3;  // exact ring
};

// enumerates all words (max_len <= 12); for H3Lazy only c is meaningful
BruteTables brute_force_closed(const GeneratorSet& gens, int max_len);

// probability lane for the lazy Heisenberg walk: returns l^2 * c_l / 5^l
double h3_lazy_ratio(int ell, const EngineOptions& opts = {});
// full table of c_l / 5^l for l = 0..max_len (real ring)
CountTable h3_lazy_prob_table(int max_len, const EngineOptions& opts = {});

}  // namespace vhlab::walk
